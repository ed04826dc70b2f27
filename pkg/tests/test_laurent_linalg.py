from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from frobcluster.laurent import LaurentPoly, exact_divide
from frobcluster.linalg import SparseBasis, nullspace, rank, rref, solve

terms = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(0, 2)),
    st.integers(-3, 3).filter(bool),
    min_size=1, max_size=4,
)


@settings(max_examples=60)
@given(terms, terms)
def test_divide_product(a, b):
    pa, pb = LaurentPoly(3, a), LaurentPoly(3, b)
    assert exact_divide(pa * pb, pb) == pa


def test_divide_not_exact():
    x = LaurentPoly.variable(2, 0)
    y = LaurentPoly.variable(2, 1)
    with pytest.raises(ArithmeticError):
        exact_divide(x + LaurentPoly.one(2), x + y)
    with pytest.raises(ZeroDivisionError):
        exact_divide(x, LaurentPoly(2))


def test_monomial_denominator():
    x = LaurentPoly.variable(2, 0)
    y = LaurentPoly.variable(2, 1)
    p = exact_divide(y + LaurentPoly.one(2), x)
    assert p.min_exponents() == (-1, 0)
    assert p.format(["x", "y"])


def test_rank_and_nullspace():
    a = [[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(6)]]
    assert rank(a) == 1
    ns = nullspace(a, 3)
    assert len(ns) == 2
    for v in ns:
        assert all(sum(r[j] * v[j] for j in range(3)) == 0 for r in a)
    _, piv = rref(a)
    assert piv == [0]


def test_solve():
    a = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
    assert solve(a, [Fraction(3), Fraction(1)], 2) == [2, 1]
    assert solve([[Fraction(0)]], [Fraction(1)], 1) is None


def test_sparse_basis():
    sb = SparseBasis()
    assert sb.add({0: Fraction(1), 2: Fraction(1)})
    assert sb.add({2: Fraction(1)})
    assert not sb.add({0: Fraction(2)})
    assert len(sb.pivots()) == 2
