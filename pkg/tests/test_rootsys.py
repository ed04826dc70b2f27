import pytest
from hypothesis import given, strategies as st

from frobcluster.rootsys import Orientation, Root, RootSystem, diagram


def A(n):
    return diagram("A", n)


def r(text, n):
    return Root.parse(text, n)


def test_positive_roots_small():
    assert [str(a) for a in RootSystem(A(1)).positive_roots] == ["a1"]
    assert {str(a) for a in RootSystem(A(2)).positive_roots} == {"a1", "a2", "a1+a2"}
    pos3 = RootSystem(A(3)).positive_roots
    assert len(pos3) == 6 and r("a1+a2+a3", 3) in pos3


@pytest.mark.parametrize("family,rank,count,h", [
    ("A", 4, 10, 5), ("D", 4, 12, 6), ("D", 5, 20, 8), ("E", 6, 36, 12),
])
def test_root_counts_and_coxeter(family, rank, count, h):
    d = diagram(family, rank)
    rs = RootSystem(d)
    assert len(rs.positive_roots) == count
    assert d.coxeter_number == h
    assert len(rs.almost_positive) == count + rank


def test_d4_highest_root_has_2_at_branch():
    rs = RootSystem(diagram("D", 4))
    assert rs.highest_root.coeffs == (1, 2, 1, 1)


def test_simple_reflections():
    rs = RootSystem(A(2))
    assert rs.simple_reflection(0, r("a1", 2)) == r("-a1", 2)
    assert rs.simple_reflection(0, r("a2", 2)) == r("a1+a2", 2)


@given(st.integers(0, 3), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_reflection_is_involution(i, vec):
    rs = RootSystem(diagram("D", 4))
    assert rs.simple_reflection(i, rs.simple_reflection(i, vec)).coeffs == tuple(vec)


def test_tau_pm_examples_a3():
    q = A(3).bipartite_orientation()
    rs = RootSystem(q.diagram)
    assert str(q) == "1>2,3>2"
    assert rs.tau_plus(r("-a1", 3), q) == r("a1", 3)
    assert rs.tau_minus(r("a1", 3), q) == r("a1+a2", 3)
    assert rs.tau_minus(r("-a1", 3), q) == r("-a1", 3)


def test_tau_minus_a2_conflicting_example():
    # tau = tau_- tau_+ sends -a2 to a2; the composite read off the 3-cycle would
    # be a1+a2+a3, which disagrees with the definition
    q = A(3).bipartite_orientation()
    rs = RootSystem(q.diagram)
    assert rs.tau(r("-a2", 3), q) == r("a2", 3)


@pytest.mark.parametrize("family,rank,sizes", [
    ("A", 3, [3, 6]), ("D", 4, [4, 4, 4, 4]), ("E", 6, [7, 7, 14, 14]),
])
def test_tau_orbit_sizes(family, rank, sizes):
    q = diagram(family, rank).bipartite_orientation()
    rs = RootSystem(q.diagram)
    orbits = rs.tau_orbits(q)
    assert sorted(len(o) for o in orbits) == sizes
    assert sorted(a for o in orbits for a in o) == sorted(rs.almost_positive)


@pytest.mark.parametrize("family,rank", [("A", 1), ("A", 4), ("D", 5), ("E", 6), ("E", 7)])
def test_tau_pm_involutions(family, rank):
    q = diagram(family, rank).bipartite_orientation()
    rs = RootSystem(q.diagram)
    for a in rs.almost_positive:
        assert rs.tau_plus(rs.tau_plus(a, q), q) == a
        assert rs.tau_minus(rs.tau_minus(a, q), q) == a
        assert rs.is_almost_positive(rs.tau(a, q))


def test_multiplicity():
    assert RootSystem.multiplicity(r("a1+a2", 2), 0) == 1
    assert RootSystem.multiplicity(r("-a1", 2), 0) == -1
    assert RootSystem.multiplicity(r("-a1", 2), 1) == 0


def test_root_parse_and_format():
    assert str(r("a1+2a2+a3+a4", 4)) == "a1+2a2+a3+a4"
    assert str(r("-a3", 3)) == "-a3"
    with pytest.raises(ValueError):
        r("a1+b2", 2)


def test_orientation_parse_and_errors():
    d = A(3)
    q = Orientation.parse(d, "1>2,3>2")
    assert q.is_bipartite and q.is_source(0) and q.is_sink(1)
    with pytest.raises(ValueError):
        Orientation.parse(d, "1>3")
    with pytest.raises(ValueError):
        Orientation.parse(d, "1>2,2>3").sign()


def test_edges():
    d5 = diagram("D", 5)
    assert d5.adjacent(2, 4) and d5.adjacent(2, 3) and not d5.adjacent(3, 4)
    e6 = diagram("E", 6)
    assert e6.adjacent(0, 2) and e6.adjacent(1, 3) and not e6.adjacent(0, 1)
