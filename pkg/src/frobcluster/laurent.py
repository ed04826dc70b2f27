"""Integer Laurent polynomials in a fixed list of variables.

A polynomial is a mapping from exponent tuples to non-zero integers.  Cluster
variables and coefficient generators share one variable list, so the
coefficient ring ZP of a geometric cluster algebra is just the sub-ring in the
frozen variables.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exp = tuple[int, ...]


class LaurentPoly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exp, int] | None = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError("exponent length mismatch")
            if c:
                clean[tuple(e)] = int(c)
        self.terms: dict[Exp, int] = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "LaurentPoly":
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(e)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls.monomial([0] * nvars)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.nvars, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, out)

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exps``."""
        return LaurentPoly(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def min_exponents(self) -> Exp:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def denominator(self, variables: Iterable[int]) -> dict[int, int]:
        """Exponents of the monomial denominator in the given variables."""
        lo = self.min_exponents()
        return {i: max(0, -lo[i]) for i in variables}

    def substitute(self, images: Sequence["LaurentPoly"]) -> "LaurentPoly":
        """Replace variable i by ``images[i]`` (monomial images only)."""
        if not all(img.is_monomial() for img in images):
            raise ValueError("only monomial substitutions are supported")
        target_n = images[0].nvars if images else 0
        out: dict[Exp, int] = {}
        for e, c in self.terms.items():
            exp = [0] * target_n
            coeff = c
            for i, k in enumerate(e):
                if k:
                    (ie, ic), = images[i].terms.items()
                    if k < 0 and abs(ic) != 1:
                        raise ValueError("cannot invert a non-unit coefficient")
                    coeff *= ic ** abs(k)
                    for t in range(target_n):
                        exp[t] += k * ie[t]
            out[tuple(exp)] = out.get(tuple(exp), 0) + coeff
        return LaurentPoly(target_n, out)

    def format(self, names: Sequence[str], mul: str = "·") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(names[i])
                elif k:
                    factors.append(f"{names[i]}^{k}")
            body = mul.join(factors)
            mag = abs(c)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}{mul}{body}"
            parts.append(("-" if c < 0 else "+", body))
        text = "".join(f" {s} {b}" for s, b in parts).strip()
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def exact_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient ``num / den``; raises ArithmeticError when it is not Laurent."""
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    n = num.nvars
    if not num:
        return LaurentPoly(n)
    # strip the monomial content of both sides, leaving honest polynomials
    lo_n, lo_d = num.min_exponents(), den.min_exponents()
    a = num.shift([-v for v in lo_n])
    b = den.shift([-v for v in lo_d])
    lead_e, lead_c = max(b.terms.items())
    rem = {e: Fraction(c) for e, c in a.terms.items()}
    quot: dict[Exp, Fraction] = {}
    while rem:
        e, c = max(rem.items())
        diff = tuple(x - y for x, y in zip(e, lead_e))
        if min(diff) < 0:
            raise ArithmeticError("division is not exact in the Laurent ring")
        q = c / lead_c
        quot[diff] = quot.get(diff, 0) + q
        for be, bc in b.terms.items():
            key = tuple(x + y for x, y in zip(be, diff))
            v = rem.get(key, 0) - q * bc
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    if any(q.denominator != 1 for q in quot.values()):
        raise ArithmeticError("quotient has non-integral coefficients")
    out = LaurentPoly(n, {e: int(q) for e, q in quot.items()})
    return out.shift([x - y for x, y in zip(lo_n, lo_d)])
