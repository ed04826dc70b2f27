"""Configurations, regular Nakajima categories R_C and their F-orbit categories.

A configuration C is an F-invariant set of vertices of ZQ, stored as a set of
F-orbit representatives.  The quiver ZQ~_C keeps the frozen vertex (i', n)
exactly when (i, n) lies in C; all other frozen vertices are removed, which
is the same as killing their identities in R.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .linalg import SparseBasis
from .meshcat import (
    HappelCoordinates,
    HomCategory,
    RepetitionQuiver,
    Vertex,
    WindowError,
    sigma,
    tau,
)
from .rootsys import Orientation


@lru_cache(maxsize=None)
def happel(q: Orientation) -> HappelCoordinates:
    return HappelCoordinates(q)


class OrbitMap:
    """F = Sigma^n tau^-1 on the vertices of ZQ~ with canonical orbit representatives."""

    def __init__(self, q: Orientation, n: int = 1):
        if n < 1:
            raise ValueError("F-power must be a positive integer")
        self.q = q
        self.n = n
        self.hc = happel(q)
        self._cache: dict[tuple[Vertex, int], Vertex] = {}
        # F shifts p by an amount that depends only on the tau-orbit
        self.step = {}
        for i in range(q.n):
            for frozen in (False, True):
                v = Vertex(i, 0, frozen)
                self.step[(i, frozen)] = self.F(v).p - v.p
        if min(self.step.values()) < 1:
            raise AssertionError("F does not move vertices forward")

    def F(self, v: Vertex, power: int = 1) -> Vertex:
        key = (v, power)
        if key not in self._cache:
            self._cache[key] = self.hc.F(v, self.n, power)
        return self._cache[key]

    def canonical(self, v: Vertex) -> Vertex:
        """The orbit element with the smallest p >= 0."""
        while v.p < 0:
            v = self.F(v)
        while True:
            w = self.F(v, -1)
            if w.p < 0:
                return v
            v = w

    def period_bound(self) -> int:
        return max(self.step.values()) + 1

    def orbit_reps(self, frozen: bool) -> list[Vertex]:
        reps = {
            self.canonical(Vertex(i, p, frozen))
            for i in range(self.q.n)
            for p in range(self.period_bound())
        }
        return sorted(reps, key=lambda v: (v.p, v.i))


@dataclass
class Configuration:
    orientation: Orientation
    f_power: int = 1
    reps: frozenset | None = None  # None: the whole of ZQ_0
    fmap: OrbitMap = field(init=False, repr=False)

    def __post_init__(self):
        self.fmap = OrbitMap(self.orientation, self.f_power)
        if self.reps is not None:
            self.reps = frozenset(self.fmap.canonical(v) for v in self.reps)
            if any(v.frozen for v in self.reps):
                raise ValueError("configurations consist of non-frozen vertices")

    @property
    def is_full(self) -> bool:
        return self.reps is None

    def contains(self, v: Vertex) -> bool:
        if v.frozen:
            return False
        return self.reps is None or self.fmap.canonical(v) in self.reps

    def orbit_count(self) -> int:
        return len(self.fmap.orbit_reps(False)) if self.reps is None else len(self.reps)

    def describe(self) -> str:
        if self.reps is None:
            return "full"
        return ";".join(str(v) for v in sorted(self.reps, key=lambda v: (v.p, v.i)))


def parse_configuration(text: str, q: Orientation, f_power: int = 1) -> Configuration:
    """``full`` or a list like ``(1,0);(2,1)`` of orbit representatives."""
    text = text.strip()
    if text == "full":
        return Configuration(q, f_power)
    reps = []
    for part in re.findall(r"\([^)]*\)", text):
        v = Vertex.parse(part)
        if v.frozen or not 0 <= v.i < q.n:
            raise ValueError(f"bad configuration vertex {part}")
        reps.append(v)
    if not reps and text:
        raise ValueError(f"cannot parse configuration {text!r}")
    return Configuration(q, f_power, frozenset(reps))


@dataclass
class AdmissibilityReport:
    admissible: bool
    witnesses: dict[Vertex, Vertex]
    failing: Vertex | None = None


def is_admissible(config: Configuration) -> AdmissibilityReport:
    """Every vertex must map non-trivially (in the mesh category of ZQ) into C."""
    rq = RepetitionQuiver(config.orientation)
    homs = HomCategory(rq)
    witnesses = {}
    for x in config.fmap.orbit_reps(False):
        found = None
        for c in homs.engine(x).support():
            if config.contains(c):
                found = c
                break
        if found is None:
            return AdmissibilityReport(False, witnesses, x)
        witnesses[x] = found
    return AdmissibilityReport(True, witnesses)


class InfiniteHom(WindowError):
    pass


class StableEngine:
    """The ideal of maps out of x that factor through a kept frozen vertex.

    A path through a frozen vertex either ends there or extends a path that
    already passed one, so the ideal at y is the push-forward of the ideals
    at the predecessors of y (everything, when y is frozen).
    """

    def __init__(self, eng):
        self.eng = eng
        self.x = eng.x
        self.ideal: dict[Vertex, SparseBasis] = {}
        self.done = self.x.p - 1
        self.vanish_from: int | None = None

    def _layer(self, p: int) -> None:
        eng, rq = self.eng, self.eng.rq
        eng.ensure(p)
        stable_zero = True
        for z in rq.layer(p):
            d = eng.hom_dim(z)
            sb = SparseBasis()
            if d and z.frozen:
                for k in range(d):
                    sb.add({k: Fraction(1)})
            elif d:
                for w in rq.predecessors(z):
                    act = eng.action.get((w, z))
                    if act is None or w not in self.ideal:
                        continue
                    for row in list(self.ideal[w].rows.values()):
                        vec: dict[int, Fraction] = {}
                        for k, c in row.items():
                            for t, e in act[k].items():
                                vec[t] = vec.get(t, 0) + c * e
                        sb.add(vec)
            self.ideal[z] = sb
            if not z.frozen and d > len(sb):
                stable_zero = False
        self.done = p
        if stable_zero and p > self.x.p:
            self.vanish_from = p

    def ensure(self, p: int) -> None:
        while self.done < p and self.vanish_from is None:
            self._layer(self.done + 1)

    def dim(self, y: Vertex) -> int:
        if y.p < self.x.p or y.frozen:
            return 0
        self.ensure(y.p)
        if y not in self.ideal:
            return 0
        return self.eng.hom_dim(y) - len(self.ideal[y])


class ConfigQuiver:
    """ZQ~_C with its hom category R_C and the orbit map F."""

    def __init__(self, config: Configuration):
        self.config = config
        self.q = config.orientation
        self.fmap = config.fmap
        self.rq = RepetitionQuiver(self.q, True, lambda f: config.contains(sigma(f)))
        self.homs = HomCategory(self.rq)
        self._stable: dict[Vertex, StableEngine] = {}

    def kept_frozen(self, p_min: int, p_max: int) -> list[Vertex]:
        return [
            Vertex(i, p, True)
            for p in range(p_min, p_max + 1)
            for i in range(self.q.n)
            if self.rq.exists(Vertex(i, p, True))
        ]

    def hom_dim(self, x: Vertex, y: Vertex) -> int:
        if not (self.rq.exists(x) and self.rq.exists(y)):
            return 0
        return self.homs.hom_dim(x, y)

    def stable(self, x: Vertex) -> "StableEngine":
        if x not in self._stable:
            self._stable[x] = StableEngine(self.homs.engine(x))
        return self._stable[x]

    def stable_hom_dim(self, x: Vertex, y: Vertex) -> int:
        """Homs modulo those factoring through a kept frozen (projective) vertex."""
        if x.frozen or y.frozen or not self.rq.exists(y):
            return 0
        return self.stable(x).dim(y)

    def stable_components(self, x: Vertex, y: Vertex) -> list[tuple[int, Vertex, int]]:
        """Non-zero terms (l, F^l y, dim) of the stable orbit hom sum."""
        if x.frozen or y.frozen:
            return []
        se = self.stable(x)
        l = 0
        while self.fmap.F(y, l).p >= x.p:
            l -= 1
        out = []
        while True:
            v = self.fmap.F(y, l)
            se.ensure(v.p)
            if se.vanish_from is not None and v.p >= se.vanish_from:
                break
            d = se.dim(v)
            if d:
                out.append((l, v, d))
            l += 1
        return out

    def orbit_hom_series(self, x: Vertex, y: Vertex, l_max: int) -> list[int]:
        """dim Hom_R(x, F^l y) for l = 0..l_max; the terms with l < 0 vanish."""
        return [self.hom_dim(x, self.fmap.F(y, l)) for l in range(l_max + 1)]

    def orbit_hom_dim(self, x: Vertex, y: Vertex) -> int:
        """Sum over l of dim Hom_R(x, F^l y) when only finitely many terms are
        non-zero; raises InfiniteHom when the homs out of x do not vanish."""
        for l in range(-3, 0):
            if self.hom_dim(x, self.fmap.F(x, l)):
                raise AssertionError(f"Hom(X, F^{l} X) does not vanish at {x}")
        eng = self.homs.engine(x)
        try:
            eng.ensure(x.p + eng.max_span)
        except WindowError:
            pass
        if eng.vanish_from is None:
            raise InfiniteHom(f"Hom_R({x}, -) does not vanish; the orbit hom is a product")
        total = 0
        l = 0
        while self.fmap.F(y, l).p >= x.p:
            l -= 1
        while self.fmap.F(y, l).p < eng.vanish_from:
            total += self.hom_dim(x, self.fmap.F(y, l))
            l += 1
        return total

    def ext1(self, x: Vertex, y: Vertex) -> int:
        """Orbit ext^1: stable orbit homs from x into Sigma y; zero at frozen objects."""
        if x.frozen or y.frozen:
            return 0
        return sum(d for _, _, d in self.stable_components(x, self.fmap.hc.Sigma(y)))

    def mesh_exactness(self, reps: list[Vertex]) -> list[str]:
        """Each non-frozen vertex z carries exactly one independent relation."""
        bad = []
        for z in reps:
            if z.frozen:
                continue
            mids = [w for w in self.rq.predecessors(z) if self.rq.exists(w)]
            if len(mids) - self.hom_dim(tau(z), z) != 1:
                bad.append(str(z))
        return bad


def build_config_quiver(config: Configuration, check: bool = True) -> ConfigQuiver:
    if check:
        rep = is_admissible(config)
        if not rep.admissible:
            raise ValueError(f"configuration is not admissible at {rep.failing}")
    return ConfigQuiver(config)


@dataclass
class OrbitQuiver:
    cq: ConfigQuiver
    vertices: list[Vertex]
    arrows: Counter

    @property
    def mutable(self) -> list[Vertex]:
        return [v for v in self.vertices if not v.frozen]

    @property
    def frozen(self) -> list[Vertex]:
        return [v for v in self.vertices if v.frozen]

    def to_dot(self, labels: dict[Vertex, str] | None = None) -> str:
        name = (lambda v: labels[v]) if labels else str
        lines = ["digraph {"]
        for v in self.vertices:
            shape = "box" if v.frozen else "plaintext"
            lines.append(f'  "{name(v)}" [shape={shape}];')
        for (u, v), k in sorted(self.arrows.items(), key=lambda t: (str(t[0][0]), str(t[0][1]))):
            for _ in range(k):
                lines.append(f'  "{name(u)}" -> "{name(v)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def orbit_quiver(cq: ConfigQuiver) -> OrbitQuiver:
    fm = cq.fmap
    verts = fm.orbit_reps(False)
    verts += [v for v in fm.orbit_reps(True) if cq.rq.exists(v)]
    # F must permute the kept frozen vertices
    for v in verts:
        if not cq.rq.exists(fm.F(v)):
            raise AssertionError(f"F does not preserve the configuration at {v}")
    arrows: Counter = Counter()
    for u in verts:
        for w in cq.rq.successors(u):
            if cq.rq.exists(w):
                arrows[(u, fm.canonical(w))] += 1
    return OrbitQuiver(cq, verts, arrows)


def full_config_quiver(q: Orientation, f_power: int = 1) -> ConfigQuiver:
    return ConfigQuiver(Configuration(q, f_power))


__all__ = [
    "OrbitMap",
    "Configuration",
    "parse_configuration",
    "AdmissibilityReport",
    "is_admissible",
    "InfiniteHom",
    "StableEngine",
    "ConfigQuiver",
    "build_config_quiver",
    "OrbitQuiver",
    "orbit_quiver",
    "full_config_quiver",
    "happel",
]
