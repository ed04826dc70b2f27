"""Simply-laced Dynkin diagrams, their root systems and the maps tau_+/tau_-.

Vertices are 0-based internally and rendered 1-based (``a1``, ``a2``, ...).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

PLUS = 1
MINUS = -1


@dataclass(frozen=True)
class DynkinDiagram:
    family: str
    rank: int
    edges: frozenset = field(init=False, compare=False)

    def __post_init__(self):
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        n = self.rank
        if fam == "A" and n >= 1:
            edges = [(i, i + 1) for i in range(n - 1)]
        elif fam == "D" and n >= 4:
            edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        elif fam == "E" and n in (6, 7, 8):
            # Bourbaki numbering: 1-3-4-5-..., with 2 attached to 4
            edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
        else:
            raise ValueError(f"no simply-laced Dynkin diagram {fam}{n}")
        object.__setattr__(self, "edges", frozenset(frozenset(e) for e in edges))

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def vertices(self) -> range:
        return range(self.rank)

    def adjacent(self, i: int, j: int) -> bool:
        return frozenset((i, j)) in self.edges

    def neighbours(self, i: int) -> list[int]:
        return sorted(j for j in self.vertices if self.adjacent(i, j))

    def pairing(self, i: int, j: int) -> int:
        if i == j:
            return 2
        return -1 if self.adjacent(i, j) else 0

    @property
    def coxeter_number(self) -> int:
        n = self.rank
        if self.family == "A":
            return n + 1
        if self.family == "D":
            return 2 * n - 2
        return {6: 12, 7: 18, 8: 30}[n]

    def bipartite_orientation(self) -> "Orientation":
        """Orientation with vertex 1 a source and all arrows from even to odd distance."""
        colour = {0: 0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.neighbours(v):
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
        arrows = []
        for e in sorted(tuple(sorted(e)) for e in self.edges):
            i, j = e
            arrows.append((i, j) if colour[i] == 0 else (j, i))
        return Orientation(self, tuple(sorted(arrows)))


@dataclass(frozen=True)
class Orientation:
    """A Dynkin quiver: the diagram together with one arrow per edge."""

    diagram: DynkinDiagram
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = {frozenset(a) for a in self.arrows}
        if len(seen) != len(self.arrows) or seen != set(self.diagram.edges):
            raise ValueError(f"arrows {self.arrows} do not orient {self.diagram.name}")

    @classmethod
    def parse(cls, diagram: DynkinDiagram, text: str) -> "Orientation":
        """Parse ``"1>2,3>2"`` (1-based, ``a>b`` meaning an arrow a to b)."""
        arrows = []
        for part in text.replace(" ", "").split(","):
            if not part:
                continue
            m = re.fullmatch(r"(\d+)([<>])(\d+)", part)
            if not m:
                raise ValueError(f"cannot parse arrow {part!r}")
            a, b = int(m.group(1)) - 1, int(m.group(3)) - 1
            arrows.append((a, b) if m.group(2) == ">" else (b, a))
        return cls(diagram, tuple(sorted(arrows)))

    def __str__(self) -> str:
        return ",".join(f"{i + 1}>{j + 1}" for i, j in self.arrows)

    @property
    def n(self) -> int:
        return self.diagram.rank

    def is_source(self, i: int) -> bool:
        return all(b != i for _, b in self.arrows)

    def is_sink(self, i: int) -> bool:
        return all(a != i for a, _ in self.arrows)

    def is_bipartite(self) -> bool:
        return all(self.is_source(i) or self.is_sink(i) for i in range(self.n))

    def sign(self) -> dict[int, int]:
        """The sign function: +1 at sources, -1 at sinks."""
        if not self.is_bipartite():
            raise ValueError(f"orientation {self} is not bipartite")
        # an isolated vertex (A1) counts as a source
        return {i: PLUS if self.is_source(i) else MINUS for i in range(self.n)}

    def reversed(self) -> "Orientation":
        return Orientation(self.diagram, tuple(sorted((j, i) for i, j in self.arrows)))

    def reflect_at(self, i: int) -> "Orientation":
        arrows = [(b, a) if i in (a, b) else (a, b) for a, b in self.arrows]
        return Orientation(self.diagram, tuple(sorted(arrows)))

    def topological_order(self) -> list[int]:
        indeg = {i: 0 for i in range(self.n)}
        for _, b in self.arrows:
            indeg[b] += 1
        order, ready = [], sorted(i for i in indeg if indeg[i] == 0)
        while ready:
            v = ready.pop(0)
            order.append(v)
            for a, b in self.arrows:
                if a == v:
                    indeg[b] -= 1
                    if indeg[b] == 0:
                        ready.append(b)
                        ready.sort()
        return order


_TERM = re.compile(r"([+-]?)(\d*)a(\d+)")


@dataclass(frozen=True, order=True)
class Root:
    coeffs: tuple[int, ...]

    @classmethod
    def simple(cls, i: int, rank: int, sign: int = 1) -> "Root":
        c = [0] * rank
        c[i] = sign
        return cls(tuple(c))

    @classmethod
    def parse(cls, text: str, rank: int) -> "Root":
        text = text.replace(" ", "").replace("α", "a")
        c = [0] * rank
        pos = 0
        for m in _TERM.finditer(text):
            if m.start() != pos:
                raise ValueError(f"cannot parse root {text!r}")
            k = int(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
            c[int(m.group(3)) - 1] += k
            pos = m.end()
        if pos != len(text) or not text:
            raise ValueError(f"cannot parse root {text!r}")
        return cls(tuple(c))

    def __str__(self) -> str:
        parts = []
        for i, k in enumerate(self.coeffs):
            if not k:
                continue
            sign = "-" if k < 0 else "+"
            mag = "" if abs(k) == 1 else str(abs(k))
            parts.append(f"{sign}{mag}a{i + 1}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else (s or "0")

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def is_positive(self) -> bool:
        return any(self.coeffs) and all(c >= 0 for c in self.coeffs)

    def is_negative_simple(self) -> bool:
        return sorted(self.coeffs)[0] == -1 and sum(1 for c in self.coeffs if c) == 1

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def _order_key(r: Root):
    return (r.height, tuple(-c for c in r.coeffs))


class RootSystem:
    """Roots of a simply-laced Dynkin diagram, generated by reflection closure."""

    def __init__(self, diagram: DynkinDiagram):
        self.diagram = diagram
        self.rank = diagram.rank

    def pairing(self, a: Sequence[int], b: Sequence[int]) -> int:
        d = self.diagram
        return sum(
            a[i] * b[j] * d.pairing(i, j)
            for i in range(self.rank)
            if a[i]
            for j in range(self.rank)
            if b[j]
        )

    def simple_root(self, i: int) -> Root:
        return Root.simple(i, self.rank)

    def simple_reflection(self, i: int, alpha: Root | Sequence[int]) -> Root:
        c = list(alpha.coeffs if isinstance(alpha, Root) else alpha)
        k = sum(c[j] * self.diagram.pairing(j, i) for j in range(self.rank))
        c[i] -= k
        return Root(tuple(c))

    @cached_property
    def positive_roots(self) -> list[Root]:
        found = {self.simple_root(i) for i in range(self.rank)}
        frontier = list(found)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(self.rank):
                    s = self.simple_reflection(i, r)
                    if s.is_positive() and s not in found:
                        found.add(s)
                        nxt.append(s)
            frontier = nxt
        return sorted(found, key=_order_key)

    @cached_property
    def almost_positive(self) -> list[Root]:
        return self.positive_roots + [-self.simple_root(i) for i in range(self.rank)]

    def is_almost_positive(self, alpha: Root) -> bool:
        return alpha in self._ap_set

    @cached_property
    def _ap_set(self) -> frozenset:
        return frozenset(self.almost_positive)

    @cached_property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @staticmethod
    def multiplicity(alpha: Root, i: int) -> int:
        return alpha.coeffs[i]

    def t_eps(self, eps: int, alpha: Root, orientation: Orientation) -> Root:
        """Product of the simple reflections at vertices of sign ``eps``.

        The reflections commute, so they are applied in increasing vertex order.
        """
        sign = orientation.sign()
        r = alpha
        for k in range(self.rank):
            if sign[k] == eps:
                r = self.simple_reflection(k, r)
        return r

    def tau_eps(self, eps: int, alpha: Root, orientation: Orientation) -> Root:
        if orientation.diagram != self.diagram:
            raise ValueError("orientation belongs to a different diagram")
        sign = orientation.sign()
        if not self.is_almost_positive(alpha):
            raise ValueError(f"{alpha} is not an almost positive root")
        if alpha.is_negative_simple():
            j = alpha.coeffs.index(-1)
            if sign[j] == -eps:
                return alpha
        out = self.t_eps(eps, alpha, orientation)
        assert self.is_almost_positive(out), (alpha, out)
        return out

    def tau_plus(self, alpha: Root, orientation: Orientation) -> Root:
        return self.tau_eps(PLUS, alpha, orientation)

    def tau_minus(self, alpha: Root, orientation: Orientation) -> Root:
        return self.tau_eps(MINUS, alpha, orientation)

    def tau(self, alpha: Root, orientation: Orientation) -> Root:
        """tau_- after tau_+."""
        return self.tau_minus(self.tau_plus(alpha, orientation), orientation)

    def tau_orbits(self, orientation: Orientation) -> list[list[Root]]:
        seen: set[Root] = set()
        orbits = []
        for a in self.almost_positive:
            if a in seen:
                continue
            orbit = [a]
            seen.add(a)
            b = self.tau(a, orientation)
            while b != a:
                orbit.append(b)
                seen.add(b)
                b = self.tau(b, orientation)
            orbits.append(orbit)
        return orbits

    def tau_pm_chains(self, orientation: Orientation) -> list[list[Root]]:
        """Each tau-orbit laid out as the alternating tau_+/tau_- chain.

        A chain starts at a fixed point of tau_- when the orbit has one, so it
        reads ``r0 <-tau_+-> r1 <-tau_-> r2 ...`` like a zig-zag of involutions.
        """
        chains = []
        for orbit in self.tau_orbits(orientation):
            start = next(
                (r for r in orbit if self.tau_minus(r, orientation) == r), orbit[0]
            )
            chain = [start]
            step = PLUS
            while True:
                nxt = self.tau_eps(step, chain[-1], orientation)
                if nxt == chain[-1] or nxt in chain:
                    break
                chain.append(nxt)
                step = -step
            chains.append(chain)
        return chains


def diagram(family: str, rank: int) -> DynkinDiagram:
    return DynkinDiagram(family, rank)


def roots_from_strings(texts: Iterable[str], rank: int) -> list[Root]:
    return [Root.parse(t, rank) for t in texts]
