"""Repetition quivers, Happel coordinates and mesh-category hom spaces.

Vertices of ZQ are pairs (i, p); the framed quiver adds frozen vertices (i', p)
with arrows (i, p) -> (i', p) -> (i, p + 1).  Two independent hom computations
live here: a literal one (enumerate paths, span all mesh relations) and a
layer-by-layer one (each hom space is a cokernel of the previous ones).  The
derived-category side delegates to :mod:`repmod`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, NamedTuple

from . import repmod
from .linalg import SparseBasis
from .rootsys import Orientation, Root, RootSystem


class WindowError(RuntimeError):
    """A computation would need vertices outside the allowed window."""


class Vertex(NamedTuple):
    i: int
    p: int
    frozen: bool = False

    def __str__(self) -> str:
        return f"({self.i + 1}{chr(39) if self.frozen else ''},{self.p})"

    @classmethod
    def parse(cls, text: str) -> "Vertex":
        body = text.strip().strip("()")
        a, b = (s.strip() for s in body.split(","))
        frozen = a.endswith("'")
        return cls(int(a.rstrip("'")) - 1, int(b), frozen)


def sigma(v: Vertex) -> Vertex:
    """(i, n) -> (i', n - 1) and (i', n) -> (i, n)."""
    return Vertex(v.i, v.p, False) if v.frozen else Vertex(v.i, v.p - 1, True)


def sigma_inv(v: Vertex) -> Vertex:
    return Vertex(v.i, v.p + 1, False) if v.frozen else Vertex(v.i, v.p, True)


def tau(v: Vertex, k: int = 1) -> Vertex:
    return Vertex(v.i, v.p - k, v.frozen)


class RepetitionQuiver:
    """The infinite quiver ZQ (or ZQ~ when framed), optionally with some frozen
    vertices removed.

    ``keep_frozen`` decides which frozen vertices exist; the mesh relators are
    imposed at every non-frozen vertex (at every vertex when unframed).
    """

    def __init__(
        self,
        q: Orientation,
        framed: bool = False,
        keep_frozen: Callable[[Vertex], bool] | None = None,
    ):
        self.q = q
        self.n = q.n
        self.framed = framed
        self.keep_frozen = keep_frozen or (lambda v: True)
        self.topo = q.topological_order()
        self._pos = {v: k for k, v in enumerate(self.topo)}
        self.out_q = defaultdict(list)
        self.in_q = defaultdict(list)
        for a, b in q.arrows:
            self.out_q[a].append(b)
            self.in_q[b].append(a)

    def exists(self, v: Vertex) -> bool:
        if not 0 <= v.i < self.n:
            return False
        if v.frozen:
            return self.framed and self.keep_frozen(v)
        return True

    def predecessors(self, v: Vertex) -> list[Vertex]:
        i, p = v.i, v.p
        if v.frozen:
            return [Vertex(i, p)]
        out = [Vertex(k, p) for k in self.in_q[i]]
        out += [Vertex(k, p - 1) for k in self.out_q[i]]
        if self.framed:
            f = Vertex(i, p - 1, True)
            if self.exists(f):
                out.append(f)
        return out

    def successors(self, v: Vertex) -> list[Vertex]:
        i, p = v.i, v.p
        if v.frozen:
            return [Vertex(i, p + 1)]
        out = [Vertex(k, p) for k in self.out_q[i]]
        out += [Vertex(k, p + 1) for k in self.in_q[i]]
        if self.framed:
            f = Vertex(i, p, True)
            if self.exists(f):
                out.append(f)
        return out

    def has_relation(self, v: Vertex) -> bool:
        return not v.frozen

    def order_key(self, v: Vertex):
        """A linear extension of the arrow order."""
        return (v.p, 1 if v.frozen else 0, self._pos[v.i])

    def layer(self, p: int) -> list[Vertex]:
        out = [Vertex(i, p) for i in self.topo]
        if self.framed:
            out += [Vertex(i, p, True) for i in self.topo if self.exists(Vertex(i, p, True))]
        return out

    def arrow_label(self, u: Vertex, v: Vertex) -> str:
        if u.frozen:
            return f"sigma(e{v.i + 1},{v.p})"
        if v.frozen:
            return f"e{u.i + 1},{u.p}"
        if u.p == v.p:
            return f"a{u.i + 1}{v.i + 1},{u.p}"
        return f"sigma(a{v.i + 1}{u.i + 1},{v.p})"


@dataclass
class TranslationQuiver:
    """A finite window of ZQ or ZQ~."""

    rq: RepetitionQuiver
    p_min: int
    p_max: int
    vertices: list[Vertex] = field(default_factory=list)
    arrows: list[tuple[Vertex, Vertex, str]] = field(default_factory=list)

    @property
    def framed(self) -> bool:
        return self.rq.framed

    def contains(self, v: Vertex) -> bool:
        return self.p_min <= v.p <= self.p_max and self.rq.exists(v)

    def to_dot(self) -> str:
        lines = ["digraph {"]
        for v in self.vertices:
            shape = "box" if v.frozen else "plaintext"
            lines.append(f'  "{v}" [shape={shape}];')
        for u, v, lab in self.arrows:
            lines.append(f'  "{u}" -> "{v}" [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_zq(q: Orientation, p_min: int, p_max: int, framed: bool = False,
             keep_frozen: Callable[[Vertex], bool] | None = None) -> TranslationQuiver:
    if p_min > p_max:
        raise ValueError("empty window")
    rq = RepetitionQuiver(q, framed, keep_frozen)
    verts = [v for p in range(p_min, p_max + 1) for v in rq.layer(p)]
    tq = TranslationQuiver(rq, p_min, p_max, verts)
    for v in verts:
        for w in rq.successors(v):
            if tq.contains(w):
                tq.arrows.append((v, w, rq.arrow_label(v, w)))
    return tq


class DerivedPoint(NamedTuple):
    root: Root
    shift: int

    def __str__(self) -> str:
        return f"S^{self.shift} M_{self.root}" if self.shift else f"M_{self.root}"


class HappelCoordinates:
    """Knitting of ZQ from the projective slice (i, 0) -> P(i).

    Each vertex gets the class of its object in the Grothendieck group; the
    class is +-(a positive root) and its sign flips exactly where the shift
    changes along a tau-orbit.
    """

    def __init__(self, q: Orientation):
        self.q = q
        self.rs = RootSystem(q.diagram)
        self.h = q.diagram.coxeter_number
        self.rq = RepetitionQuiver(q)
        self._cls: dict[Vertex, tuple[int, ...]] = {}
        self._shift: dict[Vertex, int] = {}
        self._lo = self._hi = 0
        self._roots = set(self.rs.positive_roots)
        for i in range(q.n):
            v = Vertex(i, 0)
            self._cls[v] = repmod.projective_dims(q, i).coeffs
            self._shift[v] = 0
        for i in self.rq.topo:
            self._check(Vertex(i, 0))
        self._modules: dict[Root, repmod.QuiverRep] = {}

    def _check(self, v: Vertex) -> None:
        c = self._cls[v]
        r = Root(tuple(abs(x) for x in c))
        if r not in self._roots or (any(x > 0 for x in c) and any(x < 0 for x in c)):
            raise AssertionError(f"knitting produced {c} at {v}: not a signed positive root")

    def _sign(self, v: Vertex) -> int:
        return 1 if sum(self._cls[v]) > 0 else -1

    def _extend_up(self) -> None:
        p = self._hi + 1
        for i in self.rq.topo:
            v = Vertex(i, p)
            acc = [-x for x in self._cls[Vertex(i, p - 1)]]
            for w in self.rq.predecessors(v):
                acc = [a + b for a, b in zip(acc, self._cls[w])]
            self._cls[v] = tuple(acc)
            self._check(v)
            prev = Vertex(i, p - 1)
            self._shift[v] = self._shift[prev] + (self._sign(v) != self._sign(prev))
        self._hi = p

    def _extend_down(self) -> None:
        p = self._lo - 1
        for i in reversed(self.rq.topo):
            v = Vertex(i, p)
            up = Vertex(i, p + 1)
            acc = [-x for x in self._cls[up]]
            for w in self.rq.predecessors(up):
                if w != v:
                    acc = [a + b for a, b in zip(acc, self._cls[w])]
            # d(tau x) = sum of middles - d(x) for x = (i, p + 1)
            self._cls[v] = tuple(acc)
            self._check(v)
            self._shift[v] = self._shift[up] - (self._sign(v) != self._sign(up))
        self._lo = p

    def _ensure(self, p: int) -> None:
        while p > self._hi:
            self._extend_up()
        while p < self._lo:
            self._extend_down()

    def point(self, v: Vertex) -> DerivedPoint:
        if v.frozen:
            raise ValueError("frozen vertices have no Happel coordinate")
        self._ensure(v.p)
        c = self._cls[v]
        return DerivedPoint(Root(tuple(abs(x) for x in c)), self._shift[v])

    def klass(self, v: Vertex) -> tuple[int, ...]:
        self._ensure(v.p)
        return self._cls[v]

    def find(self, root: Root, shift: int = 0) -> Vertex:
        """The vertex carrying Sigma^shift M_root."""
        base = self._module_vertex(root)
        v = base
        for _ in range(abs(shift)):
            v = self.Sigma(v) if shift > 0 else self.Sigma_inv(v)
        return v

    def _module_vertex(self, root: Root) -> Vertex:
        for p in range(-self.h - 1, self.h + 2):
            self._ensure(p)
            for i in range(self.q.n):
                v = Vertex(i, p)
                if self._shift[v] == 0 and self.point(v).root == root:
                    return v
        raise WindowError(f"no vertex of ZQ carries M_{root}")

    @cached_property
    def nu_data(self) -> dict[int, tuple[int, int]]:
        """i -> (pi(i), q_i) with nu(i, 0) = (pi(i), q_i), the vertex of I(i)."""
        out = {}
        for i in range(self.q.n):
            v = self._module_vertex(repmod.injective_dims(self.q, i))
            out[i] = (v.i, v.p)
        return out

    def nu(self, v: Vertex) -> Vertex:
        j, qi = self.nu_data[v.i]
        if v.frozen:
            return sigma(self.nu(sigma_inv(v)))
        return Vertex(j, v.p + qi)

    def nu_inv(self, v: Vertex) -> Vertex:
        if v.frozen:
            return sigma(self.nu_inv(sigma_inv(v)))
        for i, (j, qi) in self.nu_data.items():
            if j == v.i:
                return Vertex(i, v.p - qi)
        raise AssertionError("nu is not a bijection")

    def Sigma(self, v: Vertex) -> Vertex:
        """Sigma = tau^-1 nu; extended to frozen vertices through sigma."""
        return tau(self.nu(v), -1)

    def Sigma_inv(self, v: Vertex) -> Vertex:
        return self.nu_inv(tau(v, 1))

    def F(self, v: Vertex, n: int = 1, power: int = 1) -> Vertex:
        """F(n) = Sigma^n tau^-1 applied ``power`` times (negative allowed)."""
        for _ in range(abs(power)):
            if power > 0:
                v = tau(v, -1)
                for _ in range(n):
                    v = self.Sigma(v)
            else:
                for _ in range(n):
                    v = self.Sigma_inv(v)
                v = tau(v, 1)
        return v

    def check_sigma_squared(self, vertices: Iterable[Vertex]) -> list[str]:
        """Sigma^2 = tau^-h on the given vertices; returns violations."""
        bad = []
        for v in vertices:
            if self.Sigma(self.Sigma(v)) != tau(v, -self.h):
                bad.append(str(v))
        return bad

    # derived-category homs through explicit modules

    def module(self, root: Root) -> repmod.QuiverRep:
        if root not in self._modules:
            self._modules[root] = repmod.build_indecomposable(self.q, root)
        return self._modules[root]

    def hom_dim_DQ(self, x: Vertex, y: Vertex) -> int:
        a, s = self.point(x)
        b, t = self.point(y)
        if t == s:
            return repmod.hom_dim(self.module(a), self.module(b))
        if t == s + 1:
            return repmod.ext1_dim(self.module(a), self.module(b))
        return 0


# literal mesh-category homs


@dataclass
class PathClasses:
    dim: int
    paths: list[tuple[Vertex, ...]]
    basis: list[tuple[Vertex, ...]]  # representatives of a basis of the quotient


class LiteralMesh:
    """Hom spaces by brute force: all paths modulo the span of u r_z v.

    With ``certify`` on, a pair whose p-distance exceeds ``h`` is settled by
    checking that every hom from x into one full intermediate slice vanishes
    (every longer path passes through that slice).
    """

    def __init__(self, tq: TranslationQuiver, h: int | None = None):
        self.tq = tq
        self.rq = tq.rq
        self.h = h if h is not None else tq.rq.q.diagram.coxeter_number
        self._paths: dict[tuple[Vertex, Vertex], list[tuple[Vertex, ...]]] = {}
        self._cert: dict[Vertex, int | None] = {}

    def paths(self, x: Vertex, y: Vertex) -> list[tuple[Vertex, ...]]:
        key = (x, y)
        if key in self._paths:
            return self._paths[key]
        if x == y:
            out = [(x,)]
        elif y.p < x.p or not self.tq.contains(y):
            out = []
        else:
            out = []
            for w in self.rq.predecessors(y):
                if self.tq.contains(w) and w.p >= x.p:
                    out.extend(pth + (y,) for pth in self.paths(x, w))
        self._paths[key] = out
        return out

    def _relates(self, z: Vertex) -> bool:
        return self.rq.has_relation(z)

    def classes(self, x: Vertex, y: Vertex) -> PathClasses:
        for v in (x, y):
            if not self.tq.contains(v):
                raise WindowError(f"{v} lies outside the window")
        paths = self.paths(x, y)
        if not paths:
            return PathClasses(0, [], [])
        index = {pth: k for k, pth in enumerate(paths)}
        sb = SparseBasis()
        # candidate relation vertices: on some path x -> y
        inner = {v for pth in paths for v in pth}
        for z in sorted(inner, key=self.rq.order_key):
            if not self._relates(z):
                continue
            tz = tau(z)
            if not self.tq.contains(tz) or tz.p < x.p:
                continue
            before = self.paths(x, tz)
            if not before:
                continue
            after = self.paths(z, y)
            mids = [w for w in self.rq.predecessors(z) if self.tq.contains(w)]
            for v in before:
                for u in after:
                    vec = {}
                    for w in mids:
                        k = index.get(v + (w,) + u)
                        if k is not None:
                            vec[k] = vec.get(k, 0) + 1
                    if vec:
                        sb.add(vec)
        piv = sb.pivots()
        basis = [paths[k] for k in range(len(paths)) if k not in piv]
        return PathClasses(len(basis), paths, basis)

    def _vanishing_layer(self, x: Vertex) -> int | None:
        """First layer P > p(x) into which every hom from x vanishes."""
        if x in self._cert:
            return self._cert[x]
        found = None
        for P in range(x.p + 1, min(self.tq.p_max, x.p + self.h + 2) + 1):
            if all(self.classes(x, z).dim == 0 for z in self.rq.layer(P) if self.tq.contains(z)):
                found = P
                break
        self._cert[x] = found
        return found

    def hom_dim(self, x: Vertex, y: Vertex) -> int:
        if y.p - x.p > self.h:
            P = self._vanishing_layer(x)
            if P is not None and P <= y.p:
                return 0
        return self.classes(x, y).dim


def mesh_hom_dim(tq: TranslationQuiver, x: Vertex, y: Vertex) -> PathClasses:
    """Literal hom space x -> y: relations at all vertices (unframed) or at the
    non-frozen ones (framed)."""
    return LiteralMesh(tq).classes(x, y)


# layer-by-layer homs with composition


class HomEngine:
    """All hom spaces out of a fixed vertex x, built in arrow order.

    For y != x the space Hom(x, y) is the quotient of the direct sum of
    Hom(x, w) over arrows w -> y by the image of Hom(x, tau y) under the mesh
    at y (when y carries a relation).  Each basis element is a coordinate
    (w, b) and has a representative path.
    """

    def __init__(self, rq: RepetitionQuiver, x: Vertex, max_span: int | None = None):
        if not rq.exists(x):
            raise ValueError(f"{x} is not a vertex")
        self.rq = rq
        self.x = x
        h = rq.q.diagram.coxeter_number
        self.max_span = max_span if max_span is not None else 4 * h + 6
        self.dim: dict[Vertex, int] = {x: 1}
        self.paths: dict[Vertex, list[tuple[Vertex, ...]]] = {x: [(x,)]}
        # basis element k at y is the arrow coords[y][k] = (w, b) applied to basis b at w
        self.coords: dict[Vertex, list[tuple[Vertex, int]]] = {x: []}
        # (w, y) -> list over basis of Hom(x, w) of sparse vectors in Hom(x, y)
        self.action: dict[tuple[Vertex, Vertex], list[dict[int, Fraction]]] = {}
        self.done_layer = x.p - 1
        self.vanish_from: int | None = None
        self._first_layer()

    def _first_layer(self) -> None:
        for v in self.rq.layer(self.x.p):
            if self.rq.order_key(v) > self.rq.order_key(self.x):
                self._process(v)
            elif v != self.x:
                self.dim[v] = 0
                self.paths[v] = []
                self.coords[v] = []
        self.done_layer = self.x.p

    def _hom(self, v: Vertex) -> int:
        if v.p < self.x.p:
            return 0
        return self.dim.get(v, 0)

    def _process(self, y: Vertex) -> None:
        coords: list[tuple[Vertex, int]] = []
        offset: dict[Vertex, int] = {}
        preds = [w for w in self.rq.predecessors(y) if self.rq.exists(w) and self._hom(w)]
        for w in preds:
            offset[w] = len(coords)
            coords.extend((w, b) for b in range(self.dim[w]))
        sb = SparseBasis()
        ty = tau(y)
        if coords and self.rq.has_relation(y) and self._hom(ty):
            for e in range(self.dim[ty]):
                vec: dict[int, Fraction] = {}
                for w in preds:
                    act = self.action.get((ty, w))
                    if act is None:
                        continue
                    for k, c in act[e].items():
                        vec[offset[w] + k] = vec.get(offset[w] + k, 0) + c
                sb.add(vec)
        piv = sb.pivots()
        free = [k for k in range(len(coords)) if k not in piv]
        pos = {k: t for t, k in enumerate(free)}
        self.dim[y] = len(free)
        self.paths[y] = [self.paths[coords[k][0]][coords[k][1]] + (y,) for k in free]
        self.coords[y] = [coords[k] for k in free]
        for w in preds:
            acts = []
            for b in range(self.dim[w]):
                red = sb.reduce({offset[w] + b: Fraction(1)})
                acts.append({pos[k]: c for k, c in red.items()})
            self.action[(w, y)] = acts

    def _advance(self) -> None:
        p = self.done_layer + 1
        if p - self.x.p > self.max_span:
            raise WindowError(f"homs out of {self.x} do not vanish within {self.max_span} layers")
        for v in self.rq.layer(p):
            self._process(v)
        self.done_layer = p
        if all(self.dim[v] == 0 for v in self.rq.layer(p)):
            self.vanish_from = p

    def ensure(self, p: int) -> None:
        while self.done_layer < p and self.vanish_from is None:
            self._advance()

    def hom_dim(self, y: Vertex) -> int:
        if not self.rq.exists(y) or y.p < self.x.p:
            return 0
        self.ensure(y.p)
        return self.dim.get(y, 0) if y.p <= self.done_layer else 0

    def support(self) -> list[Vertex]:
        """Every vertex with a non-zero hom from x (finite, certified)."""
        self.ensure(self.x.p + self.max_span + 1)
        return sorted((v for v, d in self.dim.items() if d), key=self.rq.order_key)

    def push(self, vec: dict[int, Fraction], path: tuple[Vertex, ...]) -> dict[int, Fraction]:
        """Post-compose an element of Hom(x, path[0]) with the path."""
        for u, v in zip(path, path[1:]):
            if not vec:
                return {}
            self.ensure(v.p)
            act = self.action.get((u, v))
            if act is None:
                return {}
            out: dict[int, Fraction] = {}
            for k, c in vec.items():
                for t, d in act[k].items():
                    nv = out.get(t, 0) + c * d
                    if nv:
                        out[t] = nv
                    else:
                        out.pop(t, None)
            vec = out
        return vec


class HomCategory:
    """Lazy family of hom engines on one repetition quiver."""

    def __init__(self, rq: RepetitionQuiver):
        self.rq = rq
        self._engines: dict[Vertex, HomEngine] = {}

    def engine(self, x: Vertex) -> HomEngine:
        if x not in self._engines:
            self._engines[x] = HomEngine(self.rq, x)
        return self._engines[x]

    def hom_dim(self, x: Vertex, y: Vertex) -> int:
        return self.engine(x).hom_dim(y)

    def basis_paths(self, x: Vertex, y: Vertex) -> list[tuple[Vertex, ...]]:
        eng = self.engine(x)
        if eng.hom_dim(y) == 0:
            return []
        return eng.paths[y]

    def compose(self, f: dict[int, Fraction], x: Vertex, y: Vertex,
                g: dict[int, Fraction], z: Vertex) -> dict[int, Fraction]:
        """g o f for f in Hom(x, y), g in Hom(y, z), in basis coordinates."""
        out: dict[int, Fraction] = {}
        gpaths = self.basis_paths(y, z)
        eng = self.engine(x)
        for k, c in g.items():
            img = eng.push(dict(f), gpaths[k])
            for t, d in img.items():
                nv = out.get(t, 0) + c * d
                if nv:
                    out[t] = nv
                else:
                    out.pop(t, None)
        return out

    def path_class(self, path: tuple[Vertex, ...]) -> dict[int, Fraction]:
        """Coordinates of a path in Hom(path[0], path[-1])."""
        x = path[0]
        return self.engine(x).push({0: Fraction(1)}, path)
