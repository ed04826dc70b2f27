"""The categorified side: labeled orbit quiver, the cluster-tilting object T~,
exchange conflations, and ice quivers computed from the category.

Everything here works with F-orbit representatives of vertices of ZQ~_C.
Morphisms in the orbit category are tuples ``(l, k)``: the basis element ``k``
of Hom_R(u, F^l v).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .clusteralg import mutate_seed, relation_sequence, universal_seed
from .linalg import SparseBasis, nullspace
from .meshcat import HomCategory, RepetitionQuiver, Vertex, WindowError, sigma
from .nakajima import (
    ConfigQuiver,
    Configuration,
    OrbitMap,
    OrbitQuiver,
    build_config_quiver,
    is_admissible,
    orbit_quiver,
)
from .quiver import IceQuiver, ice_diff, mutate, same_ice_quiver, to_dot
from .repmod import projective_dims
from .rootsys import Orientation, Root, RootSystem

SCHEMA = "frobcluster.verification/1"


@dataclass(frozen=True, order=True)
class Label:
    kind: str  # "X" or "P"
    root: Root

    def __str__(self) -> str:
        return f"{self.kind}_{{{self.root}}}"

    @property
    def variable(self) -> str:
        """Name of the matching cluster variable or coefficient."""
        return f"{'x' if self.kind == 'X' else 'p'}_{{{self.root}}}"


class OrbitHoms:
    """Hom spaces of an orbit category built on a hom category and F."""

    def __init__(self, homs: HomCategory, fmap: OrbitMap):
        self.homs = homs
        self.fmap = fmap
        self._comp: dict[tuple[Vertex, Vertex], list[tuple[int, Vertex, int]]] = {}

    def components(self, u: Vertex, v: Vertex) -> list[tuple[int, Vertex, int]]:
        key = (u, v)
        if key not in self._comp:
            rq = self.homs.rq
            eng = self.homs.engine(u)
            l = 0
            while self.fmap.F(v, l).p >= u.p:
                l -= 1
            out = []
            while True:
                w = self.fmap.F(v, l)
                if w.p > u.p + eng.max_span:
                    raise WindowError(f"orbit hom {u} -> {v} not certified finite")
                eng.ensure(w.p)
                if eng.vanish_from is not None and w.p > eng.vanish_from:
                    break
                d = eng.hom_dim(w) if rq.exists(w) else 0
                if d:
                    out.append((l, w, d))
                l += 1
            self._comp[key] = out
        return self._comp[key]

    def dim(self, u: Vertex, v: Vertex) -> int:
        return sum(d for _, _, d in self.components(u, v))

    def basis(self, u: Vertex, v: Vertex, radical: bool = False) -> list[tuple[int, int]]:
        """Basis keys; ``radical`` drops the identity of End(u)."""
        out = []
        for l, _, d in self.components(u, v):
            for k in range(d):
                if radical and u == v and l == 0:
                    continue
                out.append((l, k))
        return out

    def compose(self, u: Vertex, f: tuple[int, int], w: Vertex,
                g: tuple[int, int], v: Vertex) -> dict[tuple[int, int], Fraction]:
        """g o f for basis maps f: u -> w and g: w -> v of the orbit category."""
        l1, k1 = f
        l2, k2 = g
        path = self.homs.basis_paths(w, self.fmap.F(v, l2))[k2]
        moved = tuple(self.fmap.F(z, l1) for z in path) if l1 else path
        vec = self.homs.engine(u).push({k1: Fraction(1)}, moved)
        return {(l1 + l2, t): c for t, c in vec.items()}

    def compose_vec(self, u, fvec, w, gvec, v) -> dict[tuple[int, int], Fraction]:
        out: dict[tuple[int, int], Fraction] = {}
        for fk, fc in fvec.items():
            for gk, gc in gvec.items():
                for key, c in self.compose(u, fk, w, gk, v).items():
                    nv = out.get(key, 0) + fc * gc * c
                    if nv:
                        out[key] = nv
                    else:
                        out.pop(key, None)
        return out


@dataclass
class LabeledOrbitQuiver:
    base: OrbitQuiver
    label: dict[Vertex, Label]

    @property
    def cq(self) -> ConfigQuiver:
        return self.base.cq

    def vertex_of(self, label: Label) -> Vertex:
        for v, lab in self.label.items():
            if lab == label:
                return v
        raise KeyError(str(label))

    def labelled_arrows(self) -> Counter:
        return Counter({(str(self.label[u]), str(self.label[v])): k
                        for (u, v), k in self.base.arrows.items()})

    def to_dot(self) -> str:
        return self.base.to_dot({v: str(lab) for v, lab in self.label.items()})


def _require_universal(cq: ConfigQuiver) -> None:
    if not cq.config.is_full or cq.config.f_power != 1:
        raise ValueError("the root labeling needs C = ZQ_0 and F = Sigma tau^-1")


def label_orbit_quiver(oq: OrbitQuiver) -> LabeledOrbitQuiver:
    cq = oq.cq
    _require_universal(cq)
    q = cq.q
    fm = cq.fmap
    rs = RootSystem(q.diagram)
    proj = {projective_dims(q, i): i for i in range(q.n)}
    label: dict[Vertex, Label] = {}
    for z in oq.mutable:
        found = set()
        for l in range(-3, 4):
            pt = fm.hc.point(fm.F(z, l))
            if pt.shift == 0:
                found.add(pt.root)
            elif pt.shift == 1 and pt.root in proj:
                found.add(Root.simple(proj[pt.root], q.n, -1))
        if len(found) != 1:
            raise AssertionError(f"orbit of {z} has labels {sorted(map(str, found))}")
        label[z] = Label("X", found.pop())
    for f in oq.frozen:
        src = fm.canonical(sigma(f))
        tgt = fm.canonical(Vertex(f.i, f.p + 1))
        by_minus = rs.tau_minus(label[src].root, q)
        by_plus = rs.tau_plus(label[tgt].root, q)
        if by_minus != by_plus:
            raise AssertionError(
                f"label clash at {f}: tau_- gives {by_minus}, tau_+ gives {by_plus}"
            )
        label[f] = Label("P", by_plus)
    xs = sorted(lab.root for lab in label.values() if lab.kind == "X")
    ps = sorted(lab.root for lab in label.values() if lab.kind == "P")
    if xs != sorted(rs.almost_positive) or ps != xs:
        raise AssertionError("labels are not a bijection with the almost positive roots")
    return LabeledOrbitQuiver(oq, label)


def universal_labeled_quiver(q: Orientation) -> LabeledOrbitQuiver:
    cq = build_config_quiver(Configuration(q), check=False)
    return label_orbit_quiver(orbit_quiver(cq))


def ext1(loq: LabeledOrbitQuiver, a: Label, b: Label) -> int:
    return loq.cq.ext1(loq.vertex_of(a), loq.vertex_of(b))


@dataclass
class ClusterTiltingObject:
    mutable: list[Label]
    frozen: list[Label]

    @property
    def summands(self) -> list[Label]:
        return self.mutable + self.frozen


def initial_object(loq: LabeledOrbitQuiver) -> ClusterTiltingObject:
    n = loq.cq.q.n
    frozen = sorted((lab for lab in loq.label.values() if lab.kind == "P"),
                    key=lambda lab: RootSystem(loq.cq.q.diagram).almost_positive.index(lab.root))
    return ClusterTiltingObject([Label("X", Root.simple(i, n, -1)) for i in range(n)], frozen)


def cluster_tilting(loq: LabeledOrbitQuiver, mutable: list[Label] | None = None,
                    check_maximal: bool = True) -> ClusterTiltingObject:
    """T~ (or the given mutable part plus all projectives), checked rigid and maximal."""
    t = initial_object(loq)
    if mutable is not None:
        t = ClusterTiltingObject(list(mutable), t.frozen)
    for a in t.mutable:
        for b in t.mutable:
            if ext1(loq, a, b):
                raise AssertionError(f"not rigid: ext1({a}, {b}) != 0")
    if check_maximal:
        inside = set(t.mutable)
        for lab in loq.label.values():
            if lab.kind == "X" and lab not in inside:
                if not any(ext1(loq, a, lab) for a in t.mutable):
                    raise AssertionError(f"not maximal: {lab} can be added")
    return t


@dataclass
class ExchangeConflation:
    left: Label
    middle: Counter
    right: Label

    def __str__(self) -> str:
        mid = " ⊕ ".join(
            str(lab) if k == 1 else f"{lab}^{k}" for lab, k in sorted(self.middle.items())
        )
        return f"0 -> {self.left} -> {mid} -> {self.right} -> 0"


def exchange_conflations(q: Orientation, i: int) -> tuple[ExchangeConflation, ExchangeConflation]:
    """Closed-form conflations at X_{-a_i}: (ending at X_{a_i}, ending at X_{-a_i})."""
    rs = RootSystem(q.diagram)
    n = q.n
    neg = Label("X", Root.simple(i, n, -1))
    pos = Label("X", Root.simple(i, n, 1))
    proj = Counter({Label("P", a): rs.multiplicity(a, i)
                    for a in rs.positive_roots if rs.multiplicity(a, i)})
    if q.is_source(i):
        nbrs = [b for a, b in q.arrows if a == i]
    elif q.is_sink(i):
        nbrs = [a for a, b in q.arrows if b == i]
    else:
        raise ValueError(f"vertex {i + 1} is neither a source nor a sink")
    side = Counter({Label("X", Root.simple(j, n, -1)): 1 for j in nbrs})
    side[Label("P", Root.simple(i, n, -1))] += 1
    if q.is_source(i):
        return ExchangeConflation(neg, side, pos), ExchangeConflation(pos, proj, neg)
    return ExchangeConflation(neg, proj, pos), ExchangeConflation(pos, side, neg)


def _frozen_labels(q: Orientation) -> list[str]:
    return [str(a) for a in RootSystem(q.diagram).almost_positive]


def ice_quiver_direct(q: Orientation) -> IceQuiver:
    """The ice quiver of T~ read off from the exchange conflations."""
    rs = RootSystem(q.diagram)
    n = q.n
    roots = rs.almost_positive
    idx = {a: n + k for k, a in enumerate(roots)}
    size = n + len(roots)
    b = [[0] * size for _ in range(size)]

    def arrow(u, v, k=1):
        b[u][v] += k
        b[v][u] -= k

    for u, v in q.arrows:
        arrow(u, v)
    for i in range(n):
        neg = idx[Root.simple(i, n, -1)]
        for a in rs.positive_roots:
            m = rs.multiplicity(a, i)
            if not m:
                continue
            if q.is_source(i):
                arrow(idx[a], i, m)
            else:
                arrow(i, idx[a], m)
        if q.is_source(i):
            arrow(i, neg)
        else:
            arrow(neg, i)
    labels = [str(i + 1) for i in range(n)] + _frozen_labels(q)
    return IceQuiver(b, n, tuple(labels))


@dataclass
class GabrielData:
    ice: IceQuiver
    arrows: dict[tuple[int, int], int]  # before frozen-frozen arrows are dropped
    rad: dict[tuple[int, int], int]
    rad2: dict[tuple[int, int], int]


class _Precomposer:
    """Precomposition with a fixed map a: u -> w of R_C, evaluated on the
    path-class bases of Hom_R(w, -) one arrow at a time."""

    def __init__(self, homs: HomCategory, u: Vertex):
        self.homs = homs
        self.eng = homs.engine(u)
        self.memo: dict[tuple[int, Vertex], list[dict]] = {}

    def images(self, idx: int, w: Vertex, a: dict, z: Vertex) -> list[dict]:
        key = (idx, z)
        if key not in self.memo:
            if z == w:
                res = [a]
            else:
                engw = self.homs.engine(w)
                engw.hom_dim(z)
                res = [self.eng.push(self.images(idx, w, a, zp)[b], (zp, z))
                       for zp, b in engw.coords.get(z, [])]
            self.memo[key] = res
        return self.memo[key]


def gabriel_data(loq: LabeledOrbitQuiver, t: ClusterTiltingObject,
                 names: list[str] | None = None) -> GabrielData:
    """Quiver of End(T~) from rad/rad^2 in the completed orbit category of R_C.

    Hom spaces of R_C grow without bound, so only the components u -> y whose
    stable part can be non-zero are inspected (u* -> y* non-zero in the mesh
    category, with u* the mesh target of a frozen u and y* the mesh source of
    a frozen y).  Every other component factors through a kept frozen vertex
    with both factors radical, hence lies in rad^2.  Inside the window rad^2
    is built as the span of Hom(w, y) o a over the arrows a: u -> w found so
    far, processed in arrow order.
    """
    cq = loq.cq
    fm, rq = cq.fmap, cq.rq
    summ = t.summands
    verts = [loq.vertex_of(lab) for lab in summ]
    index = {v: k for k, v in enumerate(verts)}
    n = len(t.mutable)
    names = names or [str(i + 1) for i in range(n)] + [str(lab.root) for lab in t.frozen]
    unframed = HomCategory(RepetitionQuiver(cq.q))
    arrows: Counter = Counter()
    rad: Counter = Counter()
    rad2: Counter = Counter()
    for a, u in enumerate(verts):
        ustar = Vertex(u.i, u.p + 1) if u.frozen else u
        support = set(unframed.engine(ustar).support())
        p_hi = max(z.p for z in support) + 1
        eng = cq.homs.engine(u)
        pre = _Precomposer(cq.homs, u)
        found: list[tuple[Vertex, dict]] = []
        for p in range(u.p, p_hi + 1):
            for y in rq.layer(p):
                if rq.order_key(y) <= rq.order_key(u):
                    continue
                c = index.get(fm.canonical(y))
                if c is None or (sigma(y) if y.frozen else y) not in support:
                    continue
                d = eng.hom_dim(y)
                if not d:
                    continue
                sb = SparseBasis()
                for idx, (w, vec) in enumerate(found):
                    for img in pre.images(idx, w, vec, y):
                        sb.add(img)
                top = [k for k in range(d) if k not in sb.rows]
                found.extend((y, {k: Fraction(1)}) for k in top)
                arrows[(a, c)] += len(top)
                rad[(a, c)] += d
                rad2[(a, c)] += len(sb)
    b = [[0] * len(summ) for _ in summ]
    for (a, c), k in arrows.items():
        if not k:
            continue
        if a == c:
            raise AssertionError(f"loop at {summ[a]}")
        if a >= n and c >= n:
            continue
        if arrows.get((c, a)):
            raise AssertionError(f"2-cycle between {summ[a]} and {summ[c]}")
        b[a][c] += k
        b[c][a] -= k
    return GabrielData(IceQuiver(b, n, tuple(names)), dict(arrows), dict(rad), dict(rad2))


def gabriel_quiver_oracle(loq: LabeledOrbitQuiver, t: ClusterTiltingObject | None = None) -> IceQuiver:
    return gabriel_data(loq, t or initial_object(loq)).ice


@dataclass
class Approximation:
    target: Label
    t0: Counter
    t1: Counter
    index: tuple[int, ...]


def approximation_triangle(loq: LabeledOrbitQuiver, x: Label,
                           t: list[Label] | None = None) -> Approximation:
    """Minimal add(T)-approximation triangle T1 -> T0 -> X in the cluster category."""
    cq = loq.cq
    n = cq.q.n
    t = t or [Label("X", Root.simple(i, n, -1)) for i in range(n)]
    oh = OrbitHoms(HomCategory(RepetitionQuiver(cq.q)), cq.fmap)
    tv = [loq.vertex_of(lab) for lab in t]
    xv = loq.vertex_of(x)
    radT = {(a, c): oh.basis(tv[a], tv[c], radical=True)
            for a in range(len(t)) for c in range(len(t))}

    # top of Hom(T, X) over End(T): the maps T_a -> X not factoring through rad
    t0 = Counter()
    tops: list[tuple[int, dict]] = []
    for a, u in enumerate(tv):
        basis = oh.basis(u, xv)
        sb = SparseBasis()
        for m, w in enumerate(tv):
            for f in radT[(a, m)]:
                for g in oh.basis(w, xv):
                    sb.add(oh.compose(u, f, w, g, xv))
        piv = set(sb.rows)
        chosen = [key for key in basis if key not in piv]
        if len(chosen) != len(basis) - len(sb):
            raise AssertionError("non-minimal approximation")
        for key in chosen:
            tops.append((a, {key: Fraction(1)}))
        if chosen:
            t0[t[a]] = len(chosen)

    if not tops:
        # Hom(T, X) = 0 happens exactly for X in add(Sigma T): T_i -> 0 -> Sigma T_i
        for a, u in enumerate(tv):
            if cq.fmap.canonical(cq.fmap.hc.Sigma(u)) == xv:
                index = tuple(-1 if c == a else 0 for c in range(len(t)))
                return Approximation(x, Counter(), Counter({t[a]: 1}), index)
        raise AssertionError(f"Hom(T, {x}) = 0 but {x} is not in add(Sigma T)")

    # K_b = kernel of Hom(T_b, T0) -> Hom(T_b, X); its top over End(T) gives T1
    kernels: dict[int, list[dict]] = {}
    for bi, u in enumerate(tv):
        coords = []
        images = []
        for s, (a, phi) in enumerate(tops):
            for h in oh.basis(u, tv[a]):
                coords.append((s, h))
                images.append(oh.compose_vec(u, {h: Fraction(1)}, tv[a], phi, xv))
        keys = sorted({k for im in images for k in im})
        pos = {k: r for r, k in enumerate(keys)}
        # columns are coordinates; the kernel is the nullspace of the image matrix
        mat = [[Fraction(0)] * len(coords) for _ in keys]
        for c, im in enumerate(images):
            for k, v in im.items():
                mat[pos[k]][c] = v
        null = nullspace(mat, len(coords)) if coords else []
        kernels[bi] = [{(coords[c][0], coords[c][1]): v for c, v in enumerate(row) if v}
                       for row in null]

    t1 = Counter()
    for bi, u in enumerate(tv):
        if not kernels[bi]:
            continue
        sb = SparseBasis()
        for m, w in enumerate(tv):
            for r in radT[(bi, m)]:
                for kappa in kernels[m]:
                    vec: dict = {}
                    for (s, h), c in kappa.items():
                        a = tops[s][0]
                        for key, d in oh.compose(u, r, w, h, tv[a]).items():
                            nk = (s, key)
                            nv = vec.get(nk, 0) + c * d
                            if nv:
                                vec[nk] = nv
                            else:
                                vec.pop(nk, None)
                    sb.add(vec)
        top = len(kernels[bi]) - len(sb)
        if top < 0:
            raise AssertionError("kernel radical larger than the kernel")
        if top:
            t1[t[bi]] = top
    index = tuple(t0.get(lab, 0) - t1.get(lab, 0) for lab in t)
    return Approximation(x, t0, t1, index)


@dataclass
class CheckResult:
    name: str
    ok: bool | None  # None means not applicable
    detail: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "N/A" if self.ok is None else ("PASS" if self.ok else "FAIL")


def resolution_check(loq: LabeledOrbitQuiver, data: GabrielData,
                     t: ClusterTiltingObject, v: Label) -> CheckResult:
    """Degree-one terms of the simple resolutions against oracle arrow counts."""
    q = loq.cq.q
    summ = t.summands
    pos = {lab: k for k, lab in enumerate(summ)}
    into = Counter({summ[a]: k for (a, c), k in data.arrows.items() if c == pos[v] and k})
    out = Counter({summ[c]: k for (a, c), k in data.arrows.items() if a == pos[v] and k})
    problems = []
    if v.kind == "X":
        i = v.root.coeffs.index(-1)
        first, second = exchange_conflations(q, i)
        ending = first if first.right == v else second
        starting = first if first.left == v else second
        if +ending.middle != into:
            problems.append(f"E {dict(ending.middle)} vs arrows in {dict(into)}")
        if +starting.middle != out:
            problems.append(f"E' {dict(starting.middle)} vs arrows out {dict(out)}")
    else:
        fv = loq.vertex_of(v)
        src = loq.cq.fmap.canonical(sigma(fv))
        approx = approximation_triangle(loq, loq.label[src], t.mutable)
        mutable_in = Counter({lab: k for lab, k in into.items() if lab.kind == "X"})
        if +approx.t0 != mutable_in:
            problems.append(
                f"T0 of {loq.label[src]} {dict(approx.t0)} vs arrows in {dict(mutable_in)}"
            )
    return CheckResult(f"resolution {v}", not problems, problems)


def _monomial_factors(mono) -> Counter:
    return Counter({name: k for name, k in mono})


def conflation_dictionary(q: Orientation, k: int) -> CheckResult:
    """Middle terms of the exchange conflations at k = factors of the exchange relation."""
    seed = universal_seed(q)
    _, rel = mutate_seed(seed, k)
    first, second = exchange_conflations(q, k)
    mids = {frozenset(Counter({lab.variable: m for lab, m in c.middle.items()}).items())
            for c in (first, second)}
    monos = {frozenset(_monomial_factors(m).items()) for m in rel.monomials}
    ok = mids == monos and rel.old == first.left.variable and rel.new == first.right.variable
    return CheckResult(f"dictionary at {k + 1}", ok, [] if ok else [str(rel), str(first), str(second)])


def seed_object(seed, loq: LabeledOrbitQuiver) -> list[Label]:
    return [Label("X", seed.variable_root(x)) for x in seed.cluster]


def replay_relations(q: Orientation, loq: LabeledOrbitQuiver, word: list[int]) -> CheckResult:
    """Along a mutation word, the Gabriel arrows at the exchanged summand give
    the two monomials of each exchange relation, and the oracle ice quiver
    of every visited cluster-tilting object equals the seed's ice quiver."""
    seed = universal_seed(q)
    problems = []
    seeds_after, rels = relation_sequence(seed, word)
    cur = seed
    for k, rel in zip(word, rels):
        t = ClusterTiltingObject(seed_object(cur, loq), initial_object(loq).frozen)
        data = gabriel_data(loq, t)
        if not same_ice_quiver(data.ice, cur.ice):
            problems.append(f"oracle ice quiver differs before mutating at {k + 1}: "
                            + "; ".join(ice_diff(data.ice, cur.ice)))
        summ = t.summands
        into = Counter({summ[a].variable: m for (a, c), m in data.arrows.items() if c == k and m})
        out = Counter({summ[c].variable: m for (a, c), m in data.arrows.items() if a == k and m})
        monos = {frozenset(_monomial_factors(m).items()) for m in rel.monomials}
        if {frozenset(into.items()), frozenset(out.items())} != monos:
            problems.append(f"{rel}: middle terms {dict(into)} / {dict(out)}")
        cur, _ = mutate_seed(cur, k)
    assert cur.cluster == seeds_after.cluster
    return CheckResult(f"relation replay {[k + 1 for k in word]}", not problems, problems)


def mutation_compatibility(loq: LabeledOrbitQuiver, k: int, base: IceQuiver) -> CheckResult:
    n = loq.cq.q.n
    mutable = [Label("X", Root.simple(i, n, -1)) for i in range(n)]
    mutable[k] = Label("X", Root.simple(k, n, 1))
    t = cluster_tilting(loq, mutable, check_maximal=False)
    got = gabriel_data(loq, t).ice
    want = mutate(base, k)
    ok = same_ice_quiver(got, want)
    return CheckResult(f"mutation compatibility at {k + 1}", ok,
                       [] if ok else ice_diff(got, want))


@dataclass
class VerificationReport:
    diagram: str
    orientation: str
    configuration: str
    f_power: int
    checks: list[CheckResult]
    quivers: dict[str, IceQuiver] = field(default_factory=dict)
    diffs: dict[str, list[str]] = field(default_factory=dict)
    main_theorem: bool | None = None

    @property
    def ok(self) -> bool:
        return all(c.ok is not False for c in self.checks) and self.main_theorem is not False

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "diagram": self.diagram,
            "orientation": self.orientation,
            "configuration": self.configuration,
            "f_power": self.f_power,
            "main_theorem": {None: "N/A", True: "PASS", False: "FAIL"}[self.main_theorem],
            "status": "PASS" if self.ok else "FAIL",
            "checks": [{"name": c.name, "status": c.status, "detail": c.detail}
                       for c in self.checks],
            "ice_quivers": {k: v.to_json() for k, v in self.quivers.items()},
            "diffs": self.diffs,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def text(self) -> str:
        head = f"{self.diagram} [{self.orientation}] C={self.configuration} F=Sigma^{self.f_power} tau^-1"
        lines = [head]
        for c in self.checks:
            lines.append(f"  {c.status:4}  {c.name}")
            lines.extend(f"        {d}" for d in c.detail)
        mt = {None: "N/A", True: "PASS", False: "FAIL"}[self.main_theorem]
        lines.append(f"  main theorem: {mt}")
        if self.main_theorem is False:
            for name, q in self.quivers.items():
                lines.append(to_dot(q, name).rstrip())
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines) + "\n"


def _structural_checks(cq: ConfigQuiver) -> list[CheckResult]:
    checks = []
    oq = orbit_quiver(cq)
    bad = cq.mesh_exactness(oq.mutable)
    checks.append(CheckResult("mesh exactness", not bad, bad))
    loops = [str(u) for (u, v) in oq.arrows if u == v]
    checks.append(CheckResult("orbit quiver has no loops", not loops, loops))
    if not cq.config.is_full:
        want = cq.config.orbit_count()
        got = len(oq.frozen)
        checks.append(CheckResult("frozen orbits = configuration orbits", got == want,
                                  [f"{got} frozen vs {want}"] if got != want else []))
    else:
        same = len(oq.frozen) == len(oq.mutable)
        checks.append(CheckResult("frozen orbit count = non-frozen orbit count", same,
                                  [] if same else [f"{len(oq.frozen)} vs {len(oq.mutable)}"]))
    return checks


def verify_main_theorem(q: Orientation, config: Configuration | None = None) -> VerificationReport:
    config = config or Configuration(q)
    report = VerificationReport(q.diagram.name, str(q), config.describe(), config.f_power, [])
    adm = is_admissible(config)
    report.checks.append(CheckResult("admissible configuration", adm.admissible,
                                     [] if adm.admissible else [f"fails at {adm.failing}"]))
    if not adm.admissible:
        report.main_theorem = False
        return report
    cq = build_config_quiver(config, check=False)
    report.checks.extend(_structural_checks(cq))
    if not config.is_full or config.f_power != 1:
        report.main_theorem = None
        return report

    loq = label_orbit_quiver(orbit_quiver(cq))
    t = cluster_tilting(loq)
    report.checks.append(CheckResult("T~ is cluster-tilting", True,
                                     [f"{len(t.mutable)} + {len(t.frozen)} summands"]))
    universal = universal_seed(q).ice
    direct = ice_quiver_direct(q)
    data = gabriel_data(loq, t)
    oracle = data.ice
    report.quivers = {"universal": universal, "direct": direct, "oracle": oracle}
    for a, b in (("direct", "universal"), ("oracle", "universal"), ("oracle", "direct")):
        d = ice_diff(report.quivers[a], report.quivers[b])
        if d:
            report.diffs[f"{a}/{b}"] = d
    report.main_theorem = not report.diffs
    report.checks.append(CheckResult("direct = oracle = universal", report.main_theorem,
                                     [f"{k}: {x}" for k, xs in report.diffs.items() for x in xs]))
    for lab in t.summands:
        report.checks.append(resolution_check(loq, data, t, lab))
    for k in range(q.n):
        report.checks.append(conflation_dictionary(q, k))
        report.checks.append(mutation_compatibility(loq, k, oracle))
    return report


__all__ = [
    "SCHEMA",
    "Label",
    "OrbitHoms",
    "LabeledOrbitQuiver",
    "label_orbit_quiver",
    "universal_labeled_quiver",
    "ext1",
    "ClusterTiltingObject",
    "initial_object",
    "cluster_tilting",
    "ExchangeConflation",
    "exchange_conflations",
    "ice_quiver_direct",
    "GabrielData",
    "gabriel_data",
    "gabriel_quiver_oracle",
    "Approximation",
    "approximation_triangle",
    "CheckResult",
    "resolution_check",
    "conflation_dictionary",
    "replay_relations",
    "mutation_compatibility",
    "VerificationReport",
    "verify_main_theorem",
]
