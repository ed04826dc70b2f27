"""Representations of Dynkin quivers over the rationals.

Modules are right modules over the path algebra kQ, i.e. representations of
the opposite quiver.  ``module_quiver`` is the single place where this choice
is made; with it the projective P(i) is simple exactly when i is a source of Q.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .linalg import Matrix
from .rootsys import MINUS, PLUS, Orientation, Root, RootSystem

RIGHT_MODULES = True


def module_quiver(q: Orientation) -> Orientation:
    """Quiver along which the structure maps of a kQ-module point."""
    return q.reversed() if RIGHT_MODULES else q


@dataclass
class QuiverRep:
    quiver: Orientation  # arrows along which the maps go
    dims: tuple[int, ...]
    maps: dict[tuple[int, int], Matrix]  # (i, j) -> dims[j] x dims[i]

    def __post_init__(self):
        self.dims = tuple(self.dims)
        for a in self.quiver.arrows:
            m = self.maps.setdefault(a, linalg.zeros(self.dims[a[1]], self.dims[a[0]]))
            if len(m) != self.dims[a[1]] or any(len(r) != self.dims[a[0]] for r in m):
                raise ValueError(f"map on arrow {a} has the wrong shape")
        if set(self.maps) != set(self.quiver.arrows):
            raise ValueError("maps must be indexed by the arrows of the quiver")

    @property
    def n(self) -> int:
        return len(self.dims)

    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return not any(self.dims)

    def dump(self) -> str:
        lines = [f"dims {list(self.dims)}"]
        for (i, j), m in sorted(self.maps.items()):
            rows = ["[" + " ".join(str(v) for v in r) + "]" for r in m]
            lines.append(f"  {i + 1}->{j + 1}: " + (" ".join(rows) or "[]"))
        return "\n".join(lines)


@dataclass
class HomSolution:
    dimension: int
    basis: list[dict[int, Matrix]]


def zero_rep(quiver: Orientation) -> QuiverRep:
    return QuiverRep(quiver, (0,) * quiver.n, {})


def simple_rep(quiver: Orientation, i: int) -> QuiverRep:
    dims = [0] * quiver.n
    dims[i] = 1
    return QuiverRep(quiver, tuple(dims), {})


def _var_index(m: QuiverRep, n: QuiverRep):
    """Coordinates of an unknown morphism: f_v is an n.dims[v] x m.dims[v] block."""
    offsets, total = {}, 0
    for v in range(m.n):
        offsets[v] = total
        total += n.dims[v] * m.dims[v]
    return offsets, total


def hom(m: QuiverRep, n: QuiverRep) -> HomSolution:
    """All (f_v) with f_j M_a = N_a f_i for every arrow a: i -> j."""
    if m.quiver != n.quiver:
        raise ValueError("representations live on different quivers")
    offsets, total = _var_index(m, n)

    def var(v, r, c):
        return offsets[v] + r * m.dims[v] + c

    rows = []
    for (i, j) in m.quiver.arrows:
        ma, na = m.maps[(i, j)], n.maps[(i, j)]
        for r in range(n.dims[j]):
            for c in range(m.dims[i]):
                row = [Fraction(0)] * total
                for s in range(m.dims[j]):
                    if ma[s][c]:
                        row[var(j, r, s)] += ma[s][c]
                for t in range(n.dims[i]):
                    if na[r][t]:
                        row[var(i, t, c)] -= na[r][t]
                if any(row):
                    rows.append(row)
    null = linalg.nullspace(rows, total) if total else []
    basis = []
    for vec in null:
        f = {}
        for v in range(m.n):
            f[v] = [
                [vec[var(v, r, c)] for c in range(m.dims[v])] for r in range(n.dims[v])
            ]
        basis.append(f)
    return HomSolution(len(basis), basis)


def hom_dim(m: QuiverRep, n: QuiverRep) -> int:
    return hom(m, n).dimension


def euler_form(d: Sequence[int], e: Sequence[int], quiver: Orientation) -> int:
    """<d, e> = sum d_i e_i - sum over arrows i->j of d_i e_j."""
    return sum(a * b for a, b in zip(d, e)) - sum(d[i] * e[j] for i, j in quiver.arrows)


def ext1_dim(m: QuiverRep, n: QuiverRep) -> int:
    value = hom_dim(m, n) - euler_form(m.dims, n.dims, m.quiver)
    if value < 0:
        raise AssertionError("negative Ext dimension: module convention is inconsistent")
    return value


def reflection_functor(i: int, m: QuiverRep) -> QuiverRep:
    """BGP reflection at a sink (kernel) or a source (cokernel) of m.quiver."""
    q = m.quiver
    new_q = q.reflect_at(i)
    if q.is_sink(i):
        ins = sorted(a for a in q.arrows if a[1] == i)
        blocks = [m.dims[a[0]] for a in ins]
        width = sum(blocks)
        h = [[] for _ in range(m.dims[i])]
        for a in ins:
            for r in range(m.dims[i]):
                h[r].extend(m.maps[a][r])
        ker = linalg.nullspace(h, width) if m.dims[i] else linalg.identity(width)
        new_dim = len(ker)
        dims = list(m.dims)
        dims[i] = new_dim
        maps = {a: m.maps[a] for a in q.arrows if i not in a}
        off = 0
        for a, w in zip(ins, blocks):
            # the inclusion of the kernel followed by the projection onto M_j
            maps[(i, a[0])] = [[ker[c][off + r] for c in range(new_dim)] for r in range(w)]
            off += w
        return QuiverRep(new_q, tuple(dims), maps)
    if q.is_source(i):
        outs = sorted(a for a in q.arrows if a[0] == i)
        blocks = [m.dims[a[1]] for a in outs]
        height = sum(blocks)
        h = []
        for a in outs:
            h.extend(m.maps[a])
        if m.dims[i]:
            coker = linalg.left_nullspace(h, height)
        else:
            coker = linalg.identity(height)
        new_dim = len(coker)
        dims = list(m.dims)
        dims[i] = new_dim
        maps = {a: m.maps[a] for a in q.arrows if i not in a}
        off = 0
        for a, w in zip(outs, blocks):
            maps[(a[1], i)] = [[coker[r][off + c] for c in range(w)] for r in range(new_dim)]
            off += w
        return QuiverRep(new_q, tuple(dims), maps)
    raise ValueError(f"vertex {i + 1} is neither a sink nor a source")


def sink_sequence(q: Orientation) -> list[int]:
    """An admissible ordering: each vertex is a sink after reflecting the previous ones."""
    return list(reversed(q.topological_order()))


def build_on(quiver: Orientation, alpha: Root) -> QuiverRep:
    """The indecomposable representation of ``quiver`` with dimension vector alpha."""
    if not alpha.is_positive():
        raise ValueError(f"{alpha} is not a positive root")
    rs = RootSystem(quiver.diagram)
    if alpha not in set(rs.positive_roots):
        raise ValueError(f"{alpha} is not a root of {quiver.diagram.name}")
    order = sink_sequence(quiver)
    chain: list[tuple[int, Orientation]] = []
    cur, beta = quiver, alpha
    limit = 2 * len(rs.positive_roots) + len(order) + 1
    for step in range(limit):
        i = order[step % len(order)]
        assert cur.is_sink(i), "sink sequence is not admissible"
        if beta == rs.simple_root(i):
            rep = simple_rep(cur, i)
            for j, _ in reversed(chain):
                rep = reflection_functor(j, rep)
            if rep.quiver != quiver or Root(rep.dims) != alpha:
                raise AssertionError(f"reflection chain for {alpha} landed on {rep.dims}")
            return rep
        beta = rs.simple_reflection(i, beta)
        if not beta.is_positive():
            raise AssertionError(f"reflection chain for {alpha} left the positive roots")
        chain.append((i, cur))
        cur = cur.reflect_at(i)
    raise AssertionError(f"reflection chain for {alpha} did not terminate")


def build_indecomposable(orientation: Orientation, alpha: Root) -> QuiverRep:
    """M_alpha as a right kQ-module, certified by End(M) = k."""
    rep = build_on(module_quiver(orientation), alpha)
    if hom_dim(rep, rep) != 1:
        raise AssertionError(f"module for {alpha} is not a brick")
    return rep


def path_counts(q: Orientation, start: int) -> list[int]:
    """Number of paths start -> j in q (at most one in a Dynkin tree)."""
    counts = [0] * q.n
    counts[start] = 1
    for v in q.topological_order():
        if counts[v]:
            for a, b in q.arrows:
                if a == v:
                    counts[b] += counts[v]
    return counts


def projective_dims(q: Orientation, i: int) -> Root:
    """dim P(i) for the right module P(i) = e_i kQ: paths ending at i in Q."""
    return Root(tuple(path_counts(module_quiver(q), i)))


def injective_dims(q: Orientation, i: int) -> Root:
    return Root(tuple(path_counts(module_quiver(q).reversed(), i)))


def projective(q: Orientation, i: int) -> QuiverRep:
    return build_indecomposable(q, projective_dims(q, i))


def injective(q: Orientation, i: int) -> QuiverRep:
    return build_indecomposable(q, injective_dims(q, i))


def simple(q: Orientation, i: int) -> QuiverRep:
    return simple_rep(module_quiver(q), i)


def is_isomorphic(m: QuiverRep, n: QuiverRep, tries: int = 25) -> bool:
    """Search for an invertible element of Hom(m, n)."""
    if m.quiver != n.quiver or m.dims != n.dims:
        return False
    if m.is_zero():
        return True
    sol = hom(m, n)
    if not sol.basis:
        return False
    rng = random.Random(1)
    for t in range(tries):
        coeffs = [Fraction(1)] * len(sol.basis) if t == 0 else [
            Fraction(rng.randint(-7, 7)) for _ in sol.basis
        ]
        ok = True
        for v in range(m.n):
            d = m.dims[v]
            if not d:
                continue
            f = linalg.zeros(d, d)
            for c, b in zip(coeffs, sol.basis):
                for r in range(d):
                    for s in range(d):
                        f[r][s] += c * b[v][r][s]
            if linalg.rank(f) < d:
                ok = False
                break
        if ok:
            return True
    return False


def coxeter_functor(eps: int, m: QuiverRep, sign: dict[int, int]) -> QuiverRep:
    """Compose the reflections at all vertices of sign eps (they are pairwise
    non-adjacent, so the order is irrelevant)."""
    for i in range(m.n):
        if sign[i] == eps:
            m = reflection_functor(i, m)
    return m


@dataclass
class Report:
    name: str
    checked: int
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_coxeter_lemma(orientation: Orientation) -> Report:
    """Dimension-vector and double-application checks for C^+ and C^-."""
    rs = RootSystem(orientation.diagram)
    sign = orientation.sign()
    bad, checked = [], 0
    for alpha in rs.positive_roots:
        m = build_indecomposable(orientation, alpha)
        for eps in (PLUS, MINUS):
            checked += 1
            c1 = coxeter_functor(eps, m, sign)
            target = rs.tau_eps(eps, alpha, orientation)
            if not target.is_positive():
                if not c1.is_zero():
                    bad.append(f"C^{eps:+d} M_{alpha} should vanish, got {c1.dims}")
                continue
            if Root(c1.dims) != target:
                bad.append(f"dim C^{eps:+d} M_{alpha} = {c1.dims}, expected {target}")
                continue
            c2 = coxeter_functor(eps, c1, sign)
            if c2.quiver != m.quiver or not is_isomorphic(c2, m):
                bad.append(f"C^{eps:+d} C^{eps:+d} M_{alpha} is not isomorphic to M_{alpha}")
            if hom_dim(c1, c1) != 1:
                bad.append(f"C^{eps:+d} M_{alpha} is not indecomposable")
    return Report("coxeter lemma", checked, bad)


def verify_tau_ext(orientation: Orientation) -> Report:
    """[tau_+(a):a_i] = ext1(M_a, S(i)) at sources, [tau_-(a):a_i] = ext1(S(i), M_a)
    at sinks, for every positive a other than a_i."""
    rs = RootSystem(orientation.diagram)
    sign = orientation.sign()
    bad, checked = [], 0
    simples = [simple(orientation, i) for i in range(rs.rank)]
    for alpha in rs.positive_roots:
        m = build_indecomposable(orientation, alpha)
        for i in range(rs.rank):
            if alpha == rs.simple_root(i):
                continue
            checked += 1
            if sign[i] == PLUS:
                lhs = rs.tau_plus(alpha, orientation).coeffs[i]
                rhs = ext1_dim(m, simples[i])
            else:
                lhs = rs.tau_minus(alpha, orientation).coeffs[i]
                rhs = ext1_dim(simples[i], m)
            if lhs != rhs:
                bad.append(f"alpha={alpha}, i={i + 1}: multiplicity {lhs} vs ext {rhs}")
    return Report("tau and ext", checked, bad)


def simple_case_values(orientation: Orientation, i: int) -> tuple[int, int]:
    """Both sides of the tau/ext identity at alpha = alpha_i (they differ)."""
    rs = RootSystem(orientation.diagram)
    sign = orientation.sign()
    s = simple(orientation, i)
    if sign[i] == PLUS:
        return rs.tau_plus(rs.simple_root(i), orientation).coeffs[i], ext1_dim(s, s)
    return rs.tau_minus(rs.simple_root(i), orientation).coeffs[i], ext1_dim(s, s)
