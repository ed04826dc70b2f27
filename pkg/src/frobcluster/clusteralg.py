"""Geometric cluster algebras: seeds, exchange relations, exchange graphs,
universal coefficients and coefficient specializations.

A seed keeps its coefficients twice, as arrows to frozen vertices of the ice
quiver and as a tuple of tropical monomials ``y_j``.  The two are compared
after every mutation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .laurent import LaurentPoly, exact_divide
from .quiver import IceQuiver, mutate
from .rootsys import Orientation, Root, RootSystem


@dataclass(frozen=True)
class TropicalMonomial:
    """Element of Trop(p_1, ..., p_m), stored as an exponent vector."""

    exps: tuple[int, ...]

    def __mul__(self, other: "TropicalMonomial") -> "TropicalMonomial":
        return TropicalMonomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> "TropicalMonomial":
        return TropicalMonomial(tuple(k * a for a in self.exps))

    def inverse(self) -> "TropicalMonomial":
        return self ** -1

    def oplus(self, other: "TropicalMonomial") -> "TropicalMonomial":
        return TropicalMonomial(tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def oplus_one(self) -> "TropicalMonomial":
        return TropicalMonomial(tuple(min(a, 0) for a in self.exps))

    @classmethod
    def one(cls, m: int) -> "TropicalMonomial":
        return cls((0,) * m)

    def format(self, names: Sequence[str]) -> str:
        parts = []
        for name, k in zip(names, self.exps):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "·".join(parts) or "1"


def display_key(root: Root):
    """Order used when printing monomials: negative simples, then positives."""
    if root.is_negative_simple():
        return (0, root.coeffs.index(-1), ())
    return (1, root.height, tuple(-c for c in root.coeffs))


@dataclass(frozen=True)
class ExchangeRelation:
    """``x_old · x_new = M_in + M_out`` with factors given as (name, power)."""

    old: str
    new: str
    monomials: tuple[tuple[tuple[str, int], ...], tuple[tuple[str, int], ...]]

    def __str__(self) -> str:
        def fmt(mono):
            return "·".join(n if k == 1 else f"{n}^{k}" for n, k in mono) or "1"

        m1, m2 = self.monomials
        return f"{self.old}·{self.new} = {fmt(m1)} + {fmt(m2)}"

    def key(self) -> frozenset:
        return frozenset((self.old, self.new))


@dataclass(frozen=True)
class Seed:
    ice: IceQuiver
    cluster: tuple[LaurentPoly, ...]
    y: tuple[TropicalMonomial, ...]
    rank: int = 0  # root-system rank used for naming; 0 disables root names

    @property
    def n(self) -> int:
        return self.ice.n

    @property
    def nvars(self) -> int:
        return self.ice.size

    def frozen_names(self) -> list[str]:
        return [f"p_{{{lab}}}" for lab in self.ice.labels[self.n :]]

    def y_from_ice(self) -> tuple[TropicalMonomial, ...]:
        b, n = self.ice.b, self.n
        return tuple(
            TropicalMonomial(tuple(b[a][j] for a in range(n, self.nvars)))
            for j in range(n)
        )

    def check_consistency(self) -> None:
        if self.y != self.y_from_ice():
            raise AssertionError("tracked y-tuple disagrees with the ice quiver")

    def canonical_key(self) -> frozenset:
        return frozenset(self.cluster)

    def variable_name(self, poly: LaurentPoly) -> str:
        """Name a cluster variable by its denominator vector.

        Initial variables are named by negative simple roots; for Dynkin seeds
        every other variable has a positive root as denominator vector.
        """
        den = poly.denominator(range(self.n))
        vec = tuple(den[i] for i in range(self.n))
        if any(vec):
            return f"x_{{{Root(vec)}}}" if self.rank else f"x_{{{vec}}}"
        for i in range(self.n):
            if poly == LaurentPoly.variable(self.nvars, i):
                return f"x_{{{Root.simple(i, self.n, -1)}}}" if self.rank else f"x_{i + 1}"
        raise ValueError("cluster variable with trivial denominator is not initial")

    def variable_root(self, poly: LaurentPoly) -> Root:
        den = poly.denominator(range(self.n))
        vec = tuple(den[i] for i in range(self.n))
        if any(vec):
            return Root(vec)
        for i in range(self.n):
            if poly == LaurentPoly.variable(self.nvars, i):
                return Root.simple(i, self.n, -1)
        raise ValueError("cluster variable with trivial denominator is not initial")

    def to_json(self) -> dict:
        names = [f"x{i + 1}" for i in range(self.n)] + self.frozen_names()
        return {
            "b_matrix": [list(r) for r in self.ice.b],
            "n": self.n,
            "frozen_labels": list(self.ice.labels[self.n :]),
            "cluster": [x.format(names) for x in self.cluster],
            "y": [yj.format(self.frozen_names()) for yj in self.y],
        }


def _initial_cluster(size: int, n: int) -> tuple[LaurentPoly, ...]:
    return tuple(LaurentPoly.variable(size, i) for i in range(n))


def seed_from_ice(ice: IceQuiver, rank: int = 0) -> Seed:
    seed = Seed(ice, _initial_cluster(ice.size, ice.n), (), rank)
    return Seed(ice, seed.cluster, seed.y_from_ice(), rank)


def universal_seed(orientation: Orientation) -> Seed:
    """Initial seed of the cluster algebra of Q with universal coefficients.

    Frozen vertices are the almost positive roots; ``b[alpha][j]`` is
    ``eps(j) [alpha : alpha_j]``.
    """
    sign = orientation.sign()  # rejects non-bipartite input
    rs = RootSystem(orientation.diagram)
    n = rs.rank
    roots = rs.almost_positive
    size = n + len(roots)
    b = [[0] * size for _ in range(size)]
    for i, j in orientation.arrows:
        b[i][j] += 1
        b[j][i] -= 1
    for a, alpha in enumerate(roots):
        for j in range(n):
            e = sign[j] * alpha.coeffs[j]
            b[n + a][j] = e
            b[j][n + a] = -e
    labels = tuple(str(i + 1) for i in range(n)) + tuple(str(r) for r in roots)
    return seed_from_ice(IceQuiver(b, n, labels), rank=n)


def _factor_sort_key(seed: Seed, var: int, poly: LaurentPoly | None):
    """Frozen factors before cluster variables, each in root display order."""
    if var >= seed.n:
        label = seed.ice.labels[var]
        if seed.rank:
            return (0, display_key(Root.parse(label, seed.rank)))
        return (0, (var,))
    if seed.rank:
        return (1, display_key(seed.variable_root(poly)))
    return (1, (var,))


def mutate_seed(seed: Seed, k: int) -> tuple[Seed, ExchangeRelation]:
    """Mutate at ``k`` and return the new seed with its exchange relation."""
    ice = seed.ice
    if not 0 <= k < seed.n:
        raise ValueError(f"cannot mutate at frozen or missing vertex {k}")
    size = seed.nvars

    def var_poly(i: int) -> LaurentPoly:
        return seed.cluster[i] if i < seed.n else LaurentPoly.variable(size, i)

    sides = []
    for sgn in (1, -1):
        mono = LaurentPoly.one(size)
        factors = []
        for i in range(size):
            e = sgn * ice.b[i][k]
            if e > 0:
                p = var_poly(i)
                for _ in range(e):
                    mono = mono * p
                factors.append((i, e, p))
        sides.append((mono, factors))
    new_x = exact_divide(sides[0][0] + sides[1][0], seed.cluster[k])
    cluster = list(seed.cluster)
    cluster[k] = new_x

    bk = [ice.b[k][j] for j in range(seed.n)]
    yk = seed.y[k]
    y = []
    for j in range(seed.n):
        if j == k:
            y.append(yk.inverse())
        else:
            y.append(seed.y[j] * yk ** max(bk[j], 0) * yk.oplus_one() ** (-bk[j]))
    out = Seed(mutate(ice, k), tuple(cluster), tuple(y), seed.rank)
    out.check_consistency()

    def name(i: int, p: LaurentPoly) -> str:
        if i >= seed.n:
            return f"p_{{{ice.labels[i]}}}"
        return seed.variable_name(p)

    monos = []
    for _, factors in sides:
        ordered = sorted(factors, key=lambda f: _factor_sort_key(seed, f[0], f[2]))
        monos.append((tuple((name(i, p), e) for i, e, p in ordered),
                      sum(1 for i, _, _ in factors if i < seed.n)))
    # the monomial carrying cluster variables is written first
    if monos[1][1] > monos[0][1]:
        monos.reverse()
    rel = ExchangeRelation(
        seed.variable_name(seed.cluster[k]),
        out.variable_name(new_x),
        (monos[0][0], monos[1][0]),
    )
    return out, rel


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class ExchangeGraph:
    seeds: dict[frozenset, Seed] = field(default_factory=dict)
    edges: set[frozenset] = field(default_factory=set)
    variables: set[LaurentPoly] = field(default_factory=set)
    relations: dict[frozenset, ExchangeRelation] = field(default_factory=dict)

    @property
    def n_seeds(self) -> int:
        return len(self.seeds)

    @property
    def n_variables(self) -> int:
        return len(self.variables)

    def variable_names(self) -> list[str]:
        seed = next(iter(self.seeds.values()))
        return sorted(seed.variable_name(v) for v in self.variables)


def exchange_graph(seed: Seed, budget: int = 10_000) -> ExchangeGraph:
    """Breadth-first closure of ``seed`` under all mutations."""
    g = ExchangeGraph()
    start = seed.canonical_key()
    g.seeds[start] = seed
    g.variables.update(seed.cluster)
    queue = deque([seed])
    while queue:
        s = queue.popleft()
        key = s.canonical_key()
        for k in range(s.n):
            t, rel = mutate_seed(s, k)
            _assert_laurent(t.cluster[k], t.n)
            tkey = t.canonical_key()
            g.edges.add(frozenset((key, tkey)))
            g.relations.setdefault(rel.key(), rel)
            if tkey not in g.seeds:
                if len(g.seeds) >= budget:
                    raise BudgetExceeded(
                        f"exchange graph exceeds the budget of {budget} seeds; "
                        "the input is probably not of finite type"
                    )
                g.seeds[tkey] = t
                g.variables.add(t.cluster[k])
                queue.append(t)
    return g


def _assert_laurent(poly: LaurentPoly, n: int) -> None:
    """Denominator is a monomial in the cluster variables only."""
    lo = poly.min_exponents()
    if any(v < 0 for v in lo[n:]):
        raise AssertionError("coefficient variables appear in a denominator")
    den = [max(0, -v) for v in lo[:n]] + [0] * (poly.nvars - n)
    numerator = poly.shift(den)
    if min(numerator.min_exponents()) < 0:
        raise AssertionError("cluster variable is not Laurent")


def principal_seed(q: Orientation) -> Seed:
    """Initial seed with principal coefficients: one frozen i' -> i per vertex."""
    n = q.n
    b = [[0] * (2 * n) for _ in range(2 * n)]
    for i, j in q.arrows:
        b[i][j] += 1
        b[j][i] -= 1
    for i in range(n):
        b[n + i][i] = 1
        b[i][n + i] = -1
    labels = tuple(str(i + 1) for i in range(n)) + tuple(f"{i + 1}'" for i in range(n))
    return seed_from_ice(IceQuiver(b, n, labels))


def trivial_seed(q: Orientation) -> Seed:
    n = q.n
    b = [[0] * n for _ in range(n)]
    for i, j in q.arrows:
        b[i][j] += 1
        b[j][i] -= 1
    return seed_from_ice(IceQuiver(b, n, tuple(str(i + 1) for i in range(n))))


@dataclass
class SpecializationReport:
    ok: bool
    images: dict[str, tuple[int, ...]] | None  # p label -> exponents over target frozen
    seeds_checked: int
    unique: bool
    failure: str = ""

    def format_map(self, target_frozen: Sequence[str]) -> list[str]:
        if self.images is None:
            return []
        return [
            f"p_{{{lab}}} -> {TropicalMonomial(e).format(target_frozen)}"
            for lab, e in self.images.items()
        ]


def check_specialization(universal: Seed, target: Seed, budget: int = 10_000) -> SpecializationReport:
    """Search for the coefficient specialization from ``universal`` to ``target``.

    Both seeds are mutated in lockstep over the exchange graph.  The unknown
    map sends each generator p_a to a monomial in the target's frozen
    generators; the conditions ``phi(y) = ybar`` and
    ``phi(y + 1) = ybar + 1`` (tropical sum) are linear in its exponents.
    """
    if universal.ice.mutable_part() != target.ice.mutable_part():
        return SpecializationReport(False, None, 0, False, "mutable quivers differ")
    m, r = universal.ice.m, target.ice.m
    pairs = []
    seen = {universal.canonical_key()}
    queue = deque([(universal, target)])
    while queue:
        u, t = queue.popleft()
        pairs.append((u, t))
        for k in range(u.n):
            u2, _ = mutate_seed(u, k)
            key = u2.canonical_key()
            if key in seen:
                continue
            if len(seen) >= budget:
                raise BudgetExceeded(f"specialization search exceeds {budget} seeds")
            seen.add(key)
            t2, _ = mutate_seed(t, k)
            queue.append((u2, t2))

    rows, rhs = [], []
    for u, t in pairs:
        for j in range(u.n):
            e, eb = u.y[j].exps, t.y[j].exps
            rows.append([Fraction(v) for v in e])
            rhs.append(eb)
            rows.append([Fraction(min(v, 0)) for v in e])
            rhs.append(tuple(min(v, 0) for v in eb))
    null_dim = len(linalg.nullspace(rows, m)) if rows else m
    unique = r == 0 or null_dim == 0
    columns = []
    for g in range(r):
        sol = linalg.solve(rows, [Fraction(b[g]) for b in rhs], m)
        if sol is None:
            return SpecializationReport(
                False, None, len(pairs), unique,
                f"no map satisfies the y-conditions for target generator {target.ice.labels[target.n + g]}",
            )
        if any(v.denominator != 1 for v in sol):
            return SpecializationReport(False, None, len(pairs), unique, "only a non-integral solution exists")
        columns.append([int(v) for v in sol])
    images = {
        universal.ice.labels[universal.n + a]: tuple(columns[g][a] for g in range(r))
        for a in range(m)
    }
    # the map must carry every universal cluster variable to the target one
    size_t = target.nvars
    subst = [LaurentPoly.variable(size_t, i) for i in range(universal.n)]
    for a in range(m):
        exps = [0] * size_t
        for g in range(r):
            exps[target.n + g] = columns[g][a]
        subst.append(LaurentPoly.monomial(exps))
    for idx, (u, t) in enumerate(pairs):
        for j in range(u.n):
            if u.cluster[j].substitute(subst) != t.cluster[j]:
                return SpecializationReport(
                    False, images, len(pairs), unique,
                    f"cluster variable {j + 1} of seed {idx} is not carried to its target",
                )
        for j in range(u.n):
            yj, yb = u.y[j], t.y[j]
            img = [sum(columns[g][a] * yj.exps[a] for a in range(m)) for g in range(r)]
            img1 = [sum(columns[g][a] * min(yj.exps[a], 0) for a in range(m)) for g in range(r)]
            if tuple(img) != yb.exps or tuple(img1) != yb.oplus_one().exps:
                return SpecializationReport(False, images, len(pairs), unique, f"y-condition fails at seed {idx}")
    return SpecializationReport(True, images, len(pairs), unique)


def relation_sequence(seed: Seed, word: Sequence[int]) -> tuple[Seed, list[ExchangeRelation]]:
    """Apply mutations in order (0-based vertices), collecting relations."""
    rels = []
    for k in word:
        seed, rel = mutate_seed(seed, k)
        rels.append(rel)
    return seed, rels


__all__ = [
    "TropicalMonomial",
    "ExchangeRelation",
    "Seed",
    "ExchangeGraph",
    "BudgetExceeded",
    "SpecializationReport",
    "universal_seed",
    "principal_seed",
    "trivial_seed",
    "seed_from_ice",
    "mutate_seed",
    "exchange_graph",
    "check_specialization",
    "relation_sequence",
    "display_key",
]
