import pytest

from figures import A2_RELATIONS, A2_UNIVERSAL_ICE
from frobcluster.clusteralg import (
    BudgetExceeded,
    TropicalMonomial,
    check_specialization,
    exchange_graph,
    mutate_seed,
    principal_seed,
    relation_sequence,
    trivial_seed,
    universal_seed,
)
from frobcluster.rootsys import RootSystem, diagram


def bip(family, rank):
    return diagram(family, rank).bipartite_orientation()


def test_universal_a1():
    s = universal_seed(bip("A", 1))
    assert s.n == 1 and s.ice.m == 2
    assert s.ice.labelled_arrows() == {("a1", "1"): 1, ("1", "-a1"): 1}


def test_universal_a2():
    s = universal_seed(bip("A", 2))
    assert s.ice.labelled_arrows() == {a: 1 for a in A2_UNIVERSAL_ICE}
    names = s.frozen_names()
    assert s.y[0].format(names) == s.y_from_ice()[0].format(names)
    y1 = dict(zip(names, s.y[0].exps))
    assert y1 == {"p_{a1}": 1, "p_{a2}": 0, "p_{a1+a2}": 1, "p_{-a1}": -1, "p_{-a2}": 0}


def test_first_relation():
    _, rel = mutate_seed(universal_seed(bip("A", 2)), 1)
    assert str(rel) == A2_RELATIONS[0]


def test_pentagon_relations_and_return():
    s = universal_seed(bip("A", 2))
    final, rels = relation_sequence(s, [1, 0, 1, 0, 1])
    assert [str(r) for r in rels] == A2_RELATIONS
    assert final.canonical_key() == s.canonical_key()


@pytest.mark.parametrize("k", [0, 1, 2])
def test_mutate_twice_is_identity(k):
    s = universal_seed(bip("A", 3))
    t, _ = mutate_seed(s, k)
    u, _ = mutate_seed(t, k)
    assert u.ice == s.ice and u.cluster == s.cluster and u.y == s.y


@pytest.mark.parametrize("family,rank,seeds,variables", [
    ("A", 1, 2, 2), ("A", 2, 5, 5), ("A", 3, 14, 9), ("D", 4, 50, 16),
])
def test_exchange_graph_sizes(family, rank, seeds, variables):
    q = bip(family, rank)
    g = exchange_graph(universal_seed(q))
    assert (g.n_seeds, g.n_variables) == (seeds, variables)
    assert g.n_variables == len(RootSystem(q.diagram).almost_positive)
    for s in g.seeds.values():
        s.check_consistency()


def test_variables_are_named_by_roots():
    q = bip("A", 3)
    g = exchange_graph(universal_seed(q))
    assert sorted(g.variable_names()) == sorted(
        f"x_{{{a}}}" for a in RootSystem(q.diagram).almost_positive)


def test_budget():
    with pytest.raises(BudgetExceeded):
        exchange_graph(universal_seed(bip("A", 3)), budget=3)


def test_tropical_oplus():
    a, b, c = TropicalMonomial((1, -2, 0)), TropicalMonomial((0, 3, -1)), TropicalMonomial((2, 0, 0))
    assert a.oplus(b) == b.oplus(a) == TropicalMonomial((0, -2, -1))
    assert a.oplus(a) == a
    assert a.oplus(b).oplus(c) == a.oplus(b.oplus(c))
    assert a.oplus_one() == a.oplus(TropicalMonomial.one(3))


def test_specialization_trivial():
    q = bip("A", 2)
    rep = check_specialization(universal_seed(q), trivial_seed(q))
    assert rep.ok and rep.unique and rep.seeds_checked == 5
    assert all(not any(img) for img in rep.images.values())


def test_specialization_identity():
    q = bip("A", 2)
    s = universal_seed(q)
    rep = check_specialization(s, s)
    assert rep.ok and rep.unique
    names = s.ice.labels[s.n:]
    for k, name in enumerate(names):
        assert rep.images[name] == tuple(int(j == k) for j in range(len(names)))


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3)])
def test_specialization_principal(family, rank):
    q = bip(family, rank)
    rep = check_specialization(universal_seed(q), principal_seed(q))
    assert rep.ok and rep.unique
