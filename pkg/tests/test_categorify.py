import json
from collections import Counter

import pytest

from figures import A2_ORBIT_QUIVER, A3_ORBIT_QUIVER
from frobcluster.categorify import (
    SCHEMA,
    Label,
    approximation_triangle,
    cluster_tilting,
    conflation_dictionary,
    exchange_conflations,
    ext1,
    gabriel_data,
    gabriel_quiver_oracle,
    ice_quiver_direct,
    initial_object,
    mutation_compatibility,
    replay_relations,
    resolution_check,
    universal_labeled_quiver,
    verify_main_theorem,
)
from frobcluster.clusteralg import universal_seed
from frobcluster.nakajima import parse_configuration
from frobcluster.quiver import same_ice_quiver
from frobcluster.rootsys import Orientation, Root, RootSystem, diagram
from test_acceptance import _matches_up_to_automorphism


def bip(family, rank):
    return diagram(family, rank).bipartite_orientation()


def X(text, n):
    return Label("X", Root.parse(text, n))


def P(text, n):
    return Label("P", Root.parse(text, n))


@pytest.fixture(scope="module")
def a2():
    return universal_labeled_quiver(bip("A", 2))


@pytest.fixture(scope="module")
def a3():
    return universal_labeled_quiver(bip("A", 3))


def test_labels_a2(a2):
    assert a2.labelled_arrows() == Counter(A2_ORBIT_QUIVER)
    assert str(X("-a1", 2)) == "X_{-a1}" and X("-a1", 2).variable == "x_{-a1}"
    assert P("a1+a2", 2).variable == "p_{a1+a2}"


def test_labels_a3_up_to_automorphism(a3):
    q = bip("A", 3)
    assert _matches_up_to_automorphism(q, a3.labelled_arrows(), A3_ORBIT_QUIVER)
    swapped = [(a.replace("a1", "@").replace("a3", "a1").replace("@", "a3"),
                b.replace("a1", "@").replace("a3", "a1").replace("@", "a3"))
               for a, b in A3_ORBIT_QUIVER]
    assert _matches_up_to_automorphism(q, a3.labelled_arrows(), swapped)
    broken = A3_ORBIT_QUIVER[:-1] + [("X_{a1}", "X_{a2}")]
    assert not _matches_up_to_automorphism(q, a3.labelled_arrows(), broken)


@pytest.mark.parametrize("family,rank", [("A", 4), ("D", 4)])
def test_every_root_labels_one_orbit(family, rank):
    q = bip(family, rank)
    loq = universal_labeled_quiver(q)
    roots = RootSystem(q.diagram).almost_positive
    for kind in "XP":
        assert sorted(lab.root for lab in loq.label.values() if lab.kind == kind) == sorted(roots)


def test_shifted_projectives_get_negative_simple(a3):
    # the orbit of Sigma P(i) carries -a_i
    from frobcluster.nakajima import happel
    from frobcluster.meshcat import Vertex

    hc = happel(bip("A", 3))
    for i in range(3):
        v = a3.cq.fmap.canonical(hc.Sigma(Vertex(i, 0)))
        assert a3.label[v] == Label("X", Root.simple(i, 3, -1))


def test_initial_object(a3):
    t = cluster_tilting(a3)
    assert t.mutable == [X("-a1", 3), X("-a2", 3), X("-a3", 3)]
    assert len(t.frozen) == 9 and len(t.summands) == 12
    assert [str(lab.root) for lab in t.frozen] == [str(a) for a in RootSystem(diagram("A", 3)).almost_positive]


def test_rigidity_and_maximality_errors(a3):
    with pytest.raises(AssertionError):
        cluster_tilting(a3, [X("-a1", 3), X("a1", 3), X("-a3", 3)])
    with pytest.raises(AssertionError):
        cluster_tilting(a3, [X("-a1", 3), X("-a3", 3)])


def test_exchange_pair_ext(a2):
    assert ext1(a2, X("-a1", 2), X("a1", 2)) == 1
    assert ext1(a2, X("-a1", 2), X("-a2", 2)) == 0
    assert ext1(a2, P("a1", 2), X("a1", 2)) == 0


def test_exchange_conflations_a2():
    q = bip("A", 2)
    first, second = exchange_conflations(q, 0)
    assert (first.left, first.right) == (X("-a1", 2), X("a1", 2))
    assert first.middle == Counter({X("-a2", 2): 1, P("-a1", 2): 1})
    assert second.middle == Counter({P("a1", 2): 1, P("a1+a2", 2): 1})
    assert "X_{-a1}" in str(first)


@pytest.mark.parametrize("family,rank", [("A", 1), ("A", 3), ("D", 4), ("D", 5)])
def test_direct_equals_universal(family, rank):
    q = bip(family, rank)
    assert same_ice_quiver(ice_quiver_direct(q), universal_seed(q).ice)


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("D", 4)])
def test_oracle_equals_universal(family, rank):
    q = bip(family, rank)
    loq = universal_labeled_quiver(q)
    assert same_ice_quiver(gabriel_quiver_oracle(loq), universal_seed(q).ice)


def test_resolution_checks(a3):
    t = cluster_tilting(a3)
    data = gabriel_data(a3, t)
    for lab in t.summands:
        res = resolution_check(a3, data, t, lab)
        assert res.ok, res.detail


def test_approximation_indices(a2):
    got = {str(lab): approximation_triangle(a2, lab).index
           for lab in a2.label.values() if lab.kind == "X"}
    assert got == {
        "X_{-a1}": (1, 0), "X_{-a2}": (0, 1), "X_{a2}": (0, -1),
        "X_{a1}": (-1, 1), "X_{a1+a2}": (-1, 0),
    }


@pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4)])
def test_approximation_indices_injective(family, rank):
    loq = universal_labeled_quiver(bip(family, rank))
    idx = [approximation_triangle(loq, lab).index
           for lab in loq.label.values() if lab.kind == "X"]
    assert len(set(idx)) == len(idx)


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("D", 4)])
def test_dictionary_and_mutation(family, rank):
    q = bip(family, rank)
    loq = universal_labeled_quiver(q)
    base = universal_seed(q).ice
    for k in range(rank):
        assert conflation_dictionary(q, k).ok
        assert mutation_compatibility(loq, k, base).ok


def test_replay_pentagon(a2):
    res = replay_relations(bip("A", 2), a2, [1, 0, 1, 0, 1])
    assert res.ok, res.detail


def test_replay_d4():
    q = bip("D", 4)
    res = replay_relations(q, universal_labeled_quiver(q), [0, 1, 2, 3, 0, 1])
    assert res.ok, res.detail


@pytest.mark.parametrize("family,rank", [("A", 1), ("A", 4), ("D", 4)])
def test_verify(family, rank):
    report = verify_main_theorem(bip(family, rank))
    assert report.ok and report.main_theorem
    data = json.loads(report.dumps())
    assert data["schema"] == SCHEMA
    assert report.dumps() == verify_main_theorem(bip(family, rank)).dumps()


def test_verify_proper_configuration_is_structural_only():
    q = bip("A", 3)
    report = verify_main_theorem(q, parse_configuration("(1,0);(2,1);(3,0)", q))
    assert report.ok and report.main_theorem is None


def test_verify_non_bipartite_rejected():
    q = Orientation.parse(diagram("A", 3), "1>2,2>3")
    with pytest.raises(ValueError):
        verify_main_theorem(q)
