import pytest

from frobcluster.meshcat import HomCategory, RepetitionQuiver, Vertex
from frobcluster.nakajima import (
    Configuration,
    InfiniteHom,
    OrbitMap,
    build_config_quiver,
    full_config_quiver,
    is_admissible,
    orbit_quiver,
    parse_configuration,
)
from frobcluster.rootsys import RootSystem, diagram


def bip(family, rank):
    return diagram(family, rank).bipartite_orientation()


@pytest.mark.parametrize("family,rank,arrows", [
    ("A", 1, 4), ("A", 2, 15), ("A", 3, 30), ("D", 4, 56),
])
def test_full_orbit_quiver_counts(family, rank, arrows):
    q = bip(family, rank)
    oq = orbit_quiver(full_config_quiver(q))
    phi = len(RootSystem(q.diagram).almost_positive)
    assert len(oq.mutable) == len(oq.frozen) == phi
    assert sum(oq.arrows.values()) == arrows


@pytest.mark.parametrize("n", [1, 2, 3])
def test_higher_f_power_orbit_count(n):
    q = bip("A", 2)
    oq = orbit_quiver(full_config_quiver(q, n))
    assert len(oq.mutable) == n * 3 + 2


def test_orbit_map_canonical():
    om = OrbitMap(bip("A", 3))
    for v in om.orbit_reps(False):
        assert om.canonical(v) == v
        assert om.canonical(om.F(v, 3)) == v
        assert om.canonical(om.F(v, -2)) == v
    with pytest.raises(ValueError):
        OrbitMap(bip("A", 3), 0)


def test_admissibility():
    q = bip("A", 3)
    assert is_admissible(Configuration(q)).admissible
    assert not is_admissible(Configuration(q, 1, frozenset())).admissible
    assert not is_admissible(parse_configuration("(1,0)", q)).admissible
    rep = is_admissible(parse_configuration("(1,0);(2,1);(3,0)", q))
    assert rep.admissible and len(rep.witnesses) == 9


def test_a2_single_orbit_configurations():
    q = bip("A", 2)
    om = OrbitMap(q)
    results = [is_admissible(Configuration(q, 1, frozenset([v]))).admissible
               for v in om.orbit_reps(False)]
    assert not any(results)


def test_parse_configuration_errors():
    q = bip("A", 3)
    with pytest.raises(ValueError):
        parse_configuration("(5,0)", q)
    with pytest.raises(ValueError):
        parse_configuration("(1',0)", q)
    with pytest.raises(ValueError):
        parse_configuration("junk", q)


def test_proper_configuration_frozen_count():
    q = bip("A", 3)
    config = parse_configuration("(1,0);(2,1);(3,0)", q)
    oq = orbit_quiver(build_config_quiver(config))
    assert len(oq.mutable) == 9
    assert len(oq.frozen) == config.orbit_count() == 3


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("D", 4)])
def test_stable_homs_equal_unframed(family, rank):
    q = bip(family, rank)
    cq = full_config_quiver(q)
    unframed = HomCategory(RepetitionQuiver(q))
    h = q.diagram.coxeter_number
    for x in cq.fmap.orbit_reps(False):
        for p in range(x.p, x.p + h + 1):
            for i in range(rank):
                y = Vertex(i, p)
                assert cq.stable_hom_dim(x, y) == unframed.hom_dim(x, y)


def test_framed_homs_do_not_vanish():
    cq = full_config_quiver(bip("A", 2))
    x = Vertex(0, 0)
    assert cq.orbit_hom_series(x, x, 4) == [1, 1, 1, 1, 1]
    with pytest.raises(InfiniteHom):
        cq.orbit_hom_dim(x, x)


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("D", 4)])
def test_ext_symmetry_and_frozen(family, rank):
    cq = full_config_quiver(bip(family, rank))
    oq = orbit_quiver(cq)
    for x in oq.vertices:
        for y in oq.vertices:
            if x.frozen or y.frozen:
                assert cq.ext1(x, y) == 0
            else:
                assert cq.ext1(x, y) == cq.ext1(y, x)
    assert all(cq.ext1(x, x) == 0 for x in oq.mutable)


@pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4)])
def test_mesh_exactness(family, rank):
    cq = full_config_quiver(bip(family, rank))
    assert cq.mesh_exactness(orbit_quiver(cq).mutable) == []
