import pytest

from frobcluster.meshcat import (
    HappelCoordinates,
    HomCategory,
    LiteralMesh,
    RepetitionQuiver,
    Vertex,
    WindowError,
    build_zq,
    mesh_hom_dim,
    sigma,
    sigma_inv,
    tau,
)
from frobcluster.repmod import projective_dims
from frobcluster.rootsys import Orientation, diagram


def bip(family, rank):
    return diagram(family, rank).bipartite_orientation()


def test_sigma_inverse():
    for v in [Vertex(0, 3), Vertex(2, -1, True)]:
        assert sigma(sigma_inv(v)) == v and sigma_inv(sigma(v)) == v
    assert sigma(Vertex(0, 2)) == Vertex(0, 1, True)
    assert sigma(Vertex(0, 2, True)) == Vertex(0, 2)


def test_window_and_tau():
    tq = build_zq(bip("A", 2), 0, 3, framed=True)
    assert len(tq.vertices) == 16
    for v in tq.vertices:
        assert tau(v) == Vertex(v.i, v.p - 1, v.frozen)
    with pytest.raises(ValueError):
        build_zq(bip("A", 2), 2, 1)


def test_mesh_arrow_counts():
    q = bip("D", 4)
    rq = RepetitionQuiver(q, framed=True)
    for v in rq.layer(2):
        if not v.frozen:
            preds = rq.predecessors(v)
            unframed = RepetitionQuiver(q).predecessors(v)
            assert len(preds) == len(unframed) + 1
            assert all(tau(v) in rq.predecessors(w) for w in preds)


def test_a2_framed_example():
    # x = (1,0): the two routes to (1,1) commute up to sign in the framed
    # category, while the composite e b into the frozen (2',0) survives
    q = bip("A", 2)
    framed = build_zq(q, 0, 2, framed=True)
    x = Vertex(0, 0)
    assert mesh_hom_dim(framed, x, Vertex(0, 1)).dim == 1
    assert mesh_hom_dim(framed, x, Vertex(1, 0, True)).dim == 1
    # without frozen vertices the mesh at (1,1) has one term only
    unframed = build_zq(q, 0, 2)
    assert mesh_hom_dim(unframed, x, Vertex(0, 1)).dim == 0
    assert mesh_hom_dim(unframed, x, Vertex(1, 0)).dim == 1


def test_window_error():
    tq = build_zq(bip("A", 2), 0, 1)
    with pytest.raises(WindowError):
        mesh_hom_dim(tq, Vertex(0, 0), Vertex(0, 5))


def test_happel_slice_is_projectives():
    for family, rank in [("A", 3), ("D", 4)]:
        q = bip(family, rank)
        happel = HappelCoordinates(q)
        for i in range(rank):
            point = happel.point(Vertex(i, 0))
            assert point.root == projective_dims(q, i) and point.shift == 0


def test_a2_knitting():
    happel = HappelCoordinates(bip("A", 2))
    assert happel.h == 3
    pts = {v: happel.point(v) for v in [Vertex(0, 1), Vertex(1, 0), Vertex(0, 0), Vertex(1, 1)]}
    assert [str(p.root) for p in pts.values()] == ["a2", "a1+a2", "a1", "a1"]
    assert pts[Vertex(1, 1)].shift == 1
    x = Vertex(0, 1)
    assert happel.Sigma(tau(x)) != x and happel.Sigma(x).p > x.p


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("D", 4), ("D", 5), ("E", 6)])
def test_sigma_squared(family, rank):
    happel = HappelCoordinates(bip(family, rank))
    tq = build_zq(happel.q if hasattr(happel, "q") else bip(family, rank), -happel.h, happel.h)
    assert happel.check_sigma_squared(tq.vertices) == []


@pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4)])
def test_serre_symmetry_and_identity(family, rank):
    q = bip(family, rank)
    happel = HappelCoordinates(q)
    tq = build_zq(q, 0, happel.h)
    for x in tq.vertices:
        assert happel.hom_dim_DQ(x, x) == 1
        for y in tq.vertices:
            assert happel.hom_dim_DQ(x, y) == happel.hom_dim_DQ(y, happel.nu(x))


def test_directedness_straight_a():
    q = Orientation.parse(diagram("A", 4), "1>2,2>3,3>4")
    happel = HappelCoordinates(q)
    for x in build_zq(q, 0, 4).vertices:
        for y in build_zq(q, -3, x.p - 1).vertices:
            assert happel.hom_dim_DQ(x, y) == 0


@pytest.mark.parametrize("orientation", ["1>2,2>3", "2>1,2>3", "1>2,3>2,3>4"])
def test_three_models_agree_non_bipartite(orientation):
    rank = orientation.count(">") + 1
    q = Orientation.parse(diagram("A", rank), orientation)
    happel = HappelCoordinates(q)
    tq = build_zq(q, 0, happel.h)
    literal = LiteralMesh(tq)
    engine = HomCategory(RepetitionQuiver(q))
    for x in tq.vertices:
        for y in tq.vertices:
            d = happel.hom_dim_DQ(x, y)
            assert literal.hom_dim(x, y) == d == engine.hom_dim(x, y)


def test_engine_composition():
    q = bip("A", 3)
    homs = HomCategory(RepetitionQuiver(q))
    x, y, z = Vertex(0, 0), Vertex(1, 0), Vertex(2, 1)
    # the route (1,0) -> (2,0) -> (3,1) survives; (1,0) -> (2,0) -> (1,1) is a mesh
    assert homs.hom_dim(x, z) == 1
    assert homs.hom_dim(x, Vertex(0, 1)) == 0
    f = homs.path_class((x, y))
    g = homs.path_class((y, z))
    assert homs.compose(f, x, y, g, z) == homs.path_class((x, y, z))
    assert homs.compose(f, x, y, g, z) != {}
