import pytest
from fractions import Fraction

from mssp import surface, gen, msgraph
from mssp.surface import rev, edge_of, build_embedding, dual, tree_cotree


def test_dart_helpers():
    assert rev(4) == 5 and rev(5) == 4
    assert edge_of(4) == 2 and edge_of(5) == 2


def _check_faces_partition(g):
    # every (dart, side) state is assigned a face, and each stored face
    # traversal accounts for one of the two mirror orbits
    assert len(g.face_of_state) == 2 * g.ndarts
    assert sum(len(cyc) for cyc in g.faces) == g.ndarts
    for f, cyc in enumerate(g.faces):
        for d in cyc:
            assert g.face_of_state[(d, 0)] in range(g.nfaces)
    if g.orientable:
        seen = set()
        for cyc in g.faces:
            for d in cyc:
                assert d not in seen
                seen.add(d)
        assert len(seen) == g.ndarts


TOPOLOGY_CASES = [
    # builder, orientable, genus, boundary faces
    (lambda: gen.torus_grid(3, 4), True, 1, 0),
    (lambda: gen.klein_grid(3, 4), False, 2, 0),
    (lambda: gen.annulus_grid(3, 4), True, 0, 2),
    (lambda: gen.mobius_grid(3, 4), False, 1, 1),
    (lambda: gen.projective_grid(3, 4), False, 1, 0),
    (lambda: gen.delaunay_planar(40, seed=1), True, 0, 0),
    (lambda: gen.genus_grid(2, 3, 3), True, 2, 0),
    (lambda: gen.genus_grid(3, 3, 3), True, 3, 0),
]


@pytest.mark.parametrize("builder,orient,genus,nbound", TOPOLOGY_CASES)
def test_generator_topology(builder, orient, genus, nbound):
    g = builder()
    assert g.orientable == orient
    assert g.genus() == genus
    assert len(g.boundary_faces) == nbound
    _check_faces_partition(g)


def test_face_sides_consistent():
    g = gen.torus_grid(3, 3)
    for d in range(g.ndarts):
        assert g.right_face(d) == g.left_face(rev(d))
        fl, fr = g.edge_faces(edge_of(d))
        assert {g.left_face(d), g.right_face(d)} == {fl, fr}


def test_subdivide_preserves_surface():
    for builder in (lambda: gen.torus_grid(3, 3),
                    lambda: gen.klein_grid(3, 3),
                    lambda: gen.annulus_grid(2, 4)):
        g = builder()
        h = gen.subdivide_all(g)
        assert h.n == g.n + g.m
        assert h.orientable == g.orientable
        assert h.genus() == g.genus()
        assert len(h.boundary_faces) == len(g.boundary_faces)


def _face_vertex(g, cyc):
    return g.tail[cyc[0]]


@pytest.mark.parametrize("builder", [
    lambda: gen.torus_grid(3, 3),
    lambda: gen.delaunay_planar(30, seed=2),
    lambda: gen.genus_grid(2, 3, 3),
])
def test_dual_convention(builder):
    g = builder()
    gd = dual(g)
    assert gd.n == g.nfaces
    assert gd.m == g.m
    assert gd.genus() == g.genus()
    # dual faces are primal vertex stars
    stars = set()
    for cyc in gd.faces:
        verts = {g.tail[d] for d in cyc}
        assert len(verts) == 1
        v = verts.pop()
        assert len(cyc) == g.degree(v)
        stars.add(v)
    assert stars == set(range(g.n))
    # taking the dual twice reverses every dart
    gdd = dual(gd)
    phi = {f: _face_vertex(g, cyc) for f, cyc in enumerate(gd.faces)}
    for d in range(g.ndarts):
        assert phi[gdd.tail[d]] == g.tail[rev(d)]
        assert phi[gdd.head[d]] == g.head[rev(d)]


@pytest.mark.parametrize("builder,loops", [
    (lambda: gen.torus_grid(3, 3), 2),
    (lambda: gen.klein_grid(3, 3), 2),
    (lambda: gen.genus_grid(2, 3, 3), 4),
    (lambda: gen.delaunay_planar(25, seed=3), 0),
])
def test_tree_cotree_counts(builder, loops):
    g = builder()
    T, C, L, pred = tree_cotree(g, 0)
    assert len(T) == g.n - 1
    assert len(L) == loops
    assert len(T) + len(C) + len(L) == g.m
    # pred darts form a tree on all vertices
    assert pred[0] is None
    for v in range(1, g.n):
        d = pred[v]
        assert g.head[d] == v and edge_of(d) in T


def test_tree_cotree_weighted():
    from mssp.weights import WeightTable, RATIONAL
    g = gen.random_weights(gen.torus_grid(4, 4), seed=5)
    wt = WeightTable(g.raw_w, RATIONAL, seed=5)
    T, C, L, pred = tree_cotree(g, 0, use_weights=wt)
    assert len(L) == 2


def test_build_rejects_bad_rotation():
    # rotation listing a dart at the wrong vertex
    with pytest.raises(ValueError):
        build_embedding(2, [(0, 1, 1, 1)], [[0, 1], []])


def test_missing_reversal_synthesized():
    g = build_embedding(2, [(0, 1, 1, None)], [[0], [1]])
    assert g.synthesized == {1}
    assert g.raw_w[1] > g.raw_w[0]


def test_nonorientable_detection():
    g = gen.klein_grid(3, 3)
    assert not g.orientable
    assert gen.torus_grid(3, 3).orientable


def test_msgraph_roundtrip():
    for builder in (lambda: gen.torus_grid(3, 3),
                    lambda: gen.klein_grid(3, 3),
                    lambda: gen.mobius_grid(3, 3)):
        g = builder()
        text = msgraph.write(g)
        h = msgraph.parse(text)
        assert h.n == g.n and h.m == g.m
        assert h.sig == g.sig
        assert h.rot == g.rot
        assert h.genus() == g.genus()
        assert h.orientable == g.orientable
        assert msgraph.write(h) == text


def test_msgraph_fraction_weights():
    base = gen.torus_grid(3, 3)
    g = gen.reweight(base, [Fraction(d + 1, 3) for d in range(2 * base.m)])
    h = msgraph.parse(msgraph.write(g))
    assert h.raw_w[0] == Fraction(1, 3)


@pytest.mark.parametrize("text", [
    "msgraph 2 orientable\nvertices 1\nedges 0\n",        # bad version
    "msgraph 1 orientable\nvertices 1\nedges 1\n",        # missing edge
    ("msgraph 1 orientable\nvertices 2\nedges 1\n"
     "edge 0 0 5 1 1 0\nrot 0 +0\nrot 1 -0\n"),           # vertex out of range
    ("msgraph 1 nonorientable\nvertices 2\nedges 1\n"
     "edge 0 0 1 1 1 0\nrot 0 +0\nrot 1 -0\n"),           # orientability lie
])
def test_msgraph_rejects(text):
    with pytest.raises(msgraph.FormatError):
        msgraph.parse(text)


def test_glue_adds_handle():
    a = gen.torus_grid(3, 3)
    b = gen.torus_grid(3, 3)
    g = gen.glue(a, b, 0, 0)
    assert g.genus() == 2
    assert g.orientable
