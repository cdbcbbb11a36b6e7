import heapq
import math
import random

import pytest

from mssp import gen
from mssp.planar import PlanarMSSP, dijkstra_darts
from mssp.weights import WeightTable, RATIONAL, FLOAT


def raw_dijkstra(g, src):
    dist = [None] * g.n
    h = [(0, src)]
    while h:
        dv, v = heapq.heappop(h)
        if dist[v] is not None:
            continue
        dist[v] = dv
        for d in g.rot[v]:
            u = g.head[d]
            if dist[u] is None:
                heapq.heappush(h, (dv + g.raw_w[d], u))
    return dist


@pytest.mark.parametrize("seed", range(5))
def test_all_corners_match_dijkstra(seed):
    rng = random.Random(seed)
    g = gen.random_weights(gen.delaunay_planar(rng.choice([15, 30, 45]),
                                               seed=seed), seed=seed + 50)
    face = rng.randrange(g.nfaces)
    ms = PlanarMSSP(g, face, debug=True)
    for i, c in enumerate(ms.corners):
        truth = raw_dijkstra(g, c)
        for x in range(g.n):
            assert ms.dist(i, x) == truth[x]


def test_annulus_rim_sweep():
    g = gen.random_weights(gen.annulus_grid(4, 7), seed=11)
    rim = next(iter(g.boundary_faces))
    ms = PlanarMSSP(g, rim, debug=True)
    assert len(ms.corners) == 7
    for i, c in enumerate(ms.corners):
        truth = raw_dijkstra(g, c)
        assert all(ms.dist(i, x) == truth[x] for x in range(g.n))


def test_paths_are_shortest():
    g = gen.random_weights(gen.delaunay_planar(25, seed=2), seed=3)
    ms = PlanarMSSP(g, 0)
    for i, c in enumerate(ms.corners):
        truth = raw_dijkstra(g, c)
        for x in range(g.n):
            p = ms.path(i, x)
            if x == c:
                assert p == []
                continue
            assert g.tail[p[0]] == c and g.head[p[-1]] == x
            for d1, d2 in zip(p, p[1:]):
                assert g.head[d1] == g.tail[d2]
            assert sum(g.raw_w[d] for d in p) == truth[x]


def test_float_mode_close():
    g = gen.random_weights(gen.delaunay_planar(40, seed=6), seed=7)
    ms = PlanarMSSP(g, 2, mode=FLOAT)
    truth = raw_dijkstra(g, ms.corners[1])
    err = max(abs(ms.dist(1, x) - truth[x]) for x in range(g.n))
    assert err < 1e-6


def test_asymmetric_weights():
    g = gen.random_weights(gen.delaunay_planar(20, seed=8), seed=9,
                           symmetric=False)
    assert any(g.raw_w[2 * e] != g.raw_w[2 * e + 1] for e in range(g.m))
    ms = PlanarMSSP(g, 0, debug=True)
    for i, c in enumerate(ms.corners):
        truth = raw_dijkstra(g, c)
        assert all(ms.dist(i, x) == truth[x] for x in range(g.n))


def test_rejects_nonplanar():
    with pytest.raises(ValueError):
        PlanarMSSP(gen.torus_grid(3, 3), 0)


def test_persistence_budget():
    g = gen.random_weights(gen.delaunay_planar(200, seed=4), seed=5)
    ms = PlanarMSSP(g, 0)
    budget = 64 * math.log2(g.n) * max(ms.pivots, 1) + 2 * g.n
    assert ms.persisted_words() <= budget


def test_dijkstra_darts_tree():
    g = gen.random_weights(gen.delaunay_planar(30, seed=1), seed=1)
    wt = WeightTable(g.raw_w, RATIONAL, seed=0)
    dist, pred = dijkstra_darts(g, 0, wt)
    truth = raw_dijkstra(g, 0)
    for x in range(g.n):
        assert wt.report(dist[x]) == truth[x]
        if x != 0:
            d = pred[x]
            assert g.head[d] == x
            assert dist[g.tail[d]] + wt.vals[d] == dist[x]
