from collections import deque

import pytest

from mssp.gen import (annulus_grid, genus_grid, mobius_grid, torus_grid)
from mssp.surface import edge_of, rev
from mssp.surgery import (crossing_count, cut_along, contract_boundary,
                          paste_disk, split_components)


def dart_between(g, u, v):
    for d in g.rot[u]:
        if g.head[d] == v:
            return d
    raise AssertionError((u, v))


def walk_through(g, vertices):
    return [dart_between(g, u, v)
            for u, v in zip(vertices, vertices[1:] + vertices[:1])]


def census(g):
    return sorted((sub.genus(), len(sub.boundary_faces))
                  for sub, _, _ in split_components(g))


def bfs_arc(g, src, targets):
    prev = {src: None}
    q = deque([src])
    while q:
        v = q.popleft()
        if v in targets and v != src:
            walk = []
            while prev[v] is not None:
                walk.append(prev[v])
                v = g.tail[prev[v]]
            walk.reverse()
            return walk
        for d in g.rot[v]:
            if g.head[d] not in prev:
                prev[g.head[d]] = d
                q.append(g.head[d])
    raise AssertionError("no arc found")


def test_torus_meridian_cut():
    g = torus_grid(3, 3)
    cut = cut_along(g, walk_through(g, [0, 3, 6]))
    assert census(cut.g) == [(0, 2)]
    assert len(cut.slits) == 2
    assert cut.g.n == g.n + 3 and cut.g.m == g.m + 3


def test_cut_then_paste_restores_counts():
    g = torus_grid(3, 3)
    cut = cut_along(g, walk_through(g, [0, 3, 6]))
    g2 = cut.g
    for f in cut.slits:
        g2 = paste_disk(g2, f)
    assert not g2.boundary_faces
    assert g2.genus() == 0
    assert g2.nfaces == g.nfaces + 2


def test_facial_cycle_cut_splits_off_disk():
    g = torus_grid(3, 3)
    cut = cut_along(g, list(g.faces[0]))
    assert census(cut.g) == [(0, 1), (1, 1)]


def test_separating_cycle_on_genus_two():
    gg = genus_grid(2, 3, 3)
    t = torus_grid(3, 3)
    fa = next(f for f in range(t.nfaces) if len(t.faces[f]) == 4)
    cut = cut_along(gg, list(t.faces[fa]))   # dart ids survive the gluing
    assert census(cut.g) == [(1, 1), (1, 1)]


def test_one_sided_cut_on_mobius():
    mb = mobius_grid(3, 5)
    core = walk_through(mb, [5 + j for j in range(5)])
    cut = cut_along(mb, core)
    assert len(cut.slits) == 1
    assert census(cut.g) == [(0, 2)]
    assert cut.g.orientable


def test_arc_cut_turns_annulus_into_disk():
    a = annulus_grid(3, 4)
    bf = sorted(a.boundary_faces)
    rim1 = set(a.tail[d] for d in a.faces[bf[1]])
    v0 = a.tail[a.faces[bf[0]][0]]
    arc = bfs_arc(a, v0, rim1)
    cut = cut_along(a, arc, arc=True)
    assert census(cut.g) == [(0, 1)]


def test_rejects_bad_walks():
    g = torus_grid(3, 3)
    with pytest.raises(ValueError):
        cut_along(g, [g.rot[0][0], rev(g.rot[0][0])])   # spur
    with pytest.raises(ValueError):
        cut_along(g, walk_through(g, [0, 3, 6])[:2])    # open "cycle"
    with pytest.raises(ValueError):
        cut_along(g, [])


def test_crossing_counts_on_torus():
    g = torus_grid(3, 3)
    cut = cut_along(g, walk_through(g, [0, 3, 6]))
    assert crossing_count(cut, walk_through(g, [0, 1, 2])) == 1
    assert crossing_count(cut, walk_through(g, [1, 4, 7])) == 0
    long_walk = walk_through(g, [0, 1, 2]) * 3
    assert crossing_count(cut, long_walk) == 3


def test_contract_boundary_gives_apex():
    a = annulus_grid(3, 4)
    bf = sorted(a.boundary_faces)
    g2, apex, vmap, emap = contract_boundary(a, bf[0])
    assert g2.genus() == 0
    assert len(g2.boundary_faces) == 1
    assert len(g2.rot[apex]) == 4
    assert g2.n == a.n - 3 and g2.m == a.m - 4
    # incident weights survive; the boundary's own edges vanish
    assert all(e not in set(edge_of(d) for d in a.faces[bf[0]])
               for e in emap)


def test_contract_both_boundaries_closes_the_surface():
    a = annulus_grid(3, 4)
    g2, _, _, _ = contract_boundary(a, sorted(a.boundary_faces)[0])
    g3, _, _, _ = contract_boundary(g2, next(iter(g2.boundary_faces)))
    assert g3.genus() == 0 and not g3.boundary_faces


def test_paste_disk_requires_boundary():
    g = torus_grid(3, 3)
    with pytest.raises(ValueError):
        paste_disk(g, 0)


def test_cut_preserves_untouched_faces_and_weights():
    g = torus_grid(3, 4)
    cut = cut_along(g, walk_through(g, [0, 4, 8]))
    g2 = cut.g
    for e2, e in enumerate(cut.emap):
        assert g2.raw_w[2 * e2] == g.raw_w[2 * e]
        assert g2.raw_w[2 * e2 + 1] == g.raw_w[2 * e + 1]
    for v2 in range(g2.n):
        assert 0 <= cut.vmap[v2] < g.n
    interior = [f for f in range(g2.nfaces) if f not in cut.slits]
    assert len(interior) == g.nfaces
