"""Deterministic instance generators.

All generators take an explicit seed where randomness is involved and
return :class:`~mssp.surface.EmbeddedGraph` objects.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .surface import EmbeddedGraph, build_embedding, raw_edges, rev


class Draft:
    """Mutable scratch representation for building embeddings."""

    def __init__(self, num_vertices=0):
        self.edges = []      # (u, v, wf, wr)
        self.sig = []
        self.rot = [[] for _ in range(num_vertices)]

    @property
    def n(self):
        return len(self.rot)

    def add_vertex(self):
        self.rot.append([])
        return len(self.rot) - 1

    def add_edge(self, u, v, wf, wr, sig=0):
        """Append an edge; darts must be placed into rotations by the caller
        unless the default append-at-end placement is wanted."""
        i = len(self.edges)
        self.edges.append((u, v, wf, wr))
        self.sig.append(sig)
        return i

    def place(self, d, vertex, after=None):
        """Insert dart ``d`` into the rotation at ``vertex`` right after dart
        ``after`` (or at the end)."""
        r = self.rot[vertex]
        if after is None:
            r.append(d)
        else:
            r.insert(r.index(after) + 1, d)

    def build(self, boundary_darts=()):
        return build_embedding(self.n, self.edges, self.rot, self.sig,
                               boundary_darts=boundary_darts)


def from_graph(g):
    """Draft initialized with a copy of ``g``."""
    d = Draft(g.n)
    d.edges = list(raw_edges(g))
    d.sig = list(g.sig)
    d.rot = [list(r) for r in g.rot]
    return d


def _grid_ids(r, c):
    def v(i, j):
        return (i % r) * c + (j % c)
    return v


def _quad_rotations(r, c, right_edge, down_edge, has_right, has_down):
    """Rotation [E, N, W, S] at each grid vertex, skipping absent darts."""
    rot = [[] for _ in range(r * c)]
    for i in range(r):
        for j in range(c):
            order = []
            if has_right(i, j):
                order.append(2 * right_edge(i, j))
            iu, jl = (i - 1) % r, (j - 1) % c
            if has_down(iu, j):
                order.append(2 * down_edge(iu, j) + 1)
            if has_right(i, jl):
                order.append(2 * right_edge(i, jl) + 1)
            if has_down(i, j):
                order.append(2 * down_edge(i, j))
            rot[i * c + j] = order
    return rot


def torus_grid(r, c, weights=None):
    """r x c quadrangulated torus (genus 1), unit weights by default."""
    assert r >= 3 and c >= 3, "grids below 3x3 create parallel edges"
    v = _grid_ids(r, c)
    edges = []
    right = {}
    down = {}
    for i in range(r):
        for j in range(c):
            right[(i, j)] = len(edges)
            edges.append((v(i, j), v(i, j + 1), 1, 1))
    for i in range(r):
        for j in range(c):
            down[(i, j)] = len(edges)
            edges.append((v(i, j), v(i + 1, j), 1, 1))
    rot = _quad_rotations(r, c,
                          lambda i, j: right[(i % r, j % c)],
                          lambda i, j: down[(i % r, j % c)],
                          lambda i, j: True, lambda i, j: True)
    g = build_embedding(r * c, edges, rot)
    if weights is not None:
        g = reweight(g, weights)
    assert g.orientable and g.genus() == 1
    return g


def klein_grid(r, c):
    """r x c quadrangulated Klein bottle: the vertical wrap edges glue row
    r-1 to row 0 with mirrored columns and signature 1."""
    assert r >= 3 and c >= 3
    v = _grid_ids(r, c)
    edges, sig = [], []
    right, down, wrap = {}, {}, {}
    for i in range(r):
        for j in range(c):
            right[(i, j)] = len(edges)
            edges.append((v(i, j), v(i, j + 1), 1, 1))
            sig.append(0)
    for i in range(r - 1):
        for j in range(c):
            down[(i, j)] = len(edges)
            edges.append((v(i, j), v(i + 1, j), 1, 1))
            sig.append(0)
    for j in range(c):
        wrap[j] = len(edges)
        edges.append((v(r - 1, j), v(0, (c - j) % c), 1, 1))
        sig.append(1)
    rot = [[] for _ in range(r * c)]
    for i in range(r):
        for j in range(c):
            order = [2 * right[(i, j)]]
            if i > 0:
                order.append(2 * down[(i - 1, j)] + 1)
            else:
                order.append(2 * wrap[(c - j) % c] + 1)
            order.append(2 * right[(i, (j - 1) % c)] + 1)
            if i < r - 1:
                order.append(2 * down[(i, j)])
            else:
                order.append(2 * wrap[j])
            rot[v(i, j)] = order
    g = build_embedding(r * c, edges, rot, sig)
    assert not g.orientable and g.euler() == 0
    return g


def strip_grid(r, c, twisted):
    """r x c grid wrapped horizontally: annulus (twisted=False, two holes)
    or Moebius band (twisted=True, mirrored-row wrap, one hole)."""
    assert r >= 2 and c >= 3
    v = _grid_ids(r, c)
    edges, sig = [], []
    right, down, wrap = {}, {}, {}
    for i in range(r):
        for j in range(c - 1):
            right[(i, j)] = len(edges)
            edges.append((v(i, j), v(i, j + 1), 1, 1))
            sig.append(0)
    for i in range(r - 1):
        for j in range(c):
            down[(i, j)] = len(edges)
            edges.append((v(i, j), v(i + 1, j), 1, 1))
            sig.append(0)
    for i in range(r):
        wrap[i] = len(edges)
        tgt = (r - 1 - i) if twisted else i
        edges.append((v(i, c - 1), v(tgt, 0), 1, 1))
        sig.append(1 if twisted else 0)
    rot = [[] for _ in range(r * c)]
    for i in range(r):
        for j in range(c):
            order = []  # E, N, W, S slots
            if j < c - 1:
                order.append(2 * right[(i, j)])
            else:
                order.append(2 * wrap[i])
            if i > 0:
                order.append(2 * down[(i - 1, j)] + 1)
            if j > 0:
                order.append(2 * right[(i, j - 1)] + 1)
            else:
                order.append(2 * wrap[(r - 1 - i) if twisted else i] + 1)
            if i < r - 1:
                order.append(2 * down[(i, j)])
            rot[v(i, j)] = order
    # rim darts: reversal of a top-row right edge borders the top hole
    marks = (2 * right[(0, 0)] + 1, 2 * right[(r - 1, 0)])
    g = build_embedding(r * c, edges, rot, sig, boundary_darts=marks)
    assert len(g.boundary_faces) == (1 if twisted else 2)
    assert g.orientable != twisted
    return g


def annulus_grid(r, c):
    return strip_grid(r, c, twisted=False)


def mobius_grid(r, c):
    return strip_grid(r, c, twisted=True)


def projective_grid(r, c):
    """Projective plane: Moebius band with the hole capped by a disk."""
    m = mobius_grid(r, c)
    d = from_graph(m)
    g = d.build()  # no boundary marks: the hole becomes a face
    assert not g.orientable and g.euler() == 1
    return g


def delaunay_planar(n, seed=0):
    """Random Delaunay triangulation of n points in a square (genus 0)."""
    import numpy as np
    from scipy.spatial import Delaunay

    rng = np.random.default_rng(seed)
    pts = rng.random((n, 2))
    tri = Delaunay(pts)
    pairs = set()
    for simplex in tri.simplices:
        a, b, c = (int(x) for x in simplex)
        for u, v in ((a, b), (b, c), (c, a)):
            pairs.add((min(u, v), max(u, v)))
    edges = [(u, v, 1, 1) for (u, v) in sorted(pairs)]
    # rotations by angle around each point
    import math
    incid = [[] for _ in range(n)]
    for i, (u, v, _, _) in enumerate(edges):
        incid[u].append(2 * i)
        incid[v].append(2 * i + 1)
    rot = []
    for v in range(n):
        def ang(d):
            w = edges[d >> 1][1] if d % 2 == 0 else edges[d >> 1][0]
            return math.atan2(pts[w][1] - pts[v][1], pts[w][0] - pts[v][0])
        rot.append(sorted(incid[v], key=ang))
    g = build_embedding(n, edges, rot)
    assert g.orientable and g.genus() == 0, "Delaunay embedding defect"
    return g


def glue(a, b, face_a, face_b):
    """Connected sum: open faces face_a of ``a`` and face_b of ``b`` and join
    them with a tube of unit-weight edges (both must be orientable)."""
    assert a.orientable and b.orientable
    ca, cb = a.faces[face_a], b.faces[face_b]
    k = len(ca)
    assert len(cb) == k >= 3
    d = from_graph(a)
    off_v = a.n
    off_d = 2 * a.m
    for _ in range(b.n):
        d.add_vertex()
    for i in range(b.m):
        u, v, wf, wr = raw_edges(b)[i]
        d.add_edge(u + off_v, v + off_v, wf, wr, b.sig[i])
    for v in range(b.n):
        d.rot[off_v + v] = [x + off_d for x in b.rot[v]]
    # corner of a face at position i sits after rev(cycle[i-1]) at tail(cycle[i])
    for i in range(k):
        va = a.tail[ca[i]]
        vb = b.tail[cb[(k - i) % k]] + off_v
        e = d.add_edge(va, vb, 1, 1)
        d.place(2 * e, va, after=rev(ca[i - 1]))
        d.place(2 * e + 1, vb, after=rev(cb[(k - i - 1) % k]) + off_d)
    g = d.build()
    assert g.orientable
    assert g.genus() == a.genus() + b.genus()
    return g


def genus_grid(genus, r, c):
    """Orientable genus-``genus`` surface glued from torus grids."""
    assert genus >= 1
    g = torus_grid(r, c)
    for _ in range(genus - 1):
        t = torus_grid(r, c)
        # pick interior quad faces
        fa = next(f for f in range(g.nfaces) if len(g.faces[f]) == 4)
        fb = next(f for f in range(t.nfaces) if len(t.faces[f]) == 4)
        g = glue(g, t, fa, fb)
    assert g.genus() == genus
    return g


def reweight(g, weights):
    """Copy of ``g`` with per-dart raw weights replaced."""
    d = from_graph(g)
    it = iter(weights)
    d.edges = [(u, v, next(it), next(it)) for (u, v, _, _) in d.edges]
    out = d.build()
    out.boundary_faces = g.boundary_faces
    return out


def random_weights(g, seed=0, lo=1, hi=100, symmetric=False):
    rng = random.Random(seed)
    ws = []
    for _ in range(g.m):
        wf = rng.randint(lo, hi)
        wr = wf if symmetric else rng.randint(lo, hi)
        ws.extend((wf, wr))
    return reweight(g, ws)


def subdivide_all(g):
    """Subdivide every edge once (halving weights); preserves the surface."""
    d = Draft(g.n + g.m)
    half = [Fraction(w) / 2 for w in g.raw_w]
    for i in range(g.m):
        mid = g.n + i
        d.add_edge(g.tail[2 * i], mid, half[2 * i], half[2 * i + 1], g.sig[i])
        d.add_edge(mid, g.head[2 * i], half[2 * i], half[2 * i + 1], 0)
        d.rot[mid] = [2 * (2 * i + 1), 2 * (2 * i) + 1]
    for v in range(g.n):
        for old in g.rot[v]:
            e = old >> 1
            if old % 2 == 0:
                d.rot[v].append(2 * (2 * e))       # first half, forward
            else:
                d.rot[v].append(2 * (2 * e + 1) + 1)  # second half, back
    marks = []
    for f in g.boundary_faces:
        old = g.faces[f][0]
        e = old >> 1
        marks.append(2 * (2 * e) if old % 2 == 0 else 2 * (2 * e + 1) + 1)
    out = d.build(boundary_darts=marks)
    assert out.orientable == g.orientable and out.euler() == g.euler()
    return out
