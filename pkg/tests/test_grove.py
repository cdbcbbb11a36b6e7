"""Randomized checks of the grove against a from-scratch model.

The model keeps the current cut-edge set and recomputes, after every
operation, which edges belong to the core (repeatedly deleting faces
with a single incident cut edge) — the grove's anchor paths must
partition exactly the core, and path minima must match brute force.
"""

import random
from fractions import Fraction

import pytest

from mssp.forest import DartForest
from mssp.gen import genus_grid, delaunay_planar
from mssp.grove import Grove
from mssp.reduce import Reduction
from mssp.surface import rev


def strip_core(g, edges):
    """Cut edges remaining after pruning cut-degree-one faces."""
    alive = set(edges)
    deg = {}
    inc = {}
    for e in alive:
        d = 2 * e
        for f in (g.right_face(d), g.left_face(d)):
            deg[f] = deg.get(f, 0) + 1
            inc.setdefault(f, set()).add(e)
    work = [f for f, k in deg.items() if k == 1]
    while work:
        f = work.pop()
        if deg.get(f) != 1:
            continue
        e = next(iter(inc[f]))
        alive.discard(e)
        d = 2 * e
        for fc in (g.right_face(d), g.left_face(d)):
            deg[fc] -= 1
            inc[fc].discard(e)
            if deg[fc] == 1:
                work.append(fc)
        deg[f] = 0
    return alive


def face_degree(g, edges, f):
    k = 0
    for e in edges:
        d = 2 * e
        if g.right_face(d) == f:
            k += 1
        if g.left_face(d) == f:
            k += 1
    return k


class Model:
    def __init__(self, g):
        self.g = g
        self.edges = set()
        self.vals = {}

    def core_darts(self):
        core = strip_core(self.g, self.edges)
        out = set()
        for e in core:
            out.add(2 * e)
            out.add(2 * e + 1)
        return out


def compare(gr, model):
    gr.check()
    g = model.g
    want_darts = set()
    for e in model.edges:
        want_darts.add(2 * e)
        want_darts.add(2 * e + 1)
    assert set(gr.node_of_dart) == want_darts

    core = model.core_darts()
    got_path = {q for q in gr.node_of_dart if gr.path_rec(q) is not None}
    assert got_path == core

    # anchor paths partition the core, and path minima agree with brute force
    covered = set()
    for rec in gr.recs:
        if rec.trivial:
            continue
        darts = gr.forest.path_darts(rec.a, rec.b)
        gr.forest.make_root(rec.a)
        for q in darts:
            assert q not in covered and rev(q) not in covered
            covered.add(q)
            covered.add(rev(q))
        fwd_best = min((model.vals[q], q) for q in darts)
        assert gr.min_dir(rec, True) == fwd_best
        bwd = [rev(q) for q in darts]
        bwd_best = min((model.vals[q], q) for q in bwd)
        assert gr.min_dir(rec, False) == bwd_best
    assert covered == core


def fuzz(g, seed, steps):
    rnd = random.Random(seed)
    model = Model(g)
    gr = Grove(g, DartForest())
    loops = {e for e in range(g.m)
             if g.right_face(2 * e) == g.left_face(2 * e)}
    pool = [e for e in range(g.m) if e not in loops]
    counter = [0]

    def do_link(e):
        d = 2 * e
        a = Fraction(rnd.randrange(1, 100), rnd.randrange(1, 10))
        b = Fraction(rnd.randrange(1, 100), rnd.randrange(1, 10))
        gr.link(d, a, b)
        model.edges.add(e)
        model.vals[d] = a
        model.vals[rev(d)] = b

    for step in range(steps):
        op = rnd.random()
        linkable = [e for e in pool if e not in model.edges
                    and face_degree(g, model.edges, g.right_face(2 * e)) < 3
                    and face_degree(g, model.edges, g.left_face(2 * e)) < 3]
        cuttable = sorted(model.edges)
        if (op < 0.55 or not cuttable) and linkable:
            do_link(rnd.choice(linkable))
        elif cuttable and op < 0.85 or not linkable:
            if not cuttable:
                continue
            e = rnd.choice(cuttable)
            gr.cut(2 * e)
            model.edges.discard(e)
            del model.vals[2 * e]
            del model.vals[2 * e + 1]
        else:
            recs = [r for r in gr.recs if not r.trivial]
            if not recs:
                continue
            rec = rnd.choice(recs)
            delta = Fraction(rnd.randrange(-20, 20), rnd.randrange(1, 5))
            fwd = rnd.random() < 0.5
            gr.add_dir(rec, delta, fwd)
            darts = gr.forest.path_darts(rec.a, rec.b)
            gr.forest.make_root(rec.a)
            if not fwd:
                darts = [rev(q) for q in reversed(darts)]
            for q in darts:
                model.vals[q] = model.vals[q] + delta
                model.vals[rev(q)] = model.vals[rev(q)] - delta
        if step % 5 == 4 or steps < 50:
            compare(gr, model)
    compare(gr, model)


def reduced(g):
    return Reduction(g).rg


def test_fuzz_torus_small():
    g = reduced(genus_grid(1, 4, 4))
    for seed in range(8):
        fuzz(g, seed, 120)


def test_fuzz_torus_larger():
    g = reduced(genus_grid(1, 6, 7))
    for seed in range(4):
        fuzz(g, 100 + seed, 250)


def test_fuzz_genus2():
    g = reduced(genus_grid(2, 5, 5))
    for seed in range(4):
        fuzz(g, 200 + seed, 250)


def test_fuzz_genus3():
    g = reduced(genus_grid(3, 4, 5))
    for seed in range(3):
        fuzz(g, 300 + seed, 200)


def test_fuzz_planar_patch():
    g = reduced(delaunay_planar(40, seed=5))
    for seed in range(4):
        fuzz(g, 400 + seed, 200)


def test_region_walk_closes():
    g = reduced(genus_grid(2, 5, 5))
    rnd = random.Random(9)
    model = Model(g)
    gr = Grove(g, DartForest())
    added = []
    for e in range(g.m):
        d = 2 * e
        if g.right_face(d) == g.left_face(d):
            continue
        if face_degree(g, model.edges, g.right_face(d)) >= 3:
            continue
        if face_degree(g, model.edges, g.left_face(d)) >= 3:
            continue
        if rnd.random() < 0.5:
            gr.link(d, Fraction(1), Fraction(1))
            model.edges.add(e)
            model.vals[d] = Fraction(1)
            model.vals[rev(d)] = Fraction(1)
    core = model.core_darts()
    starts = [q for q in sorted(core) if gr.path_rec(q) is not None]
    for q in starts[:40]:
        recs = gr.region(q)
        # walk the boundary by hand at dart granularity
        seen = set()
        x = q
        while True:
            seen.add(id(gr.path_rec(x)))
            y = gr.drot_next[rev(x)]
            while y != rev(x):
                if gr.path_rec(y) is not None:
                    break
                y = gr.drot_next[y]
            x = y
            if x == q:
                break
        assert {id(r) for r in recs} == seen
