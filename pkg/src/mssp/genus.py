"""Multiple-source shortest paths on higher-genus embedded graphs.

Same sliding-source scheme as the planar sweep, but on a surface the
duals of the non-tree edges form a cut graph with cycles instead of a
tree, so the next pivot cannot be found with one dual path query.
The cut graph lives in a :class:`Grove`; each of its anchor paths is
flanked by the same two shortest-path-forest components along its whole
length, so a path either consists of darts crossing blue-to-red that
all decay at unit rate ("green"), or of darts whose slack is constant.
A heap over the green paths, with a per-slide lazy offset standing in
for the uniform decay, yields the next event; after a pivot only the
paths bordering the moved subtree's region can change colour, and they
are found by walking that region's boundary in the grove.

The input graph is first reduced (vertex degrees to three or less,
faces triangulated) so every dual vertex has degree three; the source
then slides along the closed walk tracing the chosen face through the
reduced graph.  Distances are unchanged because the reduction's gadget
edges have zero weight and its triangulation diagonals are too heavy to
ride.
"""

from __future__ import annotations

import heapq

from .surface import rev, edge_of
from .weights import WeightTable, RATIONAL
from .forest import RootedForest, DartForest
from .grove import Grove
from .reduce import Reduction
from .planar import S, dijkstra_darts, VersionedPreds

GREEN = "green"
MONO = "mono"


class GenusMSSP:
    """Shortest-path trees from every corner of one face of an embedded map."""

    def __init__(self, g, face, mode=RATIONAL, seed=0, debug=False):
        if not g.orientable:
            raise ValueError("sweep needs an orientable map")
        self._flat = None
        if g.genus() == 0:
            # the cut graph of a sphere is a tree, so one dual path query
            # per event suffices: that is exactly the planar sweep
            from .planar import PlanarMSSP
            self._flat = flat = PlanarMSSP(g, face, mode=mode, seed=seed,
                                           debug=debug)
            self.g0 = self.g = g
            self.face = face
            self.wt = flat.wt
            self.corners = flat.corners
            self.pivots = flat.pivots
            self.queue_pushes = 0
            self.pivot_counts = {}
            self.slide_pivot_max = 0
            self.preds = flat.preds
            self.corner_stamps = flat.corner_stamps
            return
        self.g0 = g
        self.face = face
        self.debug = debug
        self.red = Reduction(g)
        self.g = rg = self.red.rg
        self.wt = WeightTable(rg.raw_w, mode, seed=seed)
        self.walk, corner_pos = self.red.face_walk(face)
        self.corners = [g.tail[d] for d in g.faces[face]]
        self._corner_pos = corner_pos
        self.pivots = 0
        self.queue_pushes = 0
        self.pivot_counts = {}
        self.slide_pivot_max = 0
        self._stamp = 0
        self.preds = VersionedPreds(rg.n)
        self.corner_stamps = []
        self._dcache = {}
        self._run()

    # -- internals

    def _tick(self):
        self._stamp += 1
        return self._stamp

    def _retire(self, rec):
        """Flush a path's lazy decay and drop it from the event queue."""
        if rec.color is GREEN:
            pending = self.O - rec.flushed
            if pending != self.wt.zero:
                self.grove.add_dir(rec, -pending, rec.fwd)
            self.greens.discard(rec)
        rec.color = None
        rec.entry = None

    def _classify(self, rec):
        """Colour a path whose forest values are current and queue it if green."""
        rec.entry = None
        rec.flushed = self.O
        if rec.trivial or self._blue_empty:
            rec.color = MONO
            return
        g, primal = self.g, self.primal
        got = self.grove.min_dir(rec, True)
        val, q = got
        ct = primal.tree_root(g.tail[q])
        ch = primal.tree_root(g.head[q])
        if ct == ch:
            rec.color = MONO
            return
        if ct == self._vroot and ch == self._uroot:
            fwd = True
        else:
            assert ct == self._uroot and ch == self._vroot, (ct, ch)
            fwd = False
            val, q = self.grove.min_dir(rec, False)
        rec.color = GREEN
        rec.fwd = fwd
        rec.mindart = q
        self._seq += 1
        entry = (val + self.O, self._seq, rec)
        rec.entry = entry
        heapq.heappush(self.heap, entry)
        self.queue_pushes += 1
        self.greens.add(rec)

    def _classify_all(self):
        for rec in list(self.grove.recs):
            self._retire(rec)
            self._classify(rec)

    def _reclassify(self, touched):
        seen = set()
        for rec in touched:
            if id(rec) in seen or rec not in self.grove.recs:
                continue
            seen.add(id(rec))
            self._retire(rec)
            self._classify(rec)

    def _flush_greens(self):
        for rec in list(self.greens):
            self._retire(rec)

    def _run(self):
        g, wt = self.g, self.wt
        root0 = g.tail[self.walk[0]]
        dist, pred0 = dijkstra_darts(g, root0, wt)

        self.primal = RootedForest(zero=wt.zero)
        for x in range(g.n):
            self.primal.create(x, dist[x])
        order = sorted(range(g.n), key=lambda x: dist[x])
        self.cur_pred = [None] * g.n
        for x in order:
            pd = pred0[x]
            self.cur_pred[x] = pd
            self.preds.set(x, 0, pd)
            if pd is not None:
                self.primal.link(x, g.tail[pd])

        self.grove = Grove(g, DartForest())
        self.heap = []
        self.greens = set()
        self._seq = 0
        self.O = wt.zero
        self._blue_empty = True
        tree_edges = {edge_of(pd) for pd in pred0 if pd is not None}
        for e in range(g.m):
            if e in tree_edges:
                continue
            d = 2 * e
            slack_f = dist[g.tail[d]] + wt.vals[d] - dist[g.head[d]]
            slack_b = dist[g.tail[d ^ 1]] + wt.vals[d ^ 1] - dist[g.head[d ^ 1]]
            self.grove.link(d, slack_f, slack_b, self._retire)

        walk_stamps = [self._stamp]
        for duv in self.walk:
            self._slide(duv)
            walk_stamps.append(self._stamp)
        self.corner_stamps = [walk_stamps[k] for k in self._corner_pos]
        if self.debug:
            self._check_tree(root0)

    def _slide(self, duv):
        g, wt, primal, grove = self.g, self.wt, self.primal, self.grove
        u, v = g.tail[duv], g.head[duv]
        assert u != v, "cannot slide along a self-loop"
        w_uv, w_vu = wt.vals[duv], wt.vals[rev(duv)]
        what = w_uv + w_vu
        cp = self.cur_pred
        self.O = wt.zero
        self._uroot, self._vroot = u, v
        slide_darts = set()

        assert cp[u] is None or cp[u] is S
        cp[u] = S
        if cp[v] == duv:
            primal.cut(v)
            cp[v] = S
            self._blue_empty = False
            grove.link(duv, wt.zero, what, self._retire)
            self._classify_all()
        else:
            self._blue_empty = True

        sigma = wt.zero
        while True:
            if self._blue_empty:
                # only the source reaching down the rest of uv can happen
                ratio = sigma / what
                delta = w_uv - ratio * w_uv - primal.get_value(v)
                kind = "claim"
            elif cp[u] is not S:
                break               # red tree is gone: no events remain
            else:
                top = self._pop_event()
                if top is None:
                    break
                delta, rec = top
                if sigma + delta >= what:
                    break
                kind = "pivot"
            assert delta >= wt.zero, (kind, delta)

            ratio = delta / what
            if cp[u] is S:
                primal.add_subtree(ratio * w_vu, u)
            if not self._blue_empty:
                primal.add_subtree(-(ratio * w_uv), v)
            self.O = self.O + delta
            sigma = sigma + delta
            self.pivots += 1
            stamp = self._tick()

            if kind == "claim":
                old = cp[v]
                primal.cut(v)
                cp[v] = S
                self._blue_empty = False
                if old is not None:
                    grove.link(old, wt.zero,
                               wt.vals[old] + wt.vals[rev(old)], self._retire)
                # a blue region is born: every path may change colour
                self._classify_all()
            else:
                q = rec.mindart
                assert q not in slide_darts, "dart pivoted twice in one slide"
                slide_darts.add(q)
                self.pivot_counts[q] = self.pivot_counts.get(q, 0) + 1
                y, z = g.head[q], g.tail[q]
                if y == u:
                    # red root captured: the whole red tree turns blue and
                    # the remaining events disappear with it
                    primal.link(u, z)
                    cp[u] = q
                    self.preds.set(u, stamp, q)
                    grove.cut(q, self._retire)
                    self._flush_greens()
                else:
                    old = cp[y]
                    primal.cut(y)
                    touched = list(grove.link(
                        old, wt.zero,
                        wt.vals[old] + wt.vals[rev(old)], self._retire))
                    touched.extend(grove.region_containing(rev(old)))
                    primal.link(y, z)
                    cp[y] = q
                    self.preds.set(y, stamp, q)
                    touched.extend(grove.cut(q, self._retire))
                    self._reclassify(touched)
            if self.debug:
                self._certify(duv, sigma, what)

        # land the source on v
        assert not self._blue_empty, "head of the slide edge never turned blue"
        rem = what - sigma
        ratio = rem / what
        stamp = self._tick()
        # account the final advance before flushing the lazy decay
        self.O = self.O + rem
        self._flush_greens()
        if cp[u] is S:
            primal.add_subtree(ratio * w_vu, u)
            primal.add_subtree(-(ratio * w_uv), v)
            grove.cut(duv, self._retire)
            primal.link(u, v)
            cp[u] = rev(duv)
            self.preds.set(u, stamp, rev(duv))
        else:
            primal.add_subtree(-(ratio * w_uv), v)
        self.preds.set(v, stamp, None)
        self.O = self.wt.zero
        self.slide_pivot_max = max(self.slide_pivot_max, len(slide_darts))
        if self.debug:
            self._check_tree(v)

    def _pop_event(self):
        heap = self.heap
        while heap:
            entry = heap[0]
            rec = entry[2]
            if rec.entry is not entry:
                heapq.heappop(heap)
                continue
            return entry[0] - self.O, rec
        return None

    # -- debug certificates

    def _check_tree(self, src):
        """Forest values match a fresh shortest-path tree (main parts)."""
        dist, _ = dijkstra_darts(self.g, src, self.wt)
        for x in range(self.g.n):
            got = self.primal.get_value(x)
            if self.wt.mode == RATIONAL:
                assert got.main == dist[x].main, (src, x, got, dist[x])
            else:
                assert abs(got - dist[x]) <= 1e-9 * (1 + abs(dist[x]))

    def _true_slack(self, d):
        g = self.g
        return (self.primal.get_value(g.tail[d]) + self.wt.vals[d]
                - self.primal.get_value(g.head[d]))

    def _same(self, a, b):
        """Value equality up to the eps truncation of gadget-edge slides."""
        if self.wt.mode == RATIONAL:
            return a.main == b.main
        return abs(a - b) <= 1e-9 * (1 + abs(b))

    def _certify(self, duv, sigma, what):
        """No dart is tense, tree darts have slack zero, and the grove's
        stored values (after lazy decay) agree with the forest distances."""
        g, grove = self.g, self.grove
        zero = self.wt.zero
        grove.check()
        for x in range(g.n):
            pd = self.cur_pred[x]
            if pd is None or pd is S:
                continue
            assert self._same(self._true_slack(pd), zero), ("tree slack", x, pd)
        for q, node in grove.node_of_dart.items():
            true = self._true_slack(q)
            if self.wt.mode == RATIONAL:
                assert true.main >= 0, ("tense dart", q, true)
            else:
                assert true >= -1e-9, ("tense dart", q, true)
            rec = grove._rec_of(node)
            other = grove._other(q, node)
            stored = grove.forest.min_path(node, other)[0]
            grove.forest.make_root(rec.a)
            expect = true
            if rec.color is GREEN and grove.path_rec(q) is rec:
                pending = self.O - rec.flushed
                fwd_dart = grove.forest.junction(rec.a, node, other) is node \
                    if node is not rec.a else True
                if node is rec.b:
                    fwd_dart = False
                # stored values lag behind by the unflushed decay
                if fwd_dart == rec.fwd:
                    expect = true + pending
                else:
                    expect = true - pending
            assert self._same(stored, expect), ("stale value", q, stored, expect)
        for rec in grove.recs:
            if rec.color is GREEN:
                assert rec.entry is not None and rec.entry[2] is rec

    # -- queries

    def source(self, i):
        return self.corners[i]

    def pred_at(self, i, x):
        """Tree dart (in the reduced graph) into x for corner i's tree."""
        if self._flat is not None:
            return self._flat.pred_at(i, x)
        return self.preds.at(self.red.vmap[x], self.corner_stamps[i])

    def dist(self, i, x):
        """Distance from corner i to original vertex x."""
        if self._flat is not None:
            return self._flat.dist(i, x)
        return self.wt.report(self._dist_w(i, self.red.vmap[x]))

    def _dist_w(self, i, x):
        stamp = self.corner_stamps[i]
        cache = self._dcache.setdefault(i, {})
        chain = []
        while x not in cache:
            pd = self.preds.at(x, stamp)
            if pd is None:
                cache[x] = self.wt.zero
                break
            chain.append((x, pd))
            x = self.g.tail[pd]
        for x, pd in reversed(chain):
            cache[x] = cache[self.g.tail[pd]] + self.wt.vals[pd]
        return cache[chain[0][0]] if chain else cache[x]

    def path(self, i, x):
        """Darts of the shortest path from corner i to original vertex x."""
        stamp = self.corner_stamps[i]
        ndarts = 2 * self.red.g.m
        out = []
        x = self.red.vmap[x]
        while True:
            pd = self.preds.at(x, stamp)
            if pd is None:
                break
            if pd < ndarts:     # skip the zero-weight expansion darts
                out.append(pd)
            x = self.g.tail[pd]
        out.reverse()
        return out

    def persisted_words(self):
        return 2 * self.preds.entries


def sweep_face_g(g, face, mode=RATIONAL, seed=0, debug=False):
    """Sweep the corners of ``face`` on an orientable map of any genus."""
    return GenusMSSP(g, face, mode=mode, seed=seed, debug=debug)
