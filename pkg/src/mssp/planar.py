"""Multiple-source shortest paths on planar embedded graphs.

Given an embedded genus-0 graph and a face ``f``, computes implicit
shortest-path trees rooted at every vertex of ``f`` in overall
O((n + pivots) log n) time by sliding a virtual source around ``f``.

While the source ``s`` sits at parameter ``lam`` on the edge ``uv`` it is
never materialized: the shortest-path tree splits into a red tree rooted
at ``u`` (paths leaving ``s`` backwards) and a blue tree rooted at ``v``.
Increasing ``lam`` raises all red distances at rate ``w(v->u)`` and lowers
all blue ones at rate ``w(u->v)``, so the slack of a dart crossing from
blue to red drops at the combined rate ``what = w(u->v) + w(v->u)``.  The
duals of the non-tree edges form a spanning tree of the faces, and the
crossing darts are exactly the dual path between the two faces flanking
``uv``; a path-minimum query finds the next pivot.

Results are served from a versioned predecessor map: every pivot appends
one ``(stamp, dart)`` record, and distances are recovered by walking the
pred chain as of a corner's stamp.
"""

from __future__ import annotations

import heapq
from bisect import bisect_right

from .surface import rev, edge_of
from .weights import WeightTable, RATIONAL
from .forest import RootedForest, DartForest


S = "src"   # transient pred marker: vertex hangs directly off the source


def dijkstra_darts(g, src, wt):
    """Shortest-path tree from ``src`` under the weight table ``wt``.

    Returns ``(dist, pred)`` where ``pred[x]`` is the tree dart into ``x``.
    """
    dist = [None] * g.n
    pred = [None] * g.n
    h = [(wt.zero, src, None)]
    while h:
        dv, v, pd = heapq.heappop(h)
        if dist[v] is not None:
            continue
        dist[v] = dv
        pred[v] = pd
        for d in g.rot[v]:
            u = g.head[d]
            if dist[u] is None:
                heapq.heappush(h, (dv + wt.vals[d], u, d))
    if any(x is None for x in dist):
        raise ValueError("graph is not connected")
    return dist, pred


class VersionedPreds:
    """Append-only per-vertex history of (stamp, pred dart or None)."""

    def __init__(self, n):
        self.log = [[] for _ in range(n)]
        self.stamps = [[] for _ in range(n)]
        self.entries = 0

    def set(self, v, stamp, pd):
        self.log[v].append(pd)
        self.stamps[v].append(stamp)
        self.entries += 1

    def at(self, v, stamp):
        i = bisect_right(self.stamps[v], stamp) - 1
        if i < 0:
            raise KeyError("vertex %d has no pred at stamp %d" % (v, stamp))
        return self.log[v][i]


class PlanarMSSP:
    """Shortest-path trees from every corner of one face of a planar map."""

    def __init__(self, g, face, mode=RATIONAL, seed=0, debug=False):
        if not g.orientable or g.genus() != 0:
            raise ValueError("planar sweep needs a genus-0 orientable map")
        self.g = g
        self.face = face
        self.debug = debug
        self.wt = WeightTable(g.raw_w, mode, seed=seed)
        self.cycle = list(g.faces[face])
        self.corners = [g.tail[d] for d in self.cycle]
        self.pivots = 0
        self._stamp = 0
        self.preds = VersionedPreds(g.n)
        self.corner_stamps = []
        self._dcache = {}
        self._run()

    # -- internals

    def _tick(self):
        self._stamp += 1
        return self._stamp

    def _dual_link(self, d, val_f, val_b):
        """Insert the dual of the primal edge owning dart ``d``.

        ``val_f`` is the slack of dart ``d``, ``val_b`` of its reversal.
        The dual dart keeps the primal id and runs right(d) -> left(d).
        """
        g = self.g
        self.dual.link(self.fnodes[g.right_face(d)],
                       self.fnodes[g.left_face(d)],
                       val_f, val_b, d, rev(d))

    def _run(self):
        g, wt = self.g, self.wt
        root0 = self.corners[0]
        dist, pred0 = dijkstra_darts(g, root0, wt)

        self.primal = RootedForest(zero=wt.zero)
        for v in range(g.n):
            self.primal.create(v, dist[v])
        order = sorted(range(g.n), key=lambda v: dist[v])
        self.cur_pred = [None] * g.n
        for v in order:
            pd = pred0[v]
            self.cur_pred[v] = pd
            self.preds.set(v, 0, pd)
            if pd is not None:
                self.primal.link(v, g.tail[pd])

        self.dual = DartForest()
        self.fnodes = [self.dual.new_node(f) for f in range(g.nfaces)]
        tree_edges = {edge_of(pd) for pd in pred0 if pd is not None}
        for e in range(g.m):
            if e in tree_edges:
                continue
            d = 2 * e
            slack_f = dist[g.tail[d]] + wt.vals[d] - dist[g.head[d]]
            slack_b = dist[g.tail[d ^ 1]] + wt.vals[d ^ 1] - dist[g.head[d ^ 1]]
            self._dual_link(d, slack_f, slack_b)

        self.corner_stamps.append(self._stamp)
        for duv in self.cycle:
            self._slide(duv)
            self.corner_stamps.append(self._stamp)
        if self.debug:
            self._check_tree(self.corners[0])

    def _slide(self, duv):
        g, wt, primal, dual = self.g, self.wt, self.primal, self.dual
        u, v = g.tail[duv], g.head[duv]
        w_uv, w_vu = wt.vals[duv], wt.vals[rev(duv)]
        what = w_uv + w_vu
        anode = self.fnodes[g.right_face(duv)]
        bnode = self.fnodes[g.left_face(duv)]
        cp = self.cur_pred

        assert cp[u] is None or cp[u] is S
        cp[u] = S
        if cp[v] == duv:
            primal.cut(v)
            cp[v] = S

        sigma = wt.zero
        while True:
            if cp[v] is not S:
                # blue tree is empty; the only possible event is the
                # source reaching down the rest of uv to claim v
                delta = w_uv - sigma * w_uv / what - primal.get_value(v)
                kind = "claim_v"
            elif cp[u] is not S:
                break              # red tree is gone: no events remain
            else:
                found = dual.min_path(anode, bnode)
                if found is None:
                    break
                delta, q = found
                if sigma + delta >= what:
                    break
                kind = "cross"

            # advance the parameter by delta (in combined-weight units)
            if cp[u] is S:
                primal.add_subtree(delta * w_vu / what, u)
            if cp[v] is S:
                primal.add_subtree(-(delta * w_uv / what), v)
            dual.add_path(-delta, anode, bnode)
            sigma = sigma + delta
            self.pivots += 1
            stamp = self._tick()

            if kind == "claim_v":
                old = cp[v]
                primal.cut(v)
                cp[v] = S
                dual.cut(dual.enode_of_dart[duv])
                if old is not None:
                    self._dual_link(old, wt.zero,
                                    wt.vals[old] + wt.vals[rev(old)])
            else:
                z = g.head[q]
                if z == u:
                    # the red root is captured: the whole red tree turns
                    # blue and the source edge itself goes non-tree
                    primal.link(u, g.tail[q])
                    cp[u] = q
                    self.preds.set(u, stamp, q)
                    dual.cut(dual.enode_of_dart[q])
                    self._dual_link(duv, sigma, what - sigma)
                else:
                    old = cp[z]
                    primal.cut(z)
                    primal.link(z, g.tail[q])
                    cp[z] = q
                    self.preds.set(z, stamp, q)
                    dual.cut(dual.enode_of_dart[q])
                    self._dual_link(old, wt.zero,
                                    wt.vals[old] + wt.vals[rev(old)])

        # land the source on v
        assert cp[v] is S, "head of the slide edge never turned blue"
        rem = what - sigma
        if cp[u] is S:
            primal.add_subtree(rem * w_vu / what, u)
            dual.add_path(-rem, anode, bnode)
        primal.add_subtree(-(rem * w_uv / what), v)
        stamp = self._tick()
        if cp[u] is S:
            primal.link(u, v)
            cp[u] = rev(duv)
            self.preds.set(u, stamp, rev(duv))
        self.preds.set(v, stamp, None)
        if self.debug:
            self._check_tree(v)

    def _check_tree(self, src):
        """Certificate: forest values equal a fresh shortest-path tree."""
        dist, _ = dijkstra_darts(self.g, src, self.wt)
        for x in range(self.g.n):
            got = self.primal.get_value(x)
            assert got == dist[x], (src, x, got, dist[x])

    # -- queries

    def source(self, i):
        return self.corners[i]

    def pred_at(self, i, x):
        """Tree dart into x in the shortest-path tree of corner i."""
        return self.preds.at(x, self.corner_stamps[i])

    def dist(self, i, x):
        """Distance from corner i to vertex x (reported weight)."""
        return self.wt.report(self._dist_w(i, x))

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
        """Darts of the shortest path from corner i to x."""
        stamp = self.corner_stamps[i]
        out = []
        while True:
            pd = self.preds.at(x, stamp)
            if pd is None:
                break
            out.append(pd)
            x = self.g.tail[pd]
        out.reverse()
        return out

    def persisted_words(self):
        """Rough word count of the query structure (two per record)."""
        return 2 * self.preds.entries
