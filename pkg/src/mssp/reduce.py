"""Degree reduction and triangulation preprocessing.

The genus sweep wants every dual vertex to have degree at most three,
i.e. every face to be a triangle, and wants shortest-path trees with
degree at most three.  Both are arranged without touching distances:

* every vertex of degree > 3 is replaced by a chain of degree-3 copies
  joined by zero-weight edges (an inverse edge contraction, so the
  surface is unchanged; the zero weights pick up only infinitesimal
  perturbation, so reported distances are exact);
* every face with more than three sides is fanned into triangles with
  edges so heavy that no shortest path ever uses them.

A :class:`Reduction` keeps the correspondence needed to translate
queries and face walks back and forth.
"""

from __future__ import annotations

from fractions import Fraction

from .surface import rev, edge_of, raw_edges, build_embedding
from .gen import Draft, from_graph


class Reduction:
    """Reduced copy of a graph plus the original<->reduced correspondence.

    ``rg``       -- the reduced graph (triangulated, light degree <= 3).
    ``carrier``  -- original dart -> reduced vertex now carrying its tail.
    ``vmap``     -- original vertex -> one reduced copy of it.
    ``heavy``    -- set of reduced edge ids that must never be walked.
    Original edges keep their ids (and dart ids) in the reduced graph.
    """

    def __init__(self, g):
        self.g = g
        self._expand(g)
        self._triangulate()

    def _expand(self, g):
        d = Draft(0)
        carrier = {}
        gadget = {}          # original vertex -> {copy: [(dart, copy2)]}
        for v in range(g.n):
            rot = g.rot[v]
            k = len(rot)
            if k <= 3:
                c = d.add_vertex()
                d.rot[c] = list(rot)
                for x in rot:
                    carrier[x] = c
                continue
            # chain c0-c1-...-c_{k-3}; contracting it recovers the rotation
            copies = [d.add_vertex() for _ in range(k - 2)]
            adj = {c: [] for c in copies}
            gadget[v] = (copies, adj)
            for i, x in enumerate(rot):
                if i <= 1:
                    carrier[x] = copies[0]
                elif i >= k - 2:
                    carrier[x] = copies[-1]
                else:
                    carrier[x] = copies[i - 1]
        # original edges, same ids
        for i, (u, v, wf, wr) in enumerate(raw_edges(g)):
            d.edges.append((carrier[2 * i], carrier[2 * i + 1], wf, wr))
            d.sig.append(g.sig[i])
        # gadget edges and rotations
        self.gadget_adj = {}
        for v in range(g.n):
            rot = g.rot[v]
            k = len(rot)
            if k <= 3:
                continue
            copies, adj = gadget[v]
            chain_darts = []
            for i in range(k - 3):
                e = d.add_edge(copies[i], copies[i + 1], 0, 0)
                chain_darts.append(2 * e)
                adj[copies[i]].append((2 * e, copies[i + 1]))
                adj[copies[i + 1]].append((2 * e + 1, copies[i]))
            d.rot[copies[0]] = [rot[0], rot[1], chain_darts[0]]
            for i in range(1, k - 3):
                d.rot[copies[i]] = [rev(chain_darts[i - 1]), rot[i + 1],
                                    chain_darts[i]]
            d.rot[copies[-1]] = [rev(chain_darts[-1]), rot[k - 2], rot[k - 1]]
            self.gadget_adj[v] = adj
        self.carrier = carrier
        self.vmap = [carrier[g.rot[v][0]] for v in range(g.n)]
        self._mid = d.build()
        assert self._mid.genus() == g.genus() and self._mid.orientable

    def _triangulate(self):
        mid = self._mid
        total = sum(abs(Fraction(w)) for w in mid.raw_w)
        heavy_base = 8 * (total if total else 1)
        d = from_graph(mid)
        self.heavy = set()
        bump = 0
        for f in range(mid.nfaces):
            cyc = mid.faces[f]
            L = len(cyc)
            if L <= 3:
                continue
            x = mid.tail[cyc[0]]
            prev_diag = None
            for i in range(L - 2, 1, -1):
                t = mid.tail[cyc[i]]
                bump += 1
                wgt = heavy_base + bump
                e = d.add_edge(x, t, wgt, wgt)
                self.heavy.add(e)
                # at the apex the diagonals sit after rev of the closing
                # dart, innermost first; at t after rev of the previous
                # face dart
                if i == L - 2:
                    d.place(2 * e, x, after=rev(cyc[L - 1]))
                else:
                    d.place(2 * e, x, after=2 * prev_diag)
                d.place(2 * e + 1, t, after=rev(cyc[i - 1]))
                prev_diag = e
        self.rg = d.build()
        assert self.rg.orientable and self.rg.genus() == self._mid.genus()
        assert all(len(c) <= 3 for c in self.rg.faces)

    def gadget_path(self, v, c_from, c_to):
        """Darts of the zero-weight path between two copies of vertex v."""
        if c_from == c_to:
            return []
        adj = self.gadget_adj[v]
        # tiny chain: BFS
        frontier = [(c_from, [])]
        seen = {c_from}
        while frontier:
            nxt = []
            for c, path in frontier:
                for dart, c2 in adj[c]:
                    if c2 in seen:
                        continue
                    if c2 == c_to:
                        return path + [dart]
                    seen.add(c2)
                    nxt.append((c2, path + [dart]))
            frontier = nxt
        raise AssertionError("disconnected gadget")

    def face_walk(self, f):
        """Closed dart walk in the reduced graph tracing original face f.

        Returns ``(walk, corner_pos)`` where ``corner_pos[i]`` is the walk
        index at which the source sits on the copy of the i-th corner.
        """
        g = self.g
        cyc = g.faces[f]
        walk = []
        corner_pos = []
        k = len(cyc)
        for i, dd in enumerate(cyc):
            corner_pos.append(len(walk))
            walk.append(dd)
            v = g.head[dd]
            c_here = self.carrier[rev(dd)]
            c_next = self.carrier[cyc[(i + 1) % k]]
            if c_here != c_next:
                walk.extend(self.gadget_path(v, c_here, c_next))
        rg = self.rg
        for a, b in zip(walk, walk[1:] + walk[:1]):
            assert rg.head[a] == rg.tail[b], "face walk is not closed"
        return walk, corner_pos


def reduce_graph(g):
    return Reduction(g)
