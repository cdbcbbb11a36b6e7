"""The dual cut graph maintained as a grove of anchored subtrees.

The duals of the non-tree edges form the cut graph X: a connected
subgraph of the dual whose removal cuts the surface into disks.  On a
positive-genus surface X is not a tree, so it cannot live in a single
link-cut tree.  Instead it is kept as edge-disjoint subtrees, each an
*anchor path* (a chain of X) plus *hair* (dangling trees attached to
it), with cycles of X broken by giving a face several *copies* when
more than one subtree meets it.  Path-minimum and path-addition then
work per subtree between its two anchors.

The maintained decomposition is allowed to be finer than the canonical
one (anchor paths may be split at faces where several subtrees meet);
what is preserved is that every anchor path is a chain of X flanked by
the same two disk regions along its whole length, which is what the
sweep's coloring relies on.  Dangling chains are demoted to hair
eagerly (`_absorb`) and mergeable joints are re-fused (`_try_merge`) to
keep the subtree count small.
"""

from __future__ import annotations

from .surface import rev


class Subtree:
    """One grove component: an anchor path from ``a`` to ``b`` plus hair.

    ``a_dart``/``b_dart`` cache the outgoing path dart at each anchor.
    ``color``/``fwd``/``entry``/``flushed``/``mindart`` belong to the
    sweep layer (coloring and the lazy event queue).
    """

    __slots__ = ("a", "b", "a_dart", "b_dart",
                 "color", "fwd", "entry", "flushed", "mindart")

    def __init__(self, a, b, a_dart=None, b_dart=None):
        self.a = a
        self.b = b
        self.a_dart = a_dart
        self.b_dart = b_dart
        self.color = None
        self.fwd = True
        self.entry = None
        self.flushed = None
        self.mindart = None

    @property
    def trivial(self):
        return self.a is self.b

    def __repr__(self):
        return "Subtree(%s..%s %s)" % (self.a.label, self.b.label, self.color)


def _noop(rec):
    pass


class Grove:
    """Cut-graph decomposition over a :class:`DartForest`.

    Dual darts keep primal ids: dart ``d`` runs from ``right_face(d)``
    to ``left_face(d)``.  ``retire`` callbacks let the sweep flush lazy
    path offsets before a subtree is restructured away.
    """

    def __init__(self, g, forest):
        self.g = g
        self.forest = forest
        self.copies = {}        # face -> list of nodes
        self.node_edges = {}    # id(node) -> set of outgoing dual darts
        self.node_of_dart = {}  # outgoing dual dart -> node
        self.recs = set()
        self._rec_by_root = {}
        self._fresh = []
        # rotation of the dual vertex at each face: outgoing dual darts
        self.drot_next = {}
        for cyc in g.faces:
            ring = [rev(d) for d in reversed(cyc)]
            for i, x in enumerate(ring):
                self.drot_next[x] = ring[(i + 1) % len(ring)]

    # -- bookkeeping ------------------------------------------------------

    def _new_node(self, face):
        n = self.forest.new_node(face)
        self.copies.setdefault(face, []).append(n)
        self.node_edges[id(n)] = set()
        return n

    def _drop_node(self, n):
        assert not self.node_edges[id(n)]
        del self.node_edges[id(n)]
        self.copies[n.label].remove(n)
        if not self.copies[n.label]:
            del self.copies[n.label]

    def _register(self, rec):
        self.forest.make_root(rec.a)
        self._rec_by_root[id(rec.a)] = rec
        self.recs.add(rec)
        self._fresh.append(rec)
        return rec

    def _destroy(self, rec):
        self.recs.discard(rec)
        root = self.forest.find_root(rec.a)
        del self._rec_by_root[id(root)]

    def _rec_of(self, node):
        root = self.forest.find_root(node)
        return self._rec_by_root[id(root)]

    def _other(self, q, node):
        u, v = self.forest.enode_of_dart[q].ends
        return v if u is node else u

    def _tail_dart(self, d, node):
        """The dart of edge ``d`` outgoing at ``node``'s face copy."""
        return d if self.g.right_face(d) == node.label else rev(d)

    # -- forest edge moves (values preserved exactly) ---------------------

    def _flink(self, node, other, q, val_q, val_r):
        self.forest.link(node, other, val_q, val_r, q, rev(q))
        self.node_edges[id(node)].add(q)
        self.node_edges[id(other)].add(rev(q))
        self.node_of_dart[q] = node
        self.node_of_dart[rev(q)] = other

    def _fcut(self, q):
        enode = self.forest.enode_of_dart[q]
        n1, n2 = enode.ends
        vals = self.forest.cut(enode)
        for x, n in ((q, self.node_of_dart[q]), (rev(q), self.node_of_dart[rev(q)])):
            self.node_edges[id(n)].discard(x)
            del self.node_of_dart[x]
        return vals, n1, n2

    def _cut_all(self, node):
        saved = []
        for q in list(self.node_edges[id(node)]):
            other = self._other(q, node)
            vals, _, _ = self._fcut(q)
            saved.append((q, vals, other))
        return saved

    # -- anchor-path geometry ---------------------------------------------

    def _on_path(self, rec, node):
        if node is rec.a or node is rec.b:
            return True
        if rec.trivial:
            return False
        return self.forest.junction(rec.a, node, rec.b) is node

    def _end_dart(self, rec, end):
        node = rec.b if end == "b" else rec.a
        cached = rec.b_dart if end == "b" else rec.a_dart
        if cached is not None and self.node_of_dart.get(cached) is node:
            return cached
        if rec.trivial:
            return None
        far = rec.a if end == "b" else rec.b
        found = None
        for q in self.node_edges[id(node)]:
            other = self._other(q, node)
            if other is far or self._on_path(rec, other):
                found = q
                break
        assert found is not None, "anchor has no path edge"
        if end == "b":
            rec.b_dart = found
        else:
            rec.a_dart = found
        return found

    def path_rec(self, x):
        """Subtree whose anchor path carries dual dart ``x`` (None if hair)."""
        node = self.node_of_dart.get(x)
        if node is None:
            return None
        rec = self._rec_of(node)
        if rec.trivial:
            return None
        if not self._on_path(rec, node):
            return None
        if not self._on_path(rec, self._other(x, node)):
            return None
        return rec

    # -- value queries used by the sweep -----------------------------------

    def min_dir(self, rec, fwd):
        """(value, dart) minimum along the anchor path in one direction."""
        if rec.trivial:
            return None
        if fwd:
            got = self.forest.min_path(rec.a, rec.b)
        else:
            got = self.forest.min_path(rec.b, rec.a)
            self.forest.make_root(rec.a)
        return got

    def add_dir(self, rec, delta, fwd):
        if rec.trivial:
            return
        if fwd:
            self.forest.add_path(delta, rec.a, rec.b)
        else:
            self.forest.add_path(delta, rec.b, rec.a)
            self.forest.make_root(rec.a)

    # -- normalization ------------------------------------------------------

    def _face_supported(self, face, exclude):
        """True if some anchor-path edge other than ``exclude`` meets ``face``."""
        for n in self.copies.get(face, ()):
            for q in self.node_edges[id(n)]:
                if q != exclude and self.path_rec(q) is not None:
                    return True
        return False

    def _absorb(self, rec, retire=_noop):
        """Demote dangling anchor-path stretches to hair.

        A path end dangles while no other anchor-path edge shares its
        face; stripping it mirrors pruning the cut graph to its core
        (repeatedly deleting faces of cut degree one).  A subtree that
        loses its whole path can expose loose ends of neighbours at the
        final face, so the pruning cascades."""
        retired = False
        while not rec.trivial:
            moved = False
            for end in ("b", "a"):
                node = rec.b if end == "b" else rec.a
                q = self._end_dart(rec, end)
                if self._face_supported(node.label, q):
                    continue
                if not retired:
                    retire(rec)
                    retired = True
                nxt = self._other(q, node)
                self._destroy(rec)
                if end == "b":
                    rec.b, rec.b_dart = nxt, None
                else:
                    rec.a, rec.a_dart = nxt, None
                self._register(rec)
                moved = True
                break
            if not moved:
                break
        if rec.trivial:
            self._reabsorb_face(rec.a.label, retire)
        return rec

    def _reabsorb_face(self, face, retire):
        for n in list(self.copies.get(face, ())):
            if id(n) not in self.node_edges:
                continue
            r = self._rec_of(n)
            if not r.trivial and (n is r.a or n is r.b):
                self._absorb(r, retire)

    def _try_merge(self, face, retire):
        nodes = self.copies.get(face)
        if not nodes or len(nodes) < 2:
            return
        ends = []
        hairs = []
        for n in nodes:
            rec = self._rec_of(n)
            if rec.trivial:
                if rec.a is n:
                    hairs.append((n, rec))
                continue
            if n is rec.a or n is rec.b:
                ends.append((n, rec))
            else:
                return          # a path runs through: leave the joint alone
        if len(ends) > 2:
            return
        if len(ends) == 2:
            (c1, r1), (c2, r2) = ends
            if r1 is r2:
                return          # both ends of one petal: fusing would close it
            retire(r1)
            retire(r2)
            self._destroy(r1)
            self._destroy(r2)
            for q, vals, other in self._cut_all(c2):
                self._flink(c1, other, q, vals[q], vals[rev(q)])
            self._drop_node(c2)
            fa = (r1.a, r1.a_dart) if c1 is r1.b else (r1.b, r1.b_dart)
            fb = (r2.a, r2.a_dart) if c2 is r2.b else (r2.b, r2.b_dart)
            merged = Subtree(fa[0], fb[0], fa[1], fb[1])
            self._register(merged)
            ends = [(c1, merged)]
        if len(ends) == 1 and hairs:
            c1, r1 = ends[0]
            retire(r1)
            for h, hr in hairs:
                retire(hr)
                self._destroy(hr)
                for q, vals, other in self._cut_all(h):
                    self._flink(c1, other, q, vals[q], vals[rev(q)])
                self._drop_node(h)
            self._destroy(r1)
            self._register(r1)

    # -- splitting helpers ---------------------------------------------------

    def _ensure_anchor(self, c, retire):
        """Restructure so ``c`` (or its stand-in) is an anchor; return it."""
        rec = self._rec_of(c)
        if c is rec.a or c is rec.b:
            return c
        ahat = rec.a if rec.trivial else self.forest.junction(rec.a, c, rec.b)
        retire(rec)
        self._destroy(rec)
        saved = self._cut_all(ahat)
        pieces = {}
        for q, vals, other in saved:
            pieces[q] = other
        f = self.forest

        def holds(other, target):
            return other is target or f.same_tree(other, target)

        edge_a = edge_b = edge_c = None
        hair_edges = []
        for q, vals, other in saved:
            if ahat is not rec.a and edge_a is None and holds(other, rec.a):
                edge_a = (q, vals, other)
            elif ahat is not rec.b and edge_b is None and holds(other, rec.b):
                edge_b = (q, vals, other)
            elif ahat is not c and edge_c is None and holds(other, c):
                edge_c = (q, vals, other)
            else:
                hair_edges.append((q, vals, other))

        out = []
        node_a = node_b = None
        if edge_a is not None:
            node_a = self._new_node(ahat.label)
            q, vals, other = edge_a
            self._flink(node_a, other, q, vals[q], vals[rev(q)])
            out.append(self._register(
                Subtree(rec.a, node_a, rec.a_dart, q)))
        if edge_b is not None:
            node_b = self._new_node(ahat.label)
            q, vals, other = edge_b
            self._flink(node_b, other, q, vals[q], vals[rev(q)])
            out.append(self._register(
                Subtree(node_b, rec.b, q, rec.b_dart)))
        hair_home = node_a or node_b or ahat
        for q, vals, other in hair_edges:
            self._flink(hair_home, other, q, vals[q], vals[rev(q)])
        if hair_edges and node_a is not None and hair_home is node_a:
            # relinking hair re-rooted the a-side piece; restore the
            # root its registration is keyed under
            self.forest.make_root(rec.a)

        if ahat is c:
            # c sat on the anchor path; hand back a fresh empty stand-in
            assert node_a is not None and node_b is not None
            site = self._new_node(ahat.label)
            self._register(Subtree(site, site))
            self._drop_node(ahat)
            return site
        q, vals, other = edge_c
        self._flink(ahat, other, q, vals[q], vals[rev(q)])
        self._register(Subtree(ahat, c, q, None))
        return c

    def _bud(self, face):
        site = self._new_node(face)
        self._register(Subtree(site, site))
        return site

    def _normalize_face(self, face, retire):
        """Split any anchor path running through a branch joint.

        A face met by three or more path darts is where chains of the
        cut graph meet; every subtree must end there, or the flanking
        regions would change along an anchor path."""
        while True:
            total = 0
            interior = None
            for n in self.copies.get(face, ()):
                cnt = 0
                for q in self.node_edges[id(n)]:
                    if self.path_rec(q) is not None:
                        cnt += 1
                total += cnt
                if interior is None and cnt == 2:
                    rec = self._rec_of(n)
                    if not rec.trivial and n is not rec.a and n is not rec.b:
                        interior = n
            if total <= 2 or interior is None:
                return
            site = self._ensure_anchor(interior, retire)
            srec = self._rec_of(site)
            assert srec.trivial and not self.node_edges[id(site)]
            self._destroy(srec)
            self._drop_node(site)

    # -- promotion: hair that joins the core when an edge is added ----------

    def _hair_scan(self, start):
        """Explore the hair tree holding face ``start`` (over hair edges).

        Returns ``(seen, prev, attach)``: visited faces, the dart used to
        enter each, and the first face found carrying an anchor-path edge
        (the tree's attachment to the core), or None."""
        seen = {start}
        prev = {}
        attach = None
        frontier = [start]
        while frontier and attach is None:
            nxt = []
            for fc in frontier:
                for n in self.copies.get(fc, ()):
                    for q in self.node_edges[id(n)]:
                        if self.path_rec(q) is not None:
                            continue
                        f2 = self.node_of_dart[rev(q)].label
                        if f2 in seen:
                            continue
                        seen.add(f2)
                        prev[f2] = q
                        if self._face_supported(f2, None):
                            attach = f2
                            break
                        nxt.append(f2)
                    if attach is not None:
                        break
                if attach is not None:
                    break
            frontier = nxt
        return seen, prev, attach

    def _route_to(self, prev, start, target):
        route = []
        fc = target
        while fc != start:
            q = prev[fc]
            route.append(q)
            fc = self.node_of_dart[q].label
        route.reverse()
        return route

    def _promotion_routes(self, fu, fv):
        """Hair stretches that join the core once an edge fu-fv lands.

        The hair edges form a forest hanging off the core; a new edge
        turns into core exactly the hair paths linking its two faces to
        their trees' core attachments, or to each other when both ends
        hang in one tree (the new cycle), plus that cycle's own tie to
        the core if it has one."""
        sup_u = self._face_supported(fu, None)
        sup_v = self._face_supported(fv, None)
        if sup_u and sup_v:
            return []
        if sup_u:
            fu, fv = fv, fu
            sup_u, sup_v = sup_v, sup_u
        # fu is unsupported: scan its hair tree fully (find fv and attach)
        seen = {fu}
        prev = {}
        attach = None
        frontier = [fu]
        while frontier:
            nxt = []
            for fc in frontier:
                for n in self.copies.get(fc, ()):
                    for q in self.node_edges[id(n)]:
                        if self.path_rec(q) is not None:
                            continue
                        f2 = self.node_of_dart[rev(q)].label
                        if f2 in seen:
                            continue
                        seen.add(f2)
                        prev[f2] = q
                        if self._face_supported(f2, None):
                            if attach is None:
                                attach = f2
                        else:
                            nxt.append(f2)
            frontier = nxt
        if fv in seen:
            # one tree: the new edge closes a cycle through it
            routes = [self._route_to(prev, fu, fv)]
            if attach is not None:
                routes.append(self._route_to(prev, fu, attach))
            return routes
        if attach is None:
            return []           # this side dangles: the new edge stays loose
        route_u = self._route_to(prev, fu, attach)
        if sup_v:
            return [route_u]
        _, prev_v, attach_v = self._hair_scan(fv)
        if attach_v is None:
            return []           # other side dangles: nothing becomes core
        return [route_u, self._route_to(prev_v, fv, attach_v)]

    def _promote_route(self, route, retire):
        """Turn a hair route (dart list) into anchor-path structure."""
        if not route:
            return
        f = self.forest
        roots = [f.find_root(self.node_of_dart[q]) for q in route]
        i = 0
        while i < len(route):
            j = i
            while j + 1 < len(route) and roots[j + 1] is roots[i]:
                j += 1
            entry = self.node_of_dart[route[i]]
            exitn = self.node_of_dart[rev(route[j])]
            self._ensure_anchor(entry, retire)
            self._ensure_anchor(exitn, retire)
            i = j + 1

    # -- public operations ----------------------------------------------------

    def link(self, d, val_d, val_r, retire=_noop):
        """Insert the dual edge of dart ``d`` with the given dart values.

        Returns the subtrees created by the restructuring (the one whose
        anchor path carries the new edge among them)."""
        g = self.g
        fu, fv = g.right_face(d), g.left_face(d)
        assert fu != fv, "cannot hold the dual of a bridge"
        self._fresh = []
        # decide, while the hair/path split is still clean, which hair
        # stretches the new edge pulls into the core
        routes = self._promotion_routes(fu, fv)
        # anchor one side before picking the other: the first split may
        # restructure copies at the second face
        u_node = self._ensure_anchor(self._site(fu), retire)
        v_node = self._ensure_anchor(self._site(fv), retire)
        ru = self._rec_of(u_node)
        rv = self._rec_of(v_node)
        if ru is rv:
            u_node = self._bud(fu)
            ru = self._rec_of(u_node)
        retire(ru)
        retire(rv)
        self._destroy(ru)
        self._destroy(rv)
        self._flink(u_node, v_node, d, val_d, val_r)

        def far(rec, node, q_here):
            if rec.trivial:
                return node, q_here
            if rec.a is node:
                return rec.b, rec.b_dart
            return rec.a, rec.a_dart

        na, da = far(ru, u_node, d)
        nb, db = far(rv, v_node, rev(d))
        merged = self._register(Subtree(na, nb, da, db))
        dirty = {fu, fv}
        for route in routes:
            for q in route:
                dirty.add(g.right_face(q))
                dirty.add(g.left_face(q))
        for route in routes:
            self._promote_route(route, retire)
        if merged in self.recs:
            self._absorb(merged, retire)
        # anchor splitting may have promoted hair stretches to paths;
        # now that the new edge is down, prune whatever still dangles
        for r in self._fresh_alive():
            if not r.trivial:
                self._absorb(r, retire)
        for r in self._fresh_alive():
            dirty.add(r.a.label)
            dirty.add(r.b.label)
        for face in dirty:
            self._normalize_face(face, retire)
        return self._fresh_alive()

    def _fresh_alive(self):
        out = []
        for r in self._fresh:
            if r in self.recs and r not in out:
                out.append(r)
        return out

    def _site(self, face):
        nodes = self.copies.get(face)
        if not nodes:
            return self._bud(face)
        degree = sum(len(self.node_edges[id(n)]) for n in nodes)
        assert degree <= 2, "face already carries three cut edges"
        for n in nodes:
            if self.node_edges[id(n)]:
                return n
        return nodes[0]

    def cut(self, d, retire=_noop):
        """Remove the dual edge of dart ``d``; returns the new subtrees."""
        self._fresh = []
        node = self.node_of_dart[d]
        rec = self._rec_of(node)
        retire(rec)
        self._destroy(rec)
        na = node
        nb = self._other(d, node)
        vals, _, _ = self._fcut(d)
        f = self.forest
        if f.same_tree(rec.a, rec.b):
            self._register(Subtree(rec.a, rec.b, rec.a_dart, rec.b_dart))
            loose = na if not f.same_tree(na, rec.a) else nb
            self._register(Subtree(loose, loose))
        else:
            if f.same_tree(na, rec.a):
                pa, pb = na, nb
            else:
                pa, pb = nb, na
            ra = Subtree(rec.a, pa, rec.a_dart, None) if pa is not rec.a \
                else Subtree(rec.a, rec.a)
            rb = Subtree(pb, rec.b, None, rec.b_dart) if pb is not rec.b \
                else Subtree(rec.b, rec.b)
            self._register(ra)
            self._register(rb)
            self._absorb(ra, retire)
            self._absorb(rb, retire)
            self._reabsorb_face(na.label, retire)
            self._reabsorb_face(nb.label, retire)
        for n in (na, nb):
            if not self.node_edges[id(n)]:
                r = self._rec_of(n)
                if r.trivial:
                    retire(r)
                    self._destroy(r)
                    self._drop_node(n)
        faces = {na.label, nb.label}
        for r in self._fresh:
            if r in self.recs and not r.trivial:
                faces.add(r.a.label)
                faces.add(r.b.label)
        for fc in faces:
            self._try_merge(fc, retire)
        for r in self._fresh_alive():
            faces.add(r.a.label)
            faces.add(r.b.label)
        for fc in faces:
            self._normalize_face(fc, retire)
        return self._fresh_alive()

    # -- region boundary walk ---------------------------------------------

    def region(self, start):
        """Subtrees whose anchor paths bound the region left of dart ``start``.

        ``start`` must be an anchor-path dart; hair is skipped (the
        boundary dips into a hair tree and comes straight back out)."""
        assert self.path_rec(start) is not None
        out = []
        seen = set()
        q = start
        guard = 4 * len(self.node_of_dart) + 8
        while True:
            rec = self.path_rec(q)
            if id(rec) not in seen:
                seen.add(id(rec))
                out.append(rec)
            x = self.drot_next[rev(q)]
            while x != rev(q):
                if self.path_rec(x) is not None:
                    break
                x = self.drot_next[x]
            q = x
            if q == start:
                break
            guard -= 1
            assert guard > 0, "region walk did not close"
        return out

    def region_containing(self, x):
        """Like :meth:`region`, but ``x`` may be a hair dart: the walk
        follows the region boundary through the hair tree until it meets
        an anchor-path dart.  A region bounded by hair alone is empty."""
        if self.path_rec(x) is not None:
            return self.region(x)
        q = x
        guard = 4 * len(self.node_of_dart) + 8
        while True:
            y = self.drot_next[rev(q)]
            while y != rev(q) and y not in self.node_of_dart:
                y = self.drot_next[y]
            if self.path_rec(y) is not None:
                return self.region(y)
            q = y
            if q == x:
                return []
            guard -= 1
            assert guard > 0, "hair walk did not close"

    # -- integrity check (tests / debug) ------------------------------------

    def check(self):
        f = self.forest
        seen_darts = set()
        for face, nodes in self.copies.items():
            for n in nodes:
                assert n.label == face
                for q in self.node_edges[id(n)]:
                    assert self.node_of_dart[q] is n
                    assert q not in seen_darts
                    seen_darts.add(q)
        assert set(self.node_of_dart) == seen_darts
        for rec in self.recs:
            root = f.find_root(rec.a)
            assert self._rec_by_root[id(root)] is rec
            assert f.same_tree(rec.a, rec.b)
            if not rec.trivial:
                darts = f.path_darts(rec.a, rec.b)
                f.make_root(rec.a)
                assert darts, (rec,)
                for end in ("a", "b"):
                    self._end_dart(rec, end)
                assert rec.a_dart == darts[0] or rev(rec.a_dart) == darts[0]
                last = darts[-1]
                assert rec.b_dart == rev(last) or rec.b_dart == last
        roots = {id(f.find_root(r.a)) for r in self.recs}
        assert len(roots) == len(self.recs)
        # a face met by three or more path darts must be all ends
        for face, nodes in self.copies.items():
            total = 0
            interior = False
            for n in nodes:
                cnt = sum(1 for q in self.node_edges[id(n)]
                          if self.path_rec(q) is not None)
                total += cnt
                if cnt == 2:
                    rec = self._rec_of(n)
                    if n is not rec.a and n is not rec.b:
                        interior = True
            assert total <= 2 or not interior, ("path through a joint", face)
