"""Dynamic forests.

Two structures back the shortest-path sweeps:

* :class:`RootedForest` -- rooted trees with node values, ``link``, ``cut``,
  ``add_subtree`` and point reads.  Realized as Euler-tour bracket sequences
  over a treap with lazy range adds, so subtree operations are contiguous
  range operations.

* :class:`DartForest` -- unrooted trees whose edges carry one value per
  direction, with ``add_path`` (antisymmetric), ``min_path`` (argmin dart),
  ``junction`` and value reads.  Realized as a splay-tree link-cut forest
  with edges as nodes.

``Naive*`` classes are independent O(n)-per-op reference models used by the
fuzz tests and by journaled snapshots.
"""

from __future__ import annotations

import random


# ---------------------------------------------------------------------------
# Euler-tour treap


class _TNode:
    __slots__ = ("prio", "left", "right", "parent", "size",
                 "lazy", "val", "vertex", "is_open")

    def __init__(self, prio, vertex, is_open, val):
        self.prio = prio
        self.left = self.right = self.parent = None
        self.size = 1
        self.lazy = None   # None == zero pending
        self.val = val
        self.vertex = vertex
        self.is_open = is_open


def _tsize(x):
    return x.size if x is not None else 0


class RootedForest:
    """Forest of rooted trees with subtree value updates.

    Values live on vertices.  ``link(child, parent)`` hangs the tree rooted
    at ``child`` under ``parent``; ``cut(v)`` detaches ``v``'s subtree as a
    new tree rooted at ``v``.  With ``journal=True`` every mutation is
    recorded so :meth:`snapshot` handles can be queried later.
    """

    def __init__(self, zero=0, journal=False, seed=0):
        self.zero = zero
        self.nodes = {}       # vertex -> (open, close)
        self._rng = random.Random(0xEA7 ^ seed)
        self.journal = [] if journal else None
        self._replay = None   # (NaiveRootedForest, position)

    # -- treap plumbing

    def _push(self, x):
        lz = x.lazy
        if lz is not None:
            x.val = x.val + lz
            for c in (x.left, x.right):
                if c is not None:
                    c.lazy = lz if c.lazy is None else c.lazy + lz
            x.lazy = None

    def _pull(self, x):
        x.size = 1 + _tsize(x.left) + _tsize(x.right)

    def _merge(self, a, b):
        if a is None:
            return b
        if b is None:
            return a
        if a.prio > b.prio:
            self._push(a)
            r = self._merge(a.right, b)
            a.right = r
            r.parent = a
            self._pull(a)
            a.parent = None
            return a
        self._push(b)
        l = self._merge(a, b.left)
        b.left = l
        l.parent = b
        self._pull(b)
        b.parent = None
        return b

    def _split(self, t, k):
        """First k nodes to the left part."""
        if t is None:
            return None, None
        self._push(t)
        if _tsize(t.left) >= k:
            l, r = self._split(t.left, k)
            t.left = r
            if r is not None:
                r.parent = t
            self._pull(t)
            t.parent = None
            if l is not None:
                l.parent = None
            return l, t
        l, r = self._split(t.right, k - _tsize(t.left) - 1)
        t.right = l
        if l is not None:
            l.parent = t
        self._pull(t)
        t.parent = None
        if r is not None:
            r.parent = None
        return t, r

    def _root(self, x):
        while x.parent is not None:
            x = x.parent
        return x

    def _pos(self, x):
        k = _tsize(x.left)
        while x.parent is not None:
            if x.parent.right is x:
                k += _tsize(x.parent.left) + 1
            x = x.parent
        return k

    # -- public operations

    def create(self, v, val=None):
        if v in self.nodes:
            raise ValueError("vertex %r exists" % (v,))
        val = self.zero if val is None else val
        o = _TNode(self._rng.random(), v, True, val)
        c = _TNode(self._rng.random(), v, False, val)
        self.nodes[v] = (o, c)
        self._merge(o, c)
        if self.journal is not None:
            self.journal.append(("create", v, val))

    def same_tree(self, u, v):
        return self._root(self.nodes[u][0]) is self._root(self.nodes[v][0])

    def tree_root(self, v):
        """Root vertex of the tree containing v."""
        x = self._root(self.nodes[v][0])
        while True:
            self._push(x)
            if x.left is None:
                return x.vertex
            x = x.left

    def link(self, child, parent):
        """Attach the tree rooted at ``child`` below ``parent``."""
        o_c = self.nodes[child][0]
        o_p, _ = self.nodes[parent]
        tc = self._root(o_c)
        tp = self._root(o_p)
        if tc is tp:
            raise ValueError("link would create a cycle")
        l, r = self._split(tp, self._pos(o_p) + 1)
        self._merge(self._merge(l, tc), r)
        if self.journal is not None:
            self.journal.append(("link", child, parent))

    def cut(self, v):
        """Detach v's subtree; v becomes a tree root."""
        o, c = self.nodes[v]
        t = self._root(o)
        i = self._pos(o)
        j = self._pos(c)
        l, mr = self._split(t, i)
        mid, r = self._split(mr, j - i + 1)
        self._merge(l, r)
        if self.journal is not None:
            self.journal.append(("cut", v))
        return mid

    def add_subtree(self, delta, v):
        o, c = self.nodes[v]
        t = self._root(o)
        i = self._pos(o)
        j = self._pos(c)
        l, mr = self._split(t, i)
        mid, r = self._split(mr, j - i + 1)
        mid.lazy = delta if mid.lazy is None else mid.lazy + delta
        self._merge(self._merge(l, mid), r)
        if self.journal is not None:
            self.journal.append(("add", v, delta))

    def get_value(self, v):
        x = self.nodes[v][0]
        acc = x.val
        while x is not None:
            if x.lazy is not None:
                acc = acc + x.lazy
            x = x.parent
        return acc

    def subtree_size(self, v):
        o, c = self.nodes[v]
        return (self._pos(c) - self._pos(o) + 1) // 2

    # -- journaled snapshots

    def snapshot(self):
        if self.journal is None:
            raise ValueError("forest built without journal=True")
        return len(self.journal)

    def query_version(self, handle, v):
        """(value, parent) of ``v`` as of the snapshot ``handle``."""
        if self.journal is None:
            raise ValueError("forest built without journal=True")
        model, pos = self._replay or (NaiveRootedForest(self.zero), 0)
        if pos > handle:
            model, pos = NaiveRootedForest(self.zero), 0
        for op in self.journal[pos:handle]:
            model.apply(op)
        self._replay = (model, handle)
        return model.get_value(v), model.parent.get(v)


class NaiveRootedForest:
    """Reference model for RootedForest."""

    def __init__(self, zero=0):
        self.zero = zero
        self.parent = {}
        self.children = {}
        self.val = {}

    def apply(self, op):
        kind = op[0]
        if kind == "create":
            self.create(op[1], op[2])
        elif kind == "link":
            self.link(op[1], op[2])
        elif kind == "cut":
            self.cut(op[1])
        elif kind == "add":
            self.add_subtree(op[2], op[1])

    def create(self, v, val=None):
        self.parent[v] = None
        self.children[v] = []
        self.val[v] = self.zero if val is None else val

    def link(self, child, parent):
        assert self.parent[child] is None
        self.parent[child] = parent
        self.children[parent].append(child)

    def cut(self, v):
        p = self.parent[v]
        if p is not None:
            self.children[p].remove(v)
            self.parent[v] = None

    def _subtree(self, v):
        out = [v]
        i = 0
        while i < len(out):
            out.extend(self.children[out[i]])
            i += 1
        return out

    def add_subtree(self, delta, v):
        for x in self._subtree(v):
            self.val[x] = self.val[x] + delta

    def get_value(self, v):
        return self.val[v]

    def tree_root(self, v):
        while self.parent[v] is not None:
            v = self.parent[v]
        return v

    def same_tree(self, u, v):
        return self.tree_root(u) == self.tree_root(v)

    def subtree_size(self, v):
        return len(self._subtree(v))


# ---------------------------------------------------------------------------
# Link-cut forest with darts on edges


class _LNode:
    __slots__ = ("left", "right", "parent", "flip",
                 "addf", "addb", "valf", "valb", "dartf", "dartb",
                 "minf", "minb", "is_edge", "ends", "label")

    def __init__(self, label=None):
        self.left = self.right = self.parent = None
        self.flip = False
        self.addf = self.addb = None
        self.valf = self.valb = None
        self.dartf = self.dartb = None
        self.minf = self.minb = None
        self.is_edge = False
        self.ends = None
        self.label = label

    def __repr__(self):
        return "<%s %r>" % ("edge" if self.is_edge else "node", self.label)


def _minc(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a if a <= b else b


class DartForest:
    """Unrooted forest whose edges carry one value per direction."""

    def __init__(self):
        self.enode_of_dart = {}

    def new_node(self, label=None):
        return _LNode(label)

    # -- splay plumbing

    def _apply_add(self, x, df, db):
        if df is not None:
            x.addf = df if x.addf is None else x.addf + df
            if x.is_edge:
                x.valf = x.valf + df
            if x.minf is not None:
                x.minf = (x.minf[0] + df, x.minf[1], x.minf[2])
        if db is not None:
            x.addb = db if x.addb is None else x.addb + db
            if x.is_edge:
                x.valb = x.valb + db
            if x.minb is not None:
                x.minb = (x.minb[0] + db, x.minb[1], x.minb[2])

    def _apply_flip(self, x):
        x.flip = not x.flip
        x.left, x.right = x.right, x.left
        x.addf, x.addb = x.addb, x.addf
        x.valf, x.valb = x.valb, x.valf
        x.dartf, x.dartb = x.dartb, x.dartf
        x.minf, x.minb = x.minb, x.minf

    def _push(self, x):
        if x.flip:
            for c in (x.left, x.right):
                if c is not None:
                    self._apply_flip(c)
            x.flip = False
        if x.addf is not None or x.addb is not None:
            for c in (x.left, x.right):
                if c is not None:
                    self._apply_add(c, x.addf, x.addb)
            x.addf = x.addb = None

    def _pull(self, x):
        mf = (x.valf, x.dartf, id(x)) if x.is_edge else None
        mb = (x.valb, x.dartb, id(x)) if x.is_edge else None
        for c in (x.left, x.right):
            if c is not None:
                mf = _minc(mf, c.minf)
                mb = _minc(mb, c.minb)
        x.minf, x.minb = mf, mb

    @staticmethod
    def _is_sroot(x):
        p = x.parent
        return p is None or (p.left is not x and p.right is not x)

    def _rotate(self, x):
        p = x.parent
        gp = p.parent
        sroot = self._is_sroot(p)
        if p.left is x:
            p.left = x.right
            if x.right is not None:
                x.right.parent = p
            x.right = p
        else:
            p.right = x.left
            if x.left is not None:
                x.left.parent = p
            x.left = p
        p.parent = x
        x.parent = gp
        if not sroot:
            if gp.left is p:
                gp.left = x
            elif gp.right is p:
                gp.right = x
        self._pull(p)
        self._pull(x)

    def _splay(self, x):
        chain = [x]
        n = x
        while not self._is_sroot(n):
            n = n.parent
            chain.append(n)
        for n in reversed(chain):
            self._push(n)
        while not self._is_sroot(x):
            p = x.parent
            if not self._is_sroot(p):
                gp = p.parent
                if (gp.left is p) == (p.left is x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    def _access(self, x):
        self._splay(x)
        self._push(x)
        if x.right is not None:
            x.right = None     # old child keeps its parent pointer (path)
            self._pull(x)
        last = x
        while x.parent is not None:
            y = x.parent
            last = y
            self._splay(y)
            y.right = x
            self._pull(y)
            self._splay(x)
        return last

    def make_root(self, u):
        self._access(u)
        self._apply_flip(u)

    def find_root(self, u):
        self._access(u)
        x = u
        while True:
            self._push(x)
            if x.left is None:
                break
            x = x.left
        self._splay(x)
        return x

    def same_tree(self, u, v):
        if u is v:
            return True
        return self.find_root(u) is self.find_root(v)

    # -- public operations

    def link(self, u, v, val_uv, val_vu, dart_uv, dart_vu):
        """Join the trees of u and v with an edge carrying dart values."""
        if self.same_tree(u, v):
            raise ValueError("link would create a cycle")
        e = _LNode((dart_uv, dart_vu))
        e.is_edge = True
        e.valf, e.valb = val_uv, val_vu
        e.dartf, e.dartb = dart_uv, dart_vu
        e.ends = (u, v)
        self._pull(e)
        self.make_root(u)
        self.make_root(v)
        # in-order runs root to leaf, so hang v below e below u to make
        # the stored forward direction mean u -> v
        v.parent = e
        e.parent = u
        self.enode_of_dart[dart_uv] = e
        self.enode_of_dart[dart_vu] = e
        return e

    def cut(self, enode):
        """Remove the edge; returns {dart: value} at removal time."""
        u, v = enode.ends
        self.make_root(u)
        self._access(v)
        self._splay(enode)
        self._push(enode)
        vals = {enode.dartf: enode.valf, enode.dartb: enode.valb}
        for c in (enode.left, enode.right):
            if c is not None:
                c.parent = None
        enode.left = enode.right = None
        self._pull(enode)
        del self.enode_of_dart[enode.dartf]
        del self.enode_of_dart[enode.dartb]
        return vals

    def get_dart_value(self, dart):
        e = self.enode_of_dart[dart]
        self._splay(e)
        self._push(e)
        return e.valf if e.dartf == dart else e.valb

    def add_path(self, delta, u, v):
        """Add delta to darts along u->v, -delta to the reversals."""
        if u is v:
            return
        self.make_root(u)
        self._access(v)
        self._apply_add(v, delta, -delta)

    def min_path(self, u, v):
        """(value, dart) minimal over darts in the u->v direction."""
        if u is v:
            return None
        self.make_root(u)
        self._access(v)
        if v.minf is None:
            return None
        return (v.minf[0], v.minf[1])

    def junction(self, t, u, v):
        """Meeting node of the paths joining t, u and v pairwise."""
        self.make_root(t)
        if u is v:
            return u
        self._access(u)
        z = self._access(v)
        if z.is_edge:
            raise AssertionError("junction landed on an edge node")
        return z

    def path_darts(self, u, v):
        """Darts along the tree path u -> v (debug helper, O(path))."""
        if u is v:
            return []
        self.make_root(u)
        self._access(v)
        out = []

        def walk(x):
            if x is None:
                return
            self._push(x)
            walk(x.left)
            if x.is_edge:
                out.append(x.dartf)
            walk(x.right)

        walk(v)
        return out


class NaiveDartForest:
    """Reference model for DartForest."""

    def __init__(self):
        self.adj = {}
        self.vals = {}
        self.edge_of_dart = {}
        self.labels = {}

    def new_node(self, label=None):
        h = object()
        self.adj[h] = {}
        self.labels[h] = label
        return h

    def link(self, u, v, val_uv, val_vu, dart_uv, dart_vu):
        assert not self.same_tree(u, v)
        self.adj[u][v] = (dart_uv, dart_vu)
        self.adj[v][u] = (dart_vu, dart_uv)
        self.vals[dart_uv] = val_uv
        self.vals[dart_vu] = val_vu
        self.edge_of_dart[dart_uv] = (u, v)
        self.edge_of_dart[dart_vu] = (u, v)
        return (u, v, dart_uv, dart_vu)

    def cut(self, edge):
        u, v, duv, dvu = edge
        out = {duv: self.vals.pop(duv), dvu: self.vals.pop(dvu)}
        del self.adj[u][v]
        del self.adj[v][u]
        del self.edge_of_dart[duv]
        del self.edge_of_dart[dvu]
        return out

    def _path(self, u, v):
        """List of (dart_forward, dart_back) along u..v."""
        prev = {u: None}
        stack = [u]
        while stack:
            x = stack.pop()
            if x is v:
                break
            for y, darts in self.adj[x].items():
                if y not in prev:
                    prev[y] = (x, darts)
                    stack.append(y)
        assert v in prev, "nodes in different trees"
        out = []
        x = v
        while prev[x] is not None:
            _, darts = prev[x]
            out.append(darts)
            x = prev[x][0]
        out.reverse()
        return out

    def same_tree(self, u, v):
        if u is v:
            return True
        try:
            self._path(u, v)
            return True
        except AssertionError:
            return False

    def get_dart_value(self, dart):
        return self.vals[dart]

    def add_path(self, delta, u, v):
        for df, db in self._path(u, v):
            self.vals[df] = self.vals[df] + delta
            self.vals[db] = self.vals[db] - delta

    def min_path(self, u, v):
        best = None
        for df, _ in self._path(u, v):
            cand = (self.vals[df], df)
            if best is None or cand < best:
                best = cand
        return best

    def junction(self, t, u, v):
        pu = [t] + [self.edge_of_dart[df] for df, _ in self._path(t, u)]
        # rebuild vertex paths
        def vpath(a, b):
            seq = [a]
            x = a
            for df, db in self._path(a, b):
                uu, vv = self.edge_of_dart[df]
                x = vv if uu is x else uu
                seq.append(x)
            return seq
        pu = vpath(t, u)
        pv = vpath(t, v)
        z = t
        for a, b in zip(pu, pv):
            if a is b:
                z = a
            else:
                break
        return z
