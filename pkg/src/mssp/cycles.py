"""Shortest non-separating and non-contractible cycles.

All routines treat the surface as undirected: dart weights are symmetrized
(both darts of an edge get the forward dart's weight) before any search.
Topology tests go through surgery: a simple cycle is separating when cutting
disconnects, and contractible when one side of the cut is a disk.

Multiplicity-2 loops (two shortest-path tree branches plus one edge) are
handled by spur reduction: the doubled tail cancels and leaves a vertex-simple
core cycle isotopic to the perturbed loop, which is what actually gets cut.
"""

import heapq
from fractions import Fraction

from .cover import CoverMSSP
from .genus import GenusMSSP
from .surface import edge_of, rev, tree_cotree
from .surgery import (crossing_count, cut_along, contract_boundary,
                      paste_disk, split_components)
from .gen import reweight


class CyclePath:
    """A weighted closed walk (or boundary-anchored arc) with topology flags.

    Flags are tri-state: True / False / None (unknown).
    """

    def __init__(self, darts, length, closed=True):
        self.darts = list(darts)
        self.length = length
        self.closed = closed
        self.simple = None
        self.separating = None
        self.contractible = None

    @property
    def multiplicity(self):
        seen = {}
        for d in self.darts:
            e = edge_of(d)
            seen[e] = seen.get(e, 0) + 1
        return max(seen.values())

    def __repr__(self):
        return "CyclePath(len=%s, darts=%d, mult=%d)" % (
            self.length, len(self.darts), self.multiplicity)


def symmetrize(g):
    """Copy of ``g`` where both darts of an edge weigh the forward dart."""
    ws = []
    for e in range(g.m):
        w = Fraction(g.raw_w[2 * e])
        ws.extend((w, w))
    return reweight(g, ws)


def walk_length(g, darts):
    return sum(Fraction(g.raw_w[d]) for d in darts)


def spur_reduce(walk):
    """Cyclically cancel adjacent (d, rev d) pairs of a closed walk."""
    out = list(walk)
    changed = True
    while changed and out:
        changed = False
        i = 0
        while i < len(out):
            j = (i + 1) % len(out)
            if i != j and out[j] == rev(out[i]):
                for k in sorted((i, j), reverse=True):
                    del out[k]
                changed = True
            else:
                i += 1
    return out


def arc_core(walk):
    """Strip the mirrored prefix/suffix of an open walk; returns
    ``(tail, core)`` with walk == tail + core + reversed(tail)."""
    tail = []
    core = list(walk)
    while len(core) > 2 and core[-1] == rev(core[0]):
        tail.append(core[0])
        core = core[1:-1]
    return tail, core


def _is_vertex_simple(g, walk, closed=True):
    verts = [g.tail[d] for d in walk]
    if not closed:
        verts.append(g.head[walk[-1]])
    return len(set(verts)) == len(verts)


def _census(cut):
    """Per component of a cut: (genus, #boundaries, #slits inside)."""
    parts = split_components(cut.g)
    slit_marks = set()
    for f in cut.slits:
        slit_marks.add(cut.g.tail[cut.g.faces[f][0]])
    out = []
    for sub, vmap, emap in parts:
        vset = set(vmap)
        nslit = sum(1 for v in slit_marks if v in vset)
        out.append((sub.genus(), len(sub.boundary_faces), nslit))
    return out


def is_separating(g, walk):
    """Whether cutting along the simple cycle ``walk`` disconnects ``g``."""
    cut = cut_along(g, walk)
    return len(split_components(cut.g)) == 2


def is_contractible(g, walk):
    """Whether the simple cycle ``walk`` bounds a disk."""
    cut = cut_along(g, walk)
    for genus, nb, nslit in _census(cut):
        if genus == 0 and nb == 1 and nslit == 1:
            return True
    return False


def _dijkstra(g, src):
    dist = {src: Fraction(0)}
    pred = {src: None}
    pq = [(Fraction(0), src)]
    while pq:
        dv, v = heapq.heappop(pq)
        if dv > dist[v]:
            continue
        for d in g.rot[v]:
            h = g.head[d]
            nd = dv + Fraction(g.raw_w[d])
            if h not in dist or nd < dist[h]:
                dist[h] = nd
                pred[h] = d
                heapq.heappush(pq, (nd, h))
    return dist, pred


def _tree_path(g, pred, x):
    out = []
    while pred[x] is not None:
        out.append(pred[x])
        x = g.tail[pred[x]]
    out.reverse()
    return out


def loop_candidates(g, x):
    """Shortest-path-tree loops at ``x``: tree path to u, edge uv, reversed
    tree path to v, in increasing length order."""
    dist, pred = _dijkstra(g, x)
    tree_edges = set(edge_of(d) for d in pred.values() if d is not None)
    cands = []
    for e in range(g.m):
        if e in tree_edges:
            continue
        d = 2 * e
        u, v = g.tail[d], g.head[d]
        if u not in dist or v not in dist:
            continue
        cands.append((dist[u] + Fraction(g.raw_w[d]) + dist[v], e))
    cands.sort()
    for length, e in cands:
        d = 2 * e
        u, v = g.tail[d], g.head[d]
        walk = _tree_path(g, pred, u) + [d] + \
            [rev(q) for q in reversed(_tree_path(g, pred, v))]
        yield length, walk


def shortest_noncontractible_loop_at(g, x):
    """Shortest non-contractible loop based at ``x`` (multiplicity <= 2)."""
    for length, walk in loop_candidates(g, x):
        core = spur_reduce(walk)
        if not core or not _is_vertex_simple(g, core):
            continue
        if not is_contractible(g, core):
            c = CyclePath(walk, length)
            c.contractible = False
            c.simple = len(core) == len(walk)
            return c
    return None


def _loop_with(g, x, predicate):
    for length, walk in loop_candidates(g, x):
        core = spur_reduce(walk)
        if not core or not _is_vertex_simple(g, core):
            continue
        if predicate(core):
            return length, walk, core
    return None


def shortest_cycle_crossing_once(g, alpha, arc=False):
    """Shortest cycle crossing the simple cycle/arc ``alpha`` exactly once.

    Cut along alpha, paste disks over the slits, and sweep the pasted face:
    the answer is the cheapest path between the two copies of an alpha
    vertex, closed back up through the slit.  ``None`` when alpha separates.
    """
    cut = cut_along(g, alpha, arc=arc)
    if len(split_components(cut.g)) > 1:
        return None
    g2 = cut.g
    for f in cut.slits:
        g2 = paste_disk(g2, f)
    face = cut.slits[0]
    if g2.orientable:
        ms = GenusMSSP(g2, face)
    else:
        ms = CoverMSSP(g2, face)
    corner_of = {}
    for i, v in enumerate(ms.corners):
        corner_of.setdefault(v, i)

    verts = [g.tail[d] for d in alpha]
    if arc:
        verts.append(g.head[alpha[-1]])
    cands = []
    seen = set()
    for v in verts:
        if v in seen:
            continue
        seen.add(v)
        c1, c2 = cut.copies[v]
        if c1 in corner_of:
            i, target = corner_of[c1], c2
        elif c2 in corner_of:
            i, target = corner_of[c2], c1
        else:
            continue
        cands.append((ms.dist(i, target), i, target))
    cands.sort()
    for dist, i, target in cands:
        path = ms.path(i, target)
        darts = [2 * cut.emap[edge_of(d)] + (d & 1) for d in path]
        if crossing_count(cut, darts) != 1:
            continue
        out = CyclePath(darts, dist)
        out.contractible = False
        if not arc:
            out.separating = False
        out.simple = _is_vertex_simple(g, darts)
        return out
    return None


class _FracWeights:
    zero = Fraction(0)

    def __init__(self, g):
        self.g = g

    def get(self, d):
        return Fraction(self.g.raw_w[d])


def shortest_nonseparating(g, root=0):
    """Shortest non-separating cycle via the tree-cotree candidate loops."""
    gs = symmetrize(g)
    if gs.genus() == 0 and gs.orientable:
        raise ValueError("none exists: the surface is a sphere")
    _, _, L, pred = tree_cotree(gs, root, use_weights=_FracWeights(gs))
    best = None
    for e in L:
        d = 2 * e
        u, v = gs.tail[d], gs.head[d]
        walk = _tree_path(gs, pred, u) + [d] + \
            [rev(q) for q in reversed(_tree_path(gs, pred, v))]
        core = spur_reduce(walk)
        if not core or not _is_vertex_simple(gs, core):
            continue
        cand = shortest_cycle_crossing_once(gs, core)
        if cand is not None and (best is None or cand.length < best.length):
            best = cand
    if best is not None:
        best.separating = is_separating(gs, spur_reduce(best.darts)) \
            if _is_vertex_simple(gs, spur_reduce(best.darts)) else None
        assert best.separating is not True
    return best


def shortest_noncontractible_arc(g, delta):
    """Shortest non-contractible arc with endpoints in the boundary
    ``delta``; edge-disjoint from it."""
    g2, apex, vmap, emap = contract_boundary(g, delta)
    loop = shortest_noncontractible_loop_at(g2, apex)
    if loop is None:
        return None
    darts = [2 * emap[edge_of(d)] + (d & 1) for d in loop.darts]
    out = CyclePath(darts, loop.length, closed=False)
    out.contractible = False
    return out


def shortest_arc_between_boundaries(g, d1, d2):
    """Shortest arc connecting boundaries ``d1`` and ``d2`` (multiplicity 1)."""
    if d1 == d2 or d1 not in g.boundary_faces or d2 not in g.boundary_faces:
        raise ValueError("need two distinct boundary faces")
    g2, apex1, vmap1, emap1 = contract_boundary(g, d1)
    # locate the image of d2 after the first contraction
    marker = 2 * emap1.index(edge_of(g.faces[d2][0])) + (g.faces[d2][0] & 1)
    f2 = next(f for f in g2.boundary_faces if marker in g2.faces[f])
    g3, apex2, vmap2, emap2 = contract_boundary(g2, f2)
    dist, pred = _dijkstra(g3, apex2)
    p1 = vmap2.index(apex1)
    if p1 not in dist:
        raise ValueError("boundaries lie in different components")
    path = _tree_path(g3, pred, p1)
    darts = [2 * emap1[emap2[edge_of(d)]] + (d & 1) for d in path]
    out = CyclePath(darts, dist[p1], closed=False)
    assert out.multiplicity == 1
    return out


def shortest_cycle_homotopic_to_boundary(g, delta):
    """Shortest cycle homotopic to the boundary ``delta`` within the
    shortest-path-tree candidate family (delta itself always qualifies)."""
    walk = list(g.faces[delta])
    best_len = walk_length(g, walk)
    best = CyclePath(walk, best_len)

    def homotopic(core):
        if set(edge_of(d) for d in core) == \
                set(edge_of(d) for d in g.faces[delta]):
            return True
        cut = cut_along(g, core)
        parts = split_components(cut.g)
        if len(parts) != 2:
            return False
        slit_marks = set(cut.g.tail[cut.g.faces[f][0]] for f in cut.slits)
        ed = sorted(edge_of(d) for d in g.faces[delta])
        img = None
        for f in cut.g.boundary_faces:
            if f in cut.slits:
                continue
            if sorted(cut.emap[edge_of(d)] for d in cut.g.faces[f]) == ed:
                img = f
                break
        if img is None:
            return False
        dmark = cut.g.tail[cut.g.faces[img][0]]
        for sub, vmap, emap in parts:
            vset = set(vmap)
            if dmark not in vset:
                continue
            nslit = sum(1 for v in slit_marks if v in vset)
            return sub.genus() == 0 and len(sub.boundary_faces) == 2 \
                and nslit == 1
        return False

    for x in set(g.tail[d] for d in g.faces[delta]):
        found = _loop_with(g, x, homotopic)
        if found is None:
            continue
        length, walk, core = found
        if length < best.length:
            best = CyclePath(walk, length)
    best.contractible = None
    return best


def _image_dart(cut, d):
    e2 = cut.emap.index(edge_of(d))
    return 2 * e2 + (d & 1)


def shortest_noncontractible(g):
    """Shortest non-contractible cycle, by boundary killing followed by the
    iterative cut-and-search over Cross candidates."""
    gs = symmetrize(g)
    minc = None

    def consider(cand):
        nonlocal minc
        if cand is not None and (minc is None or cand.length < minc.length):
            minc = cand

    def project(cand, emap):
        if cand is None:
            return None
        darts = [2 * emap[edge_of(d)] + (d & 1) for d in cand.darts]
        out = CyclePath(darts, cand.length, closed=cand.closed)
        out.simple = cand.simple
        out.contractible = cand.contractible
        return out

    # phase 1: shortest cycle homotopic to each boundary, then paste
    work = gs
    for delta in sorted(gs.boundary_faces):
        consider(shortest_cycle_homotopic_to_boundary(work, delta))
        work = paste_disk(work, delta)

    if work.genus() == 0 and work.orientable:
        if minc is None:
            raise ValueError("the surface is simply connected")
        return _certify(gs, minc)

    iterations = 0
    budget = 1 + 2 * work.genus() + 2
    queue = [(work, list(range(gs.m)))]
    while queue:
        sigma, emap = queue.pop()
        counts = {}
        for e in emap:
            counts[e] = counts.get(e, 0) + 1
        assert max(counts.values()) <= 4, "edge copied more than four times"
        genus, b = sigma.genus(), len(sigma.boundary_faces)
        if genus == 0 and b <= 1 and sigma.orientable:
            continue
        iterations += 1
        assert iterations <= budget, "phase-2 iteration budget exceeded"
        if b == 0:
            x = 0
            loop = shortest_noncontractible_loop_at(sigma, x)
            core = spur_reduce(loop.darts)
            consider(project(CyclePath(core, walk_length(sigma, core)),
                             emap))
            consider(project(shortest_cycle_crossing_once(sigma, core),
                             emap))
            cut = cut_along(sigma, core)
        elif b == 1:
            delta = next(iter(sigma.boundary_faces))
            consider(project(
                shortest_cycle_homotopic_to_boundary(sigma, delta), emap))
            arc = shortest_noncontractible_arc(sigma, delta)
            tail, core = arc_core(arc.darts)
            if sigma.tail[core[0]] != sigma.head[core[-1]]:
                # the lasso degenerates to an arc anchored on delta
                consider(project(
                    shortest_cycle_crossing_once(sigma, core, arc=True),
                    emap))
                cut = cut_along(sigma, core, arc=True)
            else:
                consider(project(CyclePath(core, walk_length(sigma, core)),
                                 emap))
                consider(project(shortest_cycle_crossing_once(sigma, core),
                                 emap))
                cut = cut_along(sigma, core)
                cut = _slit_tail(sigma, cut, tail)
        else:
            deltas = sorted(sigma.boundary_faces)
            best_arc = None
            for d2 in deltas[1:]:
                a = shortest_arc_between_boundaries(sigma, deltas[0], d2)
                if best_arc is None or a.length < best_arc.length:
                    best_arc = a
            consider(project(
                shortest_cycle_crossing_once(sigma, best_arc.darts, arc=True),
                emap))
            cut = cut_along(sigma, best_arc.darts, arc=True)
        for sub, vmap, emap2 in split_components(cut.g):
            queue.append((sub, [emap[cut.emap[e]] for e in emap2]))
    if minc is None:
        raise ValueError("the surface is simply connected")
    return _certify(gs, minc)


def _slit_tail(sigma, cut, tail):
    """Extend a cycle cut by slitting along the loop's doubled tail,
    realizing the cut along the original boundary-anchored lasso."""
    if not tail:
        return cut
    darts = [_image_dart(cut, d) for d in tail]
    cut2 = cut_along(cut.g, darts, arc=True)
    emap = [cut.emap[e] for e in cut2.emap]
    cut2.emap = emap
    return cut2


def _certify(gs, cand):
    core = spur_reduce(cand.darts) if cand.closed else cand.darts
    if cand.closed and core and _is_vertex_simple(gs, core):
        cand.contractible = is_contractible(gs, core)
        assert cand.contractible is False
        cand.separating = is_separating(gs, core)
    return cand
