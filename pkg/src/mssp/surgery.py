"""Surface surgery: cutting along embedded walks, pasting and contracting
boundaries, and the combinatorial crossing counter.

Cutting works corner by corner.  Every face of the input is an orbit of
(dart, side) states, and each transition between consecutive states consumes
exactly one rotation corner (a, rot_next(a)) at the vertex it passes.  A cut
walk splits the rotation at each of its vertices into two arcs; every corner
lands in exactly one arc, so every face incidence -- including the two sides
of each cut edge -- attaches to a well-defined vertex copy.  The construction
is verified after the fact: every face not touched by the slit must survive
verbatim, and the Euler characteristic must move by exactly the textbook
amount (0 for cycles, +1 for arcs).
"""

import copy as _copy

from .surface import build_embedding, edge_of, raw_edges, rev


def face_states(g):
    """Per stored face, the (dart, side) orbit matching ``g.faces`` order."""
    out = []
    for f, cyc in enumerate(g.faces):
        d0 = cyc[0]
        # either side of d0 may carry the stored orientation; try both
        for s0 in (0, 1):
            orbit = []
            d, s = d0, s0
            for _ in cyc:
                orbit.append((d, s))
                s2 = s ^ g.sig[edge_of(d)]
                r = rev(d)
                d = g.rot_next[r] if s2 == 0 else g.rot_prev[r]
                s = s2
            if (d, s) == (d0, s0) and tuple(x for x, _ in orbit) == cyc:
                out.append(orbit)
                break
        else:
            raise AssertionError("face orbit did not retrace")
    return out


def _corner(dp, sp, d, g):
    """Ordered rotation corner consumed by the state transition dp -> d."""
    if sp ^ g.sig[edge_of(dp)] == 0:
        return (rev(dp), d)
    return (d, rev(dp))


def _canon(walk):
    k = len(walk)
    best = min(tuple(walk[i:] + walk[:i]) for i in range(k))
    m = [rev(d) for d in reversed(walk)]
    bestm = min(tuple(m[i:] + m[:i]) for i in range(k))
    return min(best, bestm)


class CutResult:
    """A surface cut open along a walk.

    ``g`` is the new embedding, ``vmap``/``emap`` send new vertex/edge ids
    back to the input's, ``copies[v]`` lists the (one or two) new ids of a
    walk vertex, and ``slits`` are the boundary faces the cut created.
    """

    def __init__(self, g, vmap, emap, copies, slits, walk):
        self.g = g
        self.vmap = vmap
        self.emap = emap
        self.copies = copies
        self.slits = slits
        self.walk = walk


def cut_along(g, walk, arc=False):
    """Cut ``g`` along a vertex-simple closed walk (or boundary arc)."""
    if not walk:
        raise ValueError("empty cut walk")
    k = len(walk)
    for a, b in zip(walk, walk[1:]):
        if g.head[a] != g.tail[b]:
            raise ValueError("cut walk is not connected")
    verts = [g.tail[d] for d in walk]
    if arc:
        verts.append(g.head[walk[-1]])
    elif g.head[walk[-1]] != verts[0]:
        raise ValueError("cut cycle does not close")
    if len(set(verts)) != len(verts):
        raise ValueError("cut walk is not simple")
    if len(set(edge_of(d) for d in walk)) != k:
        raise ValueError("cut walk repeats an edge")

    orbits = face_states(g)
    loc = {}
    corner_user = {}
    for f, orbit in enumerate(orbits):
        for i, (d, s) in enumerate(orbit):
            loc[d] = (f, i)
            dp, sp = orbit[i - 1]
            corner_user[_corner(dp, sp, d, g)] = f

    def tail_corner(d):
        f, i = loc[d]
        dp, sp = orbits[f][i - 1]
        return _corner(dp, sp, d, g)

    def head_corner(d):
        f, i = loc[d]
        dn = orbits[f][(i + 1) % len(orbits[f])][0]
        return _corner(d, loc_side(d), dn, g)

    def loc_side(d):
        f, i = loc[d]
        return orbits[f][i][1]

    # per cut vertex: the rotation split into two arcs
    cut_edges = set(edge_of(d) for d in walk)
    split = {}      # vertex -> (arc1 darts, arc2 darts, corner side fn data)
    gap_faces = []
    for i, v in enumerate(verts):
        rot = list(g.rot[v])
        pos = {d: j for j, d in enumerate(rot)}
        if arc and i == 0:
            lo = pos[walk[0]]
            hi = _gap_pos(g, v, rot, pos, corner_user, gap_faces)
        elif arc and i == k:
            lo = pos[rev(walk[-1])]
            hi = _gap_pos(g, v, rot, pos, corner_user, gap_faces)
        else:
            lo = pos[walk[i]]
            hi = pos[rev(walk[i - 1])]
        split[v] = (rot, lo, hi)

    def side_of(v, d):
        """1 if dart d at v belongs to the arc starting at the out dart."""
        rot, lo, hi = split[v]
        j = rot.index(d)
        if (j - lo) % len(rot) <= (hi - lo) % len(rot):
            return 1
        return 2

    def corner_side(v, c):
        """Side owning corner (a, rot_next(a)); None if the corner is a gap."""
        rot, lo, hi = split[v]
        nr = len(rot)
        j = rot.index(c[0])
        r = (j - lo) % nr
        rh = (hi - lo) % nr
        if r < rh:
            return 1
        if r > rh:
            return 2
        if not (arc and v in (verts[0], verts[-1])):
            return 2
        # the gap corner at an arc endpoint; it survives only when the gap
        # directly flanks the cut dart, leaving a degree-1 copy
        if rh == 0:
            return 1
        if rh == nr - 1:
            return 2
        return None

    n, m = g.n, g.m
    cut_set = set(verts)
    copy2 = {v: n + j for j, v in enumerate(verts)}   # second copy ids

    def vid(v, side):
        return v if side == 1 else copy2[v]

    edges = []
    sig = []
    emap = []
    raw = raw_edges(g)

    def end_id(v, d):
        if v not in cut_set:
            return v
        return vid(v, side_of(v, d))

    for e in range(m):
        u, v, wf, wr = raw[e]
        if e in cut_edges:
            edges.append(None)      # filled below, id preserved
        else:
            edges.append((end_id(u, 2 * e), end_id(v, 2 * e + 1), wf, wr))
        sig.append(g.sig[e])
        emap.append(e)

    # two copies per cut edge, one per face incidence
    slot = {}       # (vertex copy id, original dart) -> copy dart id
    for d in walk:
        e = edge_of(d)
        u, v, wf, wr = raw[e]
        for j, dd in enumerate((2 * e, 2 * e + 1)):
            ct = corner_side(g.tail[dd], tail_corner(dd))
            ch = corner_side(g.head[dd], head_corner(dd))
            assert ct is not None and ch is not None
            if dd == 2 * e:
                ends = (vid(u, ct), vid(v, ch))
            else:
                ends = (vid(u, ch), vid(v, ct))
            if j == 0:
                eid = e
                edges[e] = ends + (wf, wr)
            else:
                eid = len(edges)
                edges.append(ends + (wf, wr))
                sig.append(g.sig[e])
                emap.append(e)
            slot[(ends[0], 2 * e)] = 2 * eid
            slot[(ends[1], 2 * e + 1)] = 2 * eid + 1

    def copy_dart(vc, d):
        if edge_of(d) in cut_edges:
            return slot[(vc, d)]
        return d

    rotations = [None] * (n + len(verts))
    for v in range(n):
        if v not in cut_set:
            rotations[v] = list(g.rot[v])
    for v in cut_set:
        rot, lo, hi = split[v]
        nr = len(rot)
        span = (hi - lo) % nr
        arc1 = [rot[(lo + t) % nr] for t in range(span + 1)]
        if arc and v in (verts[0], verts[-1]):
            # only the cut dart is duplicated; the gap corner splits the rest
            arc2 = [rot[(hi + 1 + t) % nr] for t in range(nr - span)]
        else:
            # both cut darts are duplicated
            arc2 = [rot[(hi + t) % nr] for t in range(nr - span + 1)]
        rotations[vid(v, 1)] = [copy_dart(vid(v, 1), d) for d in arc1]
        rotations[vid(v, 2)] = [copy_dart(vid(v, 2), d) for d in arc2]

    g2 = build_embedding(n + len(verts), edges, rotations, sig)

    # locate the slits directly: they are the faces consuming the new gap
    # corners between the cut-dart copies.  (Matching by elimination is not
    # enough: cutting along a facial cycle makes one slit project exactly
    # onto the old face's walk.)
    gap2 = set()
    if not arc:
        cuser2 = {}
        for f2, orbit in enumerate(face_states(g2)):
            for i, (d, s) in enumerate(orbit):
                dp, sp = orbit[i - 1]
                cuser2[_corner(dp, sp, d, g2)] = f2
        v0 = g.tail[walk[0]]
        out1 = copy_dart(vid(v0, 1), walk[0])
        ri1 = copy_dart(vid(v0, 1), rev(walk[-1]))
        out2 = copy_dart(vid(v0, 2), walk[0])
        ri2 = copy_dart(vid(v0, 2), rev(walk[-1]))
        gap2 = {cuser2[(ri1, out1)], cuser2[(out2, ri2)]}

    # verify face survival and mark the slits
    old = {}
    for f, cyc in enumerate(g.faces):
        old[_canon(list(cyc))] = f
    matched = {}
    slits = []
    for f2, cyc in enumerate(g2.faces):
        if f2 in gap2:
            slits.append(f2)
            continue
        proj = [2 * emap[edge_of(d)] + (d & 1) for d in cyc]
        key = _canon(proj)
        if key in old and old[key] not in matched:
            matched[old[key]] = f2
        else:
            slits.append(f2)
    for f in range(g.nfaces):
        if arc and f in gap_faces:
            assert f not in matched, "endpoint boundary face survived the cut"
        else:
            assert f in matched, "an untouched face did not survive the cut"

    bset = set(slits)
    for f in g.boundary_faces:
        if f in matched:
            bset.add(matched[f])
    g2.boundary_faces = frozenset(bset)

    chi_old = g.euler() - len(g.boundary_faces)
    chi_new = g2.euler() - len(g2.boundary_faces)
    assert chi_new == chi_old + (1 if arc else 0)

    vmap = list(range(n)) + verts
    copies = {}
    for v in verts:
        copies[v] = (vid(v, 1), vid(v, 2))
    return CutResult(g2, vmap, emap, copies, slits, list(walk))


def _gap_pos(g, v, rot, pos, corner_user, gap_faces):
    """Rotation position of a boundary-face corner at an arc endpoint."""
    for j, a in enumerate(rot):
        c = (a, g.rot_next[a])
        f = corner_user.get(c)
        if f is not None and f in g.boundary_faces:
            gap_faces.append(f)
            return j
    raise ValueError("arc endpoint does not touch a boundary face")


def paste_disk(g, face):
    """Fill the hole ``face`` with a disk (drop its boundary mark)."""
    if face not in g.boundary_faces:
        raise ValueError("face %d is not a boundary" % face)
    g2 = _copy.copy(g)
    g2.boundary_faces = g.boundary_faces - {face}
    return g2


def contract_boundary(g, face):
    """Contract the boundary ``face`` to an apex vertex.

    Returns ``(g2, apex, vmap, emap)``; the boundary's own edges vanish and
    the rotations of its vertices are concatenated in boundary order.
    """
    if face not in g.boundary_faces:
        raise ValueError("face %d is not a boundary" % face)
    cyc = g.faces[face]
    bverts = [g.tail[d] for d in cyc]
    if len(set(bverts)) != len(bverts):
        raise ValueError("boundary walk pinches a vertex")
    bedges = set(edge_of(d) for d in cyc)
    if len(bedges) != len(cyc):
        raise ValueError("boundary walk repeats an edge")

    keep = [v for v in range(g.n) if v not in set(bverts)]
    vmap_new = {v: i for i, v in enumerate(keep)}
    apex = len(keep)

    def vrename(v):
        return vmap_new.get(v, apex)

    raw = raw_edges(g)
    edges = []
    sig = []
    emap = []
    erename = {}
    for e in range(g.m):
        if e in bedges:
            continue
        u, v, wf, wr = raw[e]
        erename[e] = len(edges)
        edges.append((vrename(u), vrename(v), wf, wr))
        sig.append(g.sig[e])
        emap.append(e)

    def drename(d):
        return 2 * erename[edge_of(d)] + (d & 1)

    rotations = [None] * (apex + 1)
    for v in keep:
        rotations[vmap_new[v]] = [drename(d) for d in g.rot[v]]

    def kept_arc(i):
        v = bverts[i]
        a, b = rev(cyc[i - 1]), cyc[i]
        rot = list(g.rot[v])
        nr = len(rot)
        if g.rot_next[a] == b:
            start = rot.index(b)
        elif g.rot_next[b] == a:
            start = rot.index(a)
        else:
            raise ValueError("boundary darts are not adjacent at vertex %d"
                             % v)
        return [rot[(start + 1 + t) % nr] for t in range(nr - 2)]

    for order in (range(len(cyc)), reversed(range(len(cyc)))):
        acc = []
        for i in order:
            acc.extend(drename(d) for d in kept_arc(i))
        rotations[apex] = acc
        try:
            g2 = build_embedding(apex + 1, edges, rotations, sig)
        except ValueError:
            continue
        # k-1 fewer vertices, k fewer edges, one less face: euler unchanged
        if g2.euler() == g.euler() and g2.orientable == g.orientable:
            break
    else:
        raise AssertionError("boundary contraction changed the surface")

    old = {}
    for f in g.boundary_faces:
        if f == face:
            continue
        old[_canon([drename(d) for d in g.faces[f]])] = f
    bset = set()
    for f2, cyc in enumerate(g2.faces):
        if _canon(list(cyc)) in old:
            bset.add(f2)
    assert len(bset) == len(g.boundary_faces) - 1, \
        "a surviving boundary face was lost in the contraction"
    g2.boundary_faces = frozenset(bset)

    vmap = keep + [bverts[0]]
    return g2, apex, vmap, emap


def crossing_count(cut, walk, closed=True):
    """Minimum crossings of ``walk`` (darts of the pre-cut graph) with the
    cut curve over all perturbations: the fewest jumps between vertex copies
    needed to lift the walk into the cut surface."""
    g2 = cut.g
    copies_of_edge = {}
    for e2, e in enumerate(cut.emap):
        copies_of_edge.setdefault(e, []).append(e2)

    INF = float("inf")

    def relax_switch(state):
        out = dict(state)
        for a, b in cut.copies.values():
            if out.get(a, INF) + 1 < out.get(b, INF):
                out[b] = out[a] + 1
            if out.get(b, INF) + 1 < out.get(a, INF):
                out[a] = out[b] + 1
        return out

    starts = set()
    for e2 in copies_of_edge[edge_of(walk[0])]:
        starts.add(g2.tail[2 * e2 + (walk[0] & 1)])
    results = []
    for start in starts:
        state = relax_switch({start: 0})
        for d in walk:
            nxt = {}
            for e2 in copies_of_edge[edge_of(d)]:
                d2 = 2 * e2 + (d & 1)
                t, h = g2.tail[d2], g2.head[d2]
                if t in state and state[t] < nxt.get(h, INF):
                    nxt[h] = state[t]
            state = relax_switch(nxt)
            if not state:
                break
        if closed:
            if start in state:
                results.append(state[start])
        elif state:
            results.append(min(state.values()))
    if not results:
        raise ValueError("walk does not lift into the cut surface")
    return min(results)


def split_components(g):
    """Connected components as separate embeddings with id maps.

    Returns a list of ``(graph, vmap, emap)``.
    """
    comp = [None] * g.n
    nc = 0
    for v0 in range(g.n):
        if comp[v0] is not None:
            continue
        stack = [v0]
        comp[v0] = nc
        while stack:
            v = stack.pop()
            for d in g.rot[v]:
                w = g.head[d]
                if comp[w] is None:
                    comp[w] = nc
                    stack.append(w)
        nc += 1
    if nc == 1:
        return [(g, list(range(g.n)), list(range(g.m)))]
    raw = raw_edges(g)
    out = []
    for c in range(nc):
        verts = [v for v in range(g.n) if comp[v] == c]
        vren = {v: i for i, v in enumerate(verts)}
        emap = [e for e in range(g.m) if comp[raw[e][0]] == c]
        eren = {e: i for i, e in enumerate(emap)}
        edges = [(vren[raw[e][0]], vren[raw[e][1]], raw[e][2], raw[e][3])
                 for e in emap]
        sig = [g.sig[e] for e in emap]
        rotations = [[2 * eren[edge_of(d)] + (d & 1) for d in g.rot[v]]
                     for v in verts]
        sub = build_embedding(len(verts), edges, rotations, sig)
        bset = set()
        for f in g.boundary_faces:
            d = g.faces[f][0]
            if comp[g.tail[d]] != c:
                continue
            nd = 2 * eren[edge_of(d)] + (d & 1)
            s = next(s for s in (0, 1) if g.face_of_state[(d, s)] == f)
            bset.add(sub.face_of_state[(nd, s)])
        sub.boundary_faces = frozenset(bset)
        out.append((sub, verts, emap))
    return out
