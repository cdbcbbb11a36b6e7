"""Combinatorial surface embeddings.

A surface embedding of a graph is stored as a rotation system with edge
signature bits.  Edge ``i`` owns darts ``2*i`` (the listed ``u -> v``
direction) and ``2*i + 1`` (the reversal); ``rev(d) == d ^ 1``.

Faces are traced on states ``(dart, side)``: from state ``(d, s)`` the walk
crosses ``d``, flips the side bit on signature-1 edges, and continues with
the next (or previous) dart in the rotation at ``head(d)``.  Every face of
the surface corresponds to a mirror-pair of state orbits; on orientable
surfaces the orbits through states ``(d, ref[tail(d)])`` form a canonical
orientation and give the usual left/right face maps used for duality.

Boundary components are represented as marked faces.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction


def rev(d):
    return d ^ 1


def edge_of(d):
    return d >> 1


class EmbeddedGraph:
    """Graph with a fixed embedding in a (possibly bordered) surface.

    Built through :func:`build_embedding`; treat instances as immutable.
    """

    def __init__(self):
        # populated by build_embedding
        self.n = 0
        self.m = 0
        self.tail = []
        self.head = []
        self.raw_w = []          # per-dart raw weights (int/Fraction/float)
        self.synthesized = set()  # darts added for missing reversals
        self.sig = []            # per-edge signature bit
        self.rot = []            # per-vertex tuple of darts (tails there)
        self.rot_next = []       # successor in rotation at tail(d)
        self.rot_prev = []
        self.orientable = True
        self.ref = []            # per-vertex orientation bit (orientable only)
        self.faces = []          # list of dart tuples, one traversal per face
        self.face_of_state = {}  # (dart, side) -> face index
        self.boundary_faces = frozenset()

    # -- basic accessors -------------------------------------------------

    @property
    def ndarts(self):
        return 2 * self.m

    @property
    def nfaces(self):
        return len(self.faces)

    def degree(self, v):
        return len(self.rot[v])

    def euler(self):
        """Euler characteristic of the capped surface (holes filled)."""
        return self.n - self.m + self.nfaces

    def genus(self):
        chi = self.euler()
        if self.orientable:
            if (2 - chi) % 2:
                raise ValueError("inconsistent embedding: odd orientable defect")
            return (2 - chi) // 2
        return 2 - chi

    def left_face(self, d):
        if not self.orientable:
            raise ValueError("left/right faces need an orientable embedding")
        return self.face_of_state[(d, self.ref[self.tail[d]])]

    def right_face(self, d):
        return self.left_face(rev(d))

    def edge_faces(self, e):
        """The (at most two) face indices incident to edge ``e``."""
        d = 2 * e
        return (self.face_of_state[(d, 0)], self.face_of_state[(d, 1)])

    def face_vertices(self, f):
        return [self.tail[d] for d in self.faces[f]]

    def is_boundary(self, f):
        return f in self.boundary_faces

    # -- construction helpers --------------------------------------------

    def _trace_faces(self):
        """Orbit-trace all (dart, side) states and mirror-pair them."""
        nd = self.ndarts
        state_face = {}
        orbits = []
        for d0 in range(nd):
            for s0 in (0, 1):
                if (d0, s0) in state_face:
                    continue
                orbit = []
                d, s = d0, s0
                while (d, s) not in state_face:
                    state_face[(d, s)] = len(orbits)
                    orbit.append((d, s))
                    s2 = s ^ self.sig[edge_of(d)]
                    r = rev(d)
                    d = self.rot_next[r] if s2 == 0 else self.rot_prev[r]
                    s = s2
                if (d, s) != (d0, s0):
                    raise ValueError("face tracing entered an orbit mid-way")
                orbits.append(orbit)

        def mirror(d, s):
            return (rev(d), 1 ^ s ^ self.sig[edge_of(d)])

        face_of_orbit = {}
        faces = []
        for i, orbit in enumerate(orbits):
            if i in face_of_orbit:
                continue
            d, s = orbit[0]
            j = state_face[mirror(d, s)]
            if j == i:
                raise ValueError("self-mirrored face orbit (unsupported map)")
            face_of_orbit[i] = face_of_orbit[j] = len(faces)
            if self.orientable:
                # keep the canonically oriented traversal
                if s != self.ref[self.tail[d]]:
                    orbit = orbits[j]
            faces.append(tuple(d for d, _ in orbit))
        self.faces = faces
        self.face_of_state = {
            st: face_of_orbit[i] for st, i in state_face.items()
        }

    def _orient(self):
        """2-color vertices so the signature becomes a coboundary, if possible."""
        ref = [None] * self.n
        ok = True
        for v0 in range(self.n):
            if ref[v0] is not None:
                continue
            ref[v0] = 0
            q = deque([v0])
            while q:
                v = q.popleft()
                for d in self.rot[v]:
                    w = self.head[d]
                    want = ref[v] ^ self.sig[edge_of(d)]
                    if ref[w] is None:
                        ref[w] = want
                        q.append(w)
                    elif ref[w] != want:
                        ok = False
        self.orientable = ok
        self.ref = ref if ok else []


def build_embedding(num_vertices, edges, rotations, signature=None,
                    boundary_darts=(), check=True):
    """Build an :class:`EmbeddedGraph`.

    ``edges``      -- sequence of ``(u, v, w_uv, w_vu)``; ``w_vu`` may be
                      ``None``, in which case a reversal dart is synthesized
                      with weight twice the total weight of the instance.
    ``rotations``  -- per vertex, the cyclic order of darts with that tail.
    ``signature``  -- per edge 0/1 bits (default all 0).
    ``boundary_darts`` -- darts marking the faces that are holes.
    """
    g = EmbeddedGraph()
    g.n = num_vertices
    g.m = len(edges)
    g.sig = list(signature) if signature is not None else [0] * g.m
    if len(g.sig) != g.m:
        raise ValueError("signature length does not match edge count")

    total = 0
    for (u, v, wf, wr) in edges:
        total += abs(Fraction(wf)) + (abs(Fraction(wr)) if wr is not None else 0)
    synth_w = 2 * total if total else 1

    g.tail = [0] * (2 * g.m)
    g.head = [0] * (2 * g.m)
    g.raw_w = [0] * (2 * g.m)
    for i, (u, v, wf, wr) in enumerate(edges):
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise ValueError("edge endpoint out of range")
        g.tail[2 * i], g.head[2 * i] = u, v
        g.tail[2 * i + 1], g.head[2 * i + 1] = v, u
        g.raw_w[2 * i] = wf
        if wr is None:
            g.raw_w[2 * i + 1] = synth_w
            g.synthesized.add(2 * i + 1)
        else:
            g.raw_w[2 * i + 1] = wr

    if len(rotations) != g.n:
        raise ValueError("rotation system must list every vertex")
    g.rot = [tuple(r) for r in rotations]
    g.rot_next = [None] * (2 * g.m)
    g.rot_prev = [None] * (2 * g.m)
    seen = set()
    for v, r in enumerate(g.rot):
        for d in r:
            if d in seen:
                raise ValueError("dart %d appears twice in rotations" % d)
            seen.add(d)
            if g.tail[d] != v:
                raise ValueError("dart %d listed at vertex %d but has tail %d"
                                 % (d, v, g.tail[d]))
        k = len(r)
        for idx, d in enumerate(r):
            g.rot_next[d] = r[(idx + 1) % k]
            g.rot_prev[d] = r[(idx - 1) % k]
    if check and len(seen) != 2 * g.m:
        raise ValueError("rotations cover %d of %d darts" % (len(seen), 2 * g.m))

    g._orient()
    g._trace_faces()

    bset = set()
    for d in boundary_darts:
        side = g.ref[g.tail[d]] if g.orientable else 0
        bset.add(g.face_of_state[(d, side)])
    g.boundary_faces = frozenset(bset)

    if check:
        g.genus()  # raises on parity defect
        if g.genus() < 0:
            raise ValueError("negative genus: embedding inconsistent")
    return g


def dual(g):
    """Dual embedding of an orientable embedding without boundary.

    Edge and dart ids are shared with the primal: the dual of dart ``d``
    has id ``d`` in the dual graph, runs from ``right(d)`` to ``left(d)``,
    and ``(e*)* == rev(e)``.
    """
    if not g.orientable:
        raise ValueError("duality needs an orientable embedding")
    if g.boundary_faces:
        raise ValueError("duality needs a surface without boundary")
    edges = []
    for i in range(g.m):
        d = 2 * i
        edges.append((g.right_face(d), g.left_face(d),
                      g.raw_w[d], g.raw_w[d ^ 1]))
    rotations = [None] * g.nfaces
    for f, cyc in enumerate(g.faces):
        rotations[f] = [rev(d) for d in reversed(cyc)]
    return build_embedding(g.nfaces, edges, rotations)


def tree_cotree(g, root=0, use_weights=None):
    """Partition the edges into (T, C, L).

    ``T`` is a spanning tree of the graph (shortest-path tree when
    ``use_weights`` is given, else BFS), ``C`` the edges whose duals span
    the face-adjacency graph, and ``L`` the ``2 - euler`` leftover edges.

    Returns ``(tree_edges, cotree_edges, leftover_edges, pred_dart)`` where
    ``pred_dart[v]`` is the tree dart into ``v`` (None at the root).
    """
    pred = [None] * g.n
    intree = [False] * g.m
    if use_weights is None:
        seen = [False] * g.n
        seen[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for d in g.rot[v]:
                w = g.head[d]
                if not seen[w]:
                    seen[w] = True
                    pred[w] = d
                    intree[edge_of(d)] = True
                    q.append(w)
        if not all(seen):
            raise ValueError("graph is not connected")
    else:
        import heapq
        dist = {root: use_weights.zero}
        done = [False] * g.n
        h = [(use_weights.zero, root, None)]
        while h:
            dv, v, pd = heapq.heappop(h)
            if done[v]:
                continue
            done[v] = True
            pred[v] = pd
            if pd is not None:
                intree[edge_of(pd)] = True
            for d in g.rot[v]:
                w = g.head[d]
                if not done[w]:
                    nw = dv + use_weights.get(d)
                    if w not in dist or nw < dist[w]:
                        dist[w] = nw
                        heapq.heappush(h, (nw, w, d))
        if not all(done):
            raise ValueError("graph is not connected")

    # BFS over faces through the duals of non-tree edges
    fseen = [False] * g.nfaces
    cotree = [False] * g.m
    adj = [[] for _ in range(g.nfaces)]
    for i in range(g.m):
        if not intree[i]:
            f1, f2 = g.edge_faces(i)
            adj[f1].append((i, f2))
            adj[f2].append((i, f1))
    fseen[0] = True
    q = deque([0])
    while q:
        f = q.popleft()
        for (i, f2) in adj[f]:
            if not fseen[f2]:
                fseen[f2] = True
                cotree[i] = True
                q.append(f2)
    if not all(fseen):
        raise ValueError("dual is not connected")

    T = [i for i in range(g.m) if intree[i]]
    C = [i for i in range(g.m) if cotree[i]]
    L = [i for i in range(g.m) if not intree[i] and not cotree[i]]
    assert len(L) == 2 - g.euler(), "leftover count disagrees with genus"
    return T, C, L, pred


def raw_edges(g):
    """Recover the builder edge list of ``g`` (for serialization)."""
    out = []
    for i in range(g.m):
        out.append((g.tail[2 * i], g.head[2 * i],
                    g.raw_w[2 * i], g.raw_w[2 * i + 1]))
    return out
