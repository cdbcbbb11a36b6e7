"""Orientable double cover of a non-orientable embedding.

Each vertex v gets two copies (v, 0) and (v, 1); each edge e = uv gets two
copies, and the copy started at (u, j) ends at (v, j xor sig(e)).  Rotations
are copied verbatim to both vertex copies and the signature bits are copied
to both edge copies, which makes the cover orientable: colouring (v, j) with
j is a consistent 2-colouring.  Faces come in pairs and the Euler
characteristic doubles, so a non-orientable surface of genus g lifts to the
orientable surface of genus g - 1.

Vertex (v, j) has id v + j*n and edge (e, j) has id 2*e + j, so darts and
walks translate back and forth by arithmetic alone.
"""

from .surface import build_embedding, rev, edge_of
from .genus import GenusMSSP, RATIONAL


class DoubleCover:
    """The cover graph plus the lift/projection maps."""

    def __init__(self, g):
        if g.orientable:
            raise ValueError("double cover needs a non-orientable input")
        self.g = g
        n, m = g.n, g.m
        edges = []
        for e in range(m):  # interleaved so edge (e, j) has id 2*e + j
            u, v = g.tail[2 * e], g.head[2 * e]
            wf, wr = g.raw_w[2 * e], g.raw_w[2 * e + 1]
            i = g.sig[e]
            edges.append((u, v + i * n, wf, wr))
            edges.append((u + n, v + (1 ^ i) * n, wf, wr))
        # copying the signature bits would keep the cover 2-colourable by
        # sheet; flipping every sheet-1 vertex (reverse its rotation, clear
        # the incident bits) gives the same surface with zero signature
        rot = [None] * (2 * n)
        for v in range(n):
            lifted = [self.lift_dart(d, 0) for d in g.rot[v]]
            rot[v] = lifted
            lifted = [self.lift_dart(d, 1) for d in g.rot[v]]
            rot[v + n] = lifted[::-1]
        bdarts = []
        for f in g.boundary_faces:
            d = g.faces[f][0]
            bdarts.append(self.lift_dart(d, 0))
            bdarts.append(self.lift_dart(d, 1))
        self.cover = build_embedding(2 * n, edges, rot, None, bdarts)
        assert self.cover.orientable
        assert self.cover.m == 2 * g.m
        assert self.cover.nfaces == 2 * g.nfaces
        if not g.boundary_faces:
            assert self.cover.genus() == g.genus() - 1

    # -- darts and vertices

    def lift_vertex(self, v, j):
        return v + j * self.g.n

    def project_vertex(self, vc):
        return vc % self.g.n, vc // self.g.n

    def lift_dart(self, d, j):
        """The cover dart over d whose tail sits in sheet j."""
        e = edge_of(d)
        if d == 2 * e:
            return 4 * e + 2 * j
        return 4 * e + 2 * (j ^ self.g.sig[e]) + 1

    def project_dart(self, dc):
        """Project a cover dart; returns (dart, sheet of its tail)."""
        ec, r = divmod(dc, 2)
        e, j = divmod(ec, 2)
        d = 2 * e + r
        if r:
            j ^= self.g.sig[e]
        return d, j

    # -- walks

    def lift_walk(self, walk, j0=0):
        """Lift a dart walk starting in sheet j0."""
        out = []
        j = j0
        for d in walk:
            out.append(self.lift_dart(d, j))
            j ^= self.g.sig[edge_of(d)]
        return out

    def project_walk(self, walk):
        return [self.project_dart(dc)[0] for dc in walk]

    def lift_face(self, f, j0=0):
        """The face of the cover containing the lift of f through sheet j0."""
        d = self.lift_dart(self.g.faces[f][0], j0)
        for fc, ds in enumerate(self.cover.faces):
            if d in ds or rev(d) in ds:
                return fc
        raise AssertionError("lifted dart lost its face")


def build_double_cover(g):
    return DoubleCover(g)


class CoverMSSP:
    """Corner-to-vertex distances on a non-orientable map, answered by
    sweeping one lift of the face on the orientable double cover."""

    def __init__(self, g, face, mode=RATIONAL, seed=0, debug=False):
        self.cov = DoubleCover(g)
        self.face = face
        fc = self.cov.lift_face(face, 0)
        self.ms = GenusMSSP(self.cov.cover, fc, mode=mode, seed=seed,
                            debug=debug)
        # position of each original corner among the swept cover corners;
        # same-vertex corners share one tree, so any copy of the vertex works
        self.corners = [g.tail[d] for d in g.faces[face]]
        self._pos = []
        for v in self.corners:
            want = {self.cov.lift_vertex(v, 0), self.cov.lift_vertex(v, 1)}
            self._pos.append(next(i for i, cv in enumerate(self.ms.corners)
                                  if cv in want))

    def source(self, i):
        return self.corners[i]

    def _lifts(self, x):
        return (self.cov.lift_vertex(x, 0), self.cov.lift_vertex(x, 1))

    def dist(self, i, x):
        ci = self._pos[i]
        return min(self.ms.dist(ci, xc) for xc in self._lifts(x))

    def path(self, i, x):
        ci = self._pos[i]
        best = min(self._lifts(x), key=lambda xc: self.ms.dist(ci, xc))
        return self.cov.project_walk(self.ms.path(ci, best))


def sweep_face_cover(g, face, mode=RATIONAL, seed=0, debug=False):
    """Sweep the corners of ``face`` on a non-orientable map."""
    return CoverMSSP(g, face, mode=mode, seed=seed, debug=debug)
