"""The ``msgraph`` text format (version 1).

::

    msgraph 1 <orientable|nonorientable>
    vertices <n>
    edges <m>
    edge <id> <u> <v> <w_uv> <w_vu> <sig>     (m lines)
    rot <v> <+-id> ...                        (n lines)

``+id`` in a ``rot`` line denotes the ``u -> v`` dart of edge ``id`` (as
listed on its ``edge`` line), ``-id`` the reversal.  Weights are integers,
fractions ``p/q``, or decimal floats.
"""

from __future__ import annotations

from fractions import Fraction

from .surface import build_embedding


class FormatError(ValueError):
    pass


def _parse_weight(tok):
    try:
        return Fraction(tok)
    except ValueError:
        try:
            return float(tok)
        except ValueError:
            raise FormatError("bad weight token %r" % tok)


def _fmt_weight(w):
    if isinstance(w, Fraction):
        if w.denominator == 1:
            return str(w.numerator)
        return "%d/%d" % (w.numerator, w.denominator)
    return repr(w)


def parse(text):
    """Parse msgraph text into an EmbeddedGraph."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty input")
    hdr = lines[0].split()
    if len(hdr) != 3 or hdr[0] != "msgraph" or hdr[1] != "1":
        raise FormatError("bad header: %r" % lines[0])
    if hdr[2] not in ("orientable", "nonorientable"):
        raise FormatError("bad orientability flag %r" % hdr[2])
    want_orientable = hdr[2] == "orientable"

    def keyed(idx, key):
        toks = lines[idx].split()
        if toks[0] != key:
            raise FormatError("expected %r line, got %r" % (key, lines[idx]))
        return toks

    n = int(keyed(1, "vertices")[1])
    m = int(keyed(2, "edges")[1])
    if len(lines) != 3 + m + n:
        raise FormatError("expected %d lines, found %d" % (3 + m + n, len(lines)))

    edges = [None] * m
    sig = [0] * m
    for k in range(m):
        toks = keyed(3 + k, "edge")
        if len(toks) != 7:
            raise FormatError("bad edge line: %r" % lines[3 + k])
        eid, u, v = int(toks[1]), int(toks[2]), int(toks[3])
        if not (0 <= eid < m) or edges[eid] is not None:
            raise FormatError("bad or duplicate edge id %d" % eid)
        edges[eid] = (u, v, _parse_weight(toks[4]), _parse_weight(toks[5]))
        s = int(toks[6])
        if s not in (0, 1):
            raise FormatError("signature must be 0 or 1")
        sig[eid] = s

    rot = [None] * n
    for k in range(n):
        toks = keyed(3 + m + k, "rot")
        v = int(toks[1])
        if not (0 <= v < n) or rot[v] is not None:
            raise FormatError("bad or duplicate rot vertex %d" % v)
        darts = []
        for t in toks[2:]:
            eid = int(t)
            if t.startswith("+"):
                d = 2 * eid
            elif t.startswith("-"):
                d = 2 * (-eid) + 1
            else:
                raise FormatError("rot tokens need an explicit sign: %r" % t)
            if not (0 <= (d >> 1) < m):
                raise FormatError("rot token %r out of range" % t)
            darts.append(d)
        rot[v] = darts

    try:
        g = build_embedding(n, edges, rot, sig)
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError("invalid embedding: %s" % exc)
    if g.orientable != want_orientable:
        raise FormatError("declared %s but embedding is %s" % (
            hdr[2], "orientable" if g.orientable else "nonorientable"))
    return g


def write(g):
    """Serialize an EmbeddedGraph as msgraph text."""
    out = ["msgraph 1 %s" % ("orientable" if g.orientable else "nonorientable")]
    out.append("vertices %d" % g.n)
    out.append("edges %d" % g.m)
    for i in range(g.m):
        out.append("edge %d %d %d %s %s %d" % (
            i, g.tail[2 * i], g.head[2 * i],
            _fmt_weight(g.raw_w[2 * i]), _fmt_weight(g.raw_w[2 * i + 1]),
            g.sig[i]))
    for v in range(g.n):
        toks = []
        for d in g.rot[v]:
            toks.append(("+%d" if d % 2 == 0 else "-%d") % (d >> 1))
        out.append("rot %d %s" % (v, " ".join(toks)))
    return "\n".join(out) + "\n"


def load(path):
    with open(path) as fh:
        return parse(fh.read())


def dump(g, path):
    with open(path, "w") as fh:
        fh.write(write(g))
