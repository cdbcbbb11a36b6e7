"""Weight arithmetic for shortest-path sweeps.

Two modes:

* ``rational`` -- weights are pairs ``(main, eps)`` of exact ``Fraction``
  values, compared lexicographically.  The ``eps`` component carries a
  deterministic per-dart perturbation that makes shortest paths unique;
  arithmetic is truncated at first order (``eps**2 == 0``), which is enough
  because perturbations only ever break ties.  Reported distances are the
  ``main`` component, so results match an unperturbed exact computation.

* ``float`` -- the perturbation is folded numerically into a single float
  (fast path for large instances; callers accept ~1e-9 relative error).
"""

from __future__ import annotations

import random
from fractions import Fraction

RATIONAL = "rational"
FLOAT = "float"

# Perturbation keys are uniform in [1, KEY_RANGE]; EPS_SCALE shrinks their
# numeric magnitude so that no simple path's eps total can reorder a strict
# main-component inequality in float mode.
KEY_RANGE = 1 << 30


class W:
    """Exact weight with an infinitesimal tie-breaking component."""

    __slots__ = ("main", "eps")

    def __init__(self, main, eps=0):
        self.main = main if isinstance(main, Fraction) else Fraction(main)
        self.eps = eps if isinstance(eps, Fraction) else Fraction(eps)

    def __add__(self, o):
        return W(self.main + o.main, self.eps + o.eps)

    def __sub__(self, o):
        return W(self.main - o.main, self.eps - o.eps)

    def __neg__(self):
        return W(-self.main, -self.eps)

    def __mul__(self, o):
        if isinstance(o, W):
            # truncated at first order in eps
            return W(self.main * o.main, self.main * o.eps + self.eps * o.main)
        return W(self.main * o, self.eps * o)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if isinstance(o, W):
            a, b, c, d = self.main, self.eps, o.main, o.eps
            if c == 0:
                # purely infinitesimal denominator: only an infinitesimal
                # numerator keeps the quotient inside the ring
                if a != 0:
                    raise ZeroDivisionError("main part divided by eps-only W")
                return W(b / d)
            return W(a / c, (b * c - a * d) / (c * c))
        return W(self.main / o, self.eps / o)

    def _key(self):
        return (self.main, self.eps)

    def __lt__(self, o):
        return self._key() < o._key()

    def __le__(self, o):
        return self._key() <= o._key()

    def __gt__(self, o):
        return self._key() > o._key()

    def __ge__(self, o):
        return self._key() >= o._key()

    def __eq__(self, o):
        return isinstance(o, W) and self._key() == o._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.eps:
            return "W(%s, %s)" % (self.main, self.eps)
        return "W(%s)" % (self.main,)


class WeightTable:
    """Per-dart weights in one of the two modes.

    ``raw[d]`` is the user-supplied value of dart ``d``; ``get(d)`` returns
    the perturbed arithmetic value (a :class:`W` or a float), and
    ``report(x)`` strips the perturbation for output.
    """

    def __init__(self, raw, mode, seed=0):
        if mode not in (RATIONAL, FLOAT):
            raise ValueError("unknown weight mode: %r" % (mode,))
        self.mode = mode
        self.raw = list(raw)
        rng = random.Random(0xD1CE ^ seed)
        keys = [rng.randint(1, KEY_RANGE) for _ in self.raw]
        if mode == RATIONAL:
            unit = eps_unit_rational(self.raw, len(self.raw))
            self.vals = [
                W(Fraction(r), Fraction(k) * unit) for r, k in zip(self.raw, keys)
            ]
            self.zero = W(0)
            self.one = W(1)
        else:
            scale = max((abs(float(r)) for r in self.raw), default=1.0) or 1.0
            unit = scale * 1e-13 / (len(self.raw) + 1) / KEY_RANGE
            self.vals = [float(r) + k * unit for r, k in zip(self.raw, keys)]
            self.zero = 0.0
            self.one = 1.0

    def get(self, d):
        return self.vals[d]

    def report(self, x):
        if self.mode == RATIONAL:
            return x.main
        return x

    def from_scalar(self, x):
        if self.mode == RATIONAL:
            return W(Fraction(x))
        return float(x)


def eps_unit_rational(raw, ndarts):
    """A rational eps small enough that no simple-path eps total can flip a
    strict inequality between main components."""
    den = 1
    for r in raw:
        f = Fraction(r)
        den = den * f.denominator // _gcd(den, f.denominator)
    # distinct main values differ by at least 1/den; sum of keys along a
    # simple path is < ndarts * KEY_RANGE
    return Fraction(1, 2 * den * (ndarts + 1) * KEY_RANGE)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
