"""The bracket-monomial basis of the free Lie algebra on x, y through degree 5.

    w3 = [x,y]            w4 = [x,[x,y]]        w5 = [y,[y,x]]
    w6 = [x,[x,[x,y]]]    w7 = [y,[x,[x,y]]]    w8 = [y,[y,[x,y]]]
    w9  = [x,[x,[x,[x,y]]]]   w10 = [y,[x,[x,[x,y]]]]   w11 = [y,[y,[x,[x,y]]]]
    w12 = [y,[y,[y,[x,y]]]]   w13 = [[x,y],[x,[x,y]]]   w14 = [[x,y],[y,[x,y]]]

Degrees 2/3/4/5 are spanned by {w3}, {w4,w5}, {w6,w7,w8}, {w9..w14}.
"""

from __future__ import annotations

from .linalg import CoordSolver
from .ncseries import NCSeries, commutator

XY = ("x", "y")

_W_RECIPES = {
    3: ("x", "y"),
    4: ("x", 3),
    5: ("y", ("y", "x")),
    6: ("x", 4),
    7: ("y", 4),
    8: ("y", ("y", 3)),
    9: ("x", 6),
    10: ("y", 6),
    11: ("y", 7),
    12: ("y", 8),
    13: (3, 4),
    14: (3, ("y", 3)),
}

DEGREE_SPANS = {2: (3,), 3: (4, 5), 4: (6, 7, 8), 5: (9, 10, 11, 12, 13, 14)}


def w_element(k, maxdeg=5, ring=None) -> NCSeries:
    """w_k expanded as a word series over {x, y}."""
    def build(spec):
        if isinstance(spec, str):
            return NCSeries.letter(XY, spec, maxdeg, ring)
        if isinstance(spec, int):
            return build(_W_RECIPES[spec])
        left, right = spec
        return commutator(build(left), build(right))
    return build(_W_RECIPES[k])


def all_words(degree):
    """All words of one degree over x,y in (len, lex) order, as bytes."""
    out = []
    for bits in range(2 ** degree):
        out.append(bytes((bits >> (degree - 1 - i)) & 1 for i in range(degree)))
    return sorted(out)


class WBasis:
    """Coordinate extraction on the w-basis of one homogeneous degree."""

    def __init__(self, degree, maxdeg=5, ring=None):
        self.degree = degree
        self.indices = DEGREE_SPANS[degree]
        self.words = all_words(degree)
        self.ring = ring
        rows = []
        for k in self.indices:
            elt = w_element(k, maxdeg, None)
            rows.append([elt.terms.get(w, 0) for w in self.words])
        self.solver = CoordSolver(rows)

    def coordinates(self, series: NCSeries):
        """Coordinates of the homogeneous degree component on (w_k)."""
        comp = series.homogeneous(self.degree)
        zero = 0 if series.ring is None else series.ring.zero
        target = [comp.terms.get(w, zero) for w in self.words]
        return dict(zip(self.indices, self.solver.coordinates(target)))


_CACHE = {}


def w_coordinates(series: NCSeries, degree):
    """Coordinates of the degree-d part of series in the w-basis (d in 2..5)."""
    key = degree
    basis = _CACHE.get(key)
    if basis is None:
        basis = WBasis(degree)
        _CACHE[key] = basis
    return basis.coordinates(series)
