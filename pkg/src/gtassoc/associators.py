"""Associator candidates and their defining equations, in truncation.

A candidate is a pair (lambda, Phi) with Phi a series over {x,y} with
constant term 1.  The four defining conditions checked here are grouplike-
ness, the inversion symmetry Phi(y,x) Phi(x,y) = 1, the two-parameter
hexagon

    e^{lam x/2} Phi(z,x) e^{lam z/2} Phi(y,z) e^{lam y/2} Phi(x,y) = 1,
    z = -x-y,

and the pentagon, an equation between the five faces

    d3 = Phi(t12, t23+t24)   d1 = Phi(t13+t23, t34)   d0 = Phi(t23, t34)
    d2 = Phi(t12+t13, t24+t34)   d4 = Phi(t12, t23)

inside the truncated enveloping algebra of the 4-strand holonomy Lie
algebra: (d3)(d1) = (d0)(d2)(d4).

The degree-3 coefficient c is the coordinate on [x,[x,y]] - [y,[y,x]]; the
degree-5 reference candidate phi0_reference is even with c = 0, and
extend_associator solves the linearized system for a one-degree extension.
"""

from __future__ import annotations

from fractions import Fraction

from . import holonomy
from .holonomy import HoloAlgebra, embed_free, holonomy_algebra
from .linalg import solve_affine
from .ncseries import (NCSeries, is_grouplike, letter_swap, lyndon_basis, nc_exp,
                       nc_log, nc_substitute, to_text)
from .symcoef import as_fraction
from .wbasis import XY, all_words, w_coordinates, w_element


class AssociatorCandidate:
    """A series over {x,y} with constant term 1 together with its lambda."""

    __slots__ = ("series", "lam")

    def __init__(self, series: NCSeries, lam=1):
        if series.alphabet != XY:
            raise ValueError("associators live over the alphabet (x, y)")
        if series.coefficient(b"") != 1:
            raise ValueError("associator series must have constant term 1")
        self.series = series
        self.lam = as_fraction(lam)

    @property
    def maxdeg(self):
        return self.series.maxdeg

    @property
    def known_order(self):
        return self.series.known_order

    def promote(self, ring):
        return AssociatorCandidate(self.series.promote(ring), self.lam)

    def __repr__(self):
        return "<AssociatorCandidate lambda=%s %r>" % (self.lam, self.series)

    def to_text(self):
        return to_text(self.series, extra={"lambda": self.lam})


def duality_check(phi: AssociatorCandidate) -> bool:
    """Phi(y,x) = Phi(x,y)^{-1} through the known order."""
    s = phi.series
    swapped = letter_swap(s, {"x": "y", "y": "x"})
    return (swapped * s).is_one()


def hexagon_product(series: NCSeries, lam) -> NCSeries:
    """e^{lam x/2} Phi(z,x) e^{lam z/2} Phi(y,z) e^{lam y/2} Phi(x,y), z = -x-y."""
    x = NCSeries.letter(XY, "x", series.maxdeg, series.ring, series.known_order)
    y = NCSeries.letter(XY, "y", series.maxdeg, series.ring, series.known_order)
    z = -1 * x - y
    half = Fraction(as_fraction(lam), 2)
    prod = nc_exp(half * x)
    prod = prod * nc_substitute(series, {"x": z, "y": x})
    prod = prod * nc_exp(half * z)
    prod = prod * nc_substitute(series, {"x": y, "y": z})
    prod = prod * nc_exp(half * y)
    prod = prod * series
    return prod


def hexagon_check(phi: AssociatorCandidate, lam=None) -> bool:
    """The six-factor hexagon product reduces to 1 through the known order."""
    lam = phi.lam if lam is None else lam
    return hexagon_product(phi.series, lam).is_one()


PENTAGON_FACES = (
    ("d3", (("t", 1, 2),), (("t", 2, 3), ("t", 2, 4))),
    ("d1", (("t", 1, 3), ("t", 2, 3)), (("t", 3, 4),)),
    ("d0", (("t", 2, 3),), (("t", 3, 4),)),
    ("d2", (("t", 1, 2), ("t", 1, 3)), (("t", 2, 4), ("t", 3, 4))),
    ("d4", (("t", 1, 2),), (("t", 2, 3),)),
)


def pentagon_faces(series: NCSeries, algebra: HoloAlgebra):
    faces = {}
    for name, xs, ys in PENTAGON_FACES:
        xi = algebra.zero()
        for (_, i, j) in xs:
            xi = xi + algebra.generator(i, j)
        yi = algebra.zero()
        for (_, i, j) in ys:
            yi = yi + algebra.generator(i, j)
        faces[name] = embed_free(series, algebra, {"x": xi, "y": yi})
    return faces


def pentagon_defect(series: NCSeries, algebra: HoloAlgebra):
    """(d3)(d1) - (d0)(d2)(d4) in U(T_4)."""
    f = pentagon_faces(series, algebra)
    return f["d3"] * f["d1"] - f["d0"] * f["d2"] * f["d4"]


def pentagon_check(phi: AssociatorCandidate, algebra: HoloAlgebra = None) -> bool:
    if algebra is None:
        algebra = holonomy_algebra(4, phi.series.known_order)
    return pentagon_defect(phi.series, algebra).is_zero()


def certify(phi: AssociatorCandidate, algebra: HoloAlgebra = None) -> dict:
    """Run all four membership conditions; returns {check: bool}."""
    return {
        "grouplike": is_grouplike(phi.series),
        "duality": duality_check(phi),
        "hexagon": hexagon_check(phi),
        "pentagon": pentagon_check(phi, algebra),
    }


def c_extract(phi):
    """Coefficient of [x,[x,y]] - [y,[y,x]] in the degree-3 component.

    Raises when the degree-3 component is not proportional to that element.
    """
    series = phi.series if isinstance(phi, AssociatorCandidate) else phi
    coords = w_coordinates(series, 3)
    c4, c5 = coords[4], coords[5]
    if c4 + c5 != 0:
        raise ValueError("degree-3 component is not a multiple of w4 - w5")
    return c4


def bar(phi: AssociatorCandidate) -> AssociatorCandidate:
    """Phi(-x, -y): sign-flip every odd-degree component."""
    s = phi.series
    flipped = {w: (c if len(w) % 2 == 0 else -c) for w, c in s.terms.items()}
    return AssociatorCandidate(s.scaled_copy(flipped), phi.lam)


def is_even(phi: AssociatorCandidate) -> bool:
    return all(len(w) % 2 == 0 for w, c in phi.series.terms.items() if c)


def phi0_reference(maxdeg=5, ring=None) -> AssociatorCandidate:
    """The even degree-5 reference associator in the lambda=1 family.

    1 + (1/24) w3 + (-w7 - 4 w6 - 4 w8 + 5 w3^2)/5760, zero in odd degrees.
    """
    if maxdeg > 5:
        raise ValueError("reference data stops at degree 5; use extend_associator")
    w3 = w_element(3, maxdeg, ring)
    phi = NCSeries.one(XY, maxdeg, ring)
    phi = phi + Fraction(1, 24) * w3
    if maxdeg >= 4:
        phi4 = (-1 * w_element(7, maxdeg, ring) - 4 * w_element(6, maxdeg, ring)
                - 4 * w_element(8, maxdeg, ring) + 5 * (w3 * w3))
        phi = phi + Fraction(1, 5760) * phi4
    return AssociatorCandidate(phi, 1)


def _degree_words(degree):
    return all_words(degree)


def extend_associator(phi: AssociatorCandidate, parity: bool = False,
                      algebra: HoloAlgebra = None):
    """Extend a candidate satisfying the equations through degree D to D+1.

    Solves the linear system (grouplike + duality + hexagon + pentagon in
    degree D+1) over the Lyndon coordinates of the unknown Lie correction.
    Returns (extended candidate, kernel) where kernel is a basis of the
    homogeneous solution space as series; the particular solution zeroes a
    fixed complement of the pivot coordinates.  With parity=True and D+1
    odd, the zero (even) correction is selected when admissible.
    """
    s = phi.series
    if s.ring is not None:
        raise ValueError("the extension solver works over Q")
    target = s.known_order + 1
    if algebra is None:
        algebra = holonomy_algebra(4, target)
    base = s.truncated(target, known_order=target)

    log_tail = nc_log(base).homogeneous(target)
    lyndon = lyndon_basis(XY, target, maxdeg=target)
    words = _degree_words(target)

    def candidate(coords):
        corr = NCSeries.zero(XY, target)
        for c, (_, elt) in zip(coords, lyndon):
            if c:
                corr = corr + c * elt
        return base + (corr - log_tail)

    def residual(coords):
        cand = candidate(coords)
        vec = []
        swapped = letter_swap(cand, {"x": "y", "y": "x"})
        dual = (swapped * cand).homogeneous(target)
        vec.extend(dual.terms.get(w, Fraction(0)) for w in words)
        hexa = hexagon_product(cand, phi.lam).homogeneous(target)
        vec.extend(hexa.terms.get(w, Fraction(0)) for w in words)
        pent = pentagon_defect(cand, algebra).homogeneous(target)
        vec.extend(pent.terms.get(w, Fraction(0)) for w in algebra.basis_words(target))
        return vec

    m = len(lyndon)
    zero_coords = [Fraction(0)] * m
    r0 = residual(zero_coords)
    columns = []
    for i in range(m):
        coords = list(zero_coords)
        coords[i] = Fraction(1)
        ri = residual(coords)
        columns.append([a - b for a, b in zip(ri, r0)])
    matrix = [[columns[j][i] for j in range(m)] for i in range(len(r0))]
    particular, kernel = solve_affine(matrix, [-v for v in r0])
    kernel_series = []
    for vec in kernel:
        elt = NCSeries.zero(XY, target)
        for c, (_, b) in zip(vec, lyndon):
            if c:
                elt = elt + c * b
        kernel_series.append(elt)
    if (parity and target % 2 == 1 and log_tail.is_zero()
            and all(not v for v in r0)):
        # the even extension: keep the degree-(D+1) component zero
        particular = zero_coords
    return AssociatorCandidate(candidate(particular), phi.lam), kernel_series
