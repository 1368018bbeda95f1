"""Exact symbolic expansions of the Gamma-function combinations.

Everything lives in the variable hb = h/(2 i pi) over Q[gamma, zeta2..zetaK],
where log Gamma(1+z) = -gamma z + sum_{k>=2} (-1)^k zeta_k z^k / k.  The
building blocks are

    Gamma3(a,b,c) = Gamma(1-2a) Gamma(1+2b) / (Gamma(1+b-a+delta) Gamma(1+b-a-delta)),
    F(a,b) = Gamma3(hb a, hb b, -2 hb^2),      Z(a,b) = F(a,b) F(b,-a),
    J(x) = Gamma(1+x)/Gamma(1-x),  I(x) = Gamma(1+x) Gamma(1-x),
    Jt(m) = J(2 m hb),             It(m) = I(2 m hb),

with delta = hb sqrt(a^2+b^2-4), a perfect square for every pair used here
(both sign choices give the same Gamma3 since the denominator is symmetric).
The two scalar families are

    b_kz(d, +) = ((d+1)/2d) (q+q^{-1})/2 (Z(d,2) + Z(d,-2))      (KZ)
    b_kz(d, -) = ((d+1)/2d) (q+q^{-1})/2 (Z(-d,-2) + Z(-d,2))    (conjugate)
    b_even_ref(d) = ((d+1)/d) It(d)/sqrt(It(d+1) It(d-1))        (even reference)
    h_tilde(d) = sqrt(Jt(d-1) Jt(d+1))/Jt(d),

the cosine factor being It(1)/It(2).  The ratio identity reads

    b_kz(d,+)/b_kz(d,-) = exp(-2 sum_n zeta_{2n+1}/(2n+1) 2^{2n+1} hb^{2n+1} Q_n(d)),
    Q_n(d) = (d+1)^{2n+1} + (d-1)^{2n+1} - 2 d^{2n+1},

and h_tilde(d), its square root, satisfies b_kz(d,+-)/b_even_ref(d) =
h_tilde(d)^{+-1}.  specialize_even sends a purely even series to Q[[h]] by
the Bernoulli values zeta(2k) = (-1)^{k+1} B_2k (2 pi)^{2k} / (2 (2k)!),
under which the powers of 2 i pi cancel rationally.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .ncseries import NCSeries
from .scalar import ScalarSeries
from .symcoef import SymRing
from .wbasis import XY, w_element

DEFAULT_HBAR_ORDER = 8
DEFAULT_ZETA_MAX = 9
HBAR = "hbar"


def kz_ring(zeta_max=DEFAULT_ZETA_MAX) -> SymRing:
    return SymRing(("gamma",) + tuple("zeta%d" % k for k in range(2, zeta_max + 1)))


def _zeta(ring, k):
    return ring.symbol("zeta%d" % k)


def hbar_series(ring, maxdeg=DEFAULT_HBAR_ORDER, coeffs=None) -> ScalarSeries:
    return ScalarSeries(maxdeg, coeffs or {}, ring, var=HBAR)


def loggamma(z: ScalarSeries) -> ScalarSeries:
    """log Gamma(1+z) = -gamma z + sum_{k>=2} (-1)^k zeta_k z^k / k."""
    if z.order() is None:
        return ScalarSeries.zero(z.maxdeg, z.ring, z.known_order, z.var)
    if z.order() < 1:
        raise ValueError("loggamma needs a series of positive order")
    ring = z.ring
    acc = (-ring.symbol("gamma")) * z
    power = z
    zeta_max = max(k for k in range(2, 100) if "zeta%d" % k in ring.index)
    for k in range(2, z.known_order + 1):
        power = power * z
        if k > zeta_max:
            raise ValueError("needs zeta_%d: raise the ring's zeta bound" % k)
        acc = acc + (_zeta(ring, k) * Fraction((-1) ** k, k)) * power
    return acc


def _loggamma_multiple(ring, m, maxdeg):
    """log Gamma(1 + m hb) directly from the defining expansion."""
    z = hbar_series(ring, maxdeg, {1: ring.const(m)})
    return loggamma(z)


def log_j_tilde(ring, m, maxdeg=DEFAULT_HBAR_ORDER) -> ScalarSeries:
    """log J(2 m hb); only gamma and odd zetas survive the cancellation."""
    return _loggamma_multiple(ring, 2 * m, maxdeg) - _loggamma_multiple(ring, -2 * m, maxdeg)


def log_i_tilde(ring, m, maxdeg=DEFAULT_HBAR_ORDER) -> ScalarSeries:
    """log I(2 m hb); only even zetas survive, no gamma."""
    return _loggamma_multiple(ring, 2 * m, maxdeg) + _loggamma_multiple(ring, -2 * m, maxdeg)


def gamma3_F(a, b, ring=None, maxdeg=DEFAULT_HBAR_ORDER) -> ScalarSeries:
    """F(a,b) = Gamma3(hb a, hb b, -2 hb^2) for integers a, b.

    Needs a^2 + b^2 - 4 to be a perfect square; the two square-root branches
    agree because the denominator pair is symmetric under delta -> -delta.
    """
    ring = kz_ring() if ring is None else ring
    disc = a * a + b * b - 4
    s = math.isqrt(disc) if disc >= 0 else -1
    if s < 0 or s * s != disc:
        raise ValueError("a^2 + b^2 - 4 = %d is not a perfect square" % disc)
    log_f = (_loggamma_multiple(ring, -2 * a, maxdeg)
             + _loggamma_multiple(ring, 2 * b, maxdeg)
             - _loggamma_multiple(ring, b - a + s, maxdeg)
             - _loggamma_multiple(ring, b - a - s, maxdeg))
    return log_f.exp()


def z_pair(a, b, ring=None, maxdeg=DEFAULT_HBAR_ORDER) -> ScalarSeries:
    """Z(a,b) = F(a,b) F(b,-a)."""
    ring = kz_ring() if ring is None else ring
    return gamma3_F(a, b, ring, maxdeg) * gamma3_F(b, -a, ring, maxdeg)


def cos_factor(ring, maxdeg=DEFAULT_HBAR_ORDER) -> ScalarSeries:
    """(q + q^{-1})/2 expressed as It(1)/It(2)."""
    return (log_i_tilde(ring, 1, maxdeg) - log_i_tilde(ring, 2, maxdeg)).exp()


def b_kz(d, sign, ring=None, maxdeg=DEFAULT_HBAR_ORDER) -> ScalarSeries:
    """The KZ-side scalars; sign +1 for the original, -1 for the conjugate."""
    ring = kz_ring() if ring is None else ring
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if sign == 1:
        zsum = z_pair(d, 2, ring, maxdeg) + z_pair(d, -2, ring, maxdeg)
    else:
        zsum = z_pair(-d, -2, ring, maxdeg) + z_pair(-d, 2, ring, maxdeg)
    pref = ScalarSeries.const(Fraction(d + 1, 2 * d), maxdeg, ring, var=HBAR)
    return pref * cos_factor(ring, maxdeg) * zsum


def b_even_ref(d, ring=None, maxdeg=DEFAULT_HBAR_ORDER) -> ScalarSeries:
    """((d+1)/d) It(d)/sqrt(It(d+1) It(d-1)) for the even reference model."""
    ring = kz_ring() if ring is None else ring
    exponent = (log_i_tilde(ring, d, maxdeg)
                - Fraction(1, 2) * (log_i_tilde(ring, d + 1, maxdeg)
                                    + log_i_tilde(ring, d - 1, maxdeg)))
    return ScalarSeries.const(Fraction(d + 1, d), maxdeg, ring, var=HBAR) * exponent.exp()


def h_tilde(d, ring=None, maxdeg=DEFAULT_HBAR_ORDER) -> ScalarSeries:
    """sqrt(Jt(d-1) Jt(d+1))/Jt(d)."""
    ring = kz_ring() if ring is None else ring
    exponent = (Fraction(1, 2) * (log_j_tilde(ring, d - 1, maxdeg)
                                  + log_j_tilde(ring, d + 1, maxdeg))
                - log_j_tilde(ring, d, maxdeg))
    return exponent.exp()


def q_n(n, d):
    return (d + 1) ** (2 * n + 1) + (d - 1) ** (2 * n + 1) - 2 * d ** (2 * n + 1)


def ratio_formula_rhs(d, ring=None, maxdeg=DEFAULT_HBAR_ORDER) -> ScalarSeries:
    """exp(-2 sum_n zeta_{2n+1}/(2n+1) 2^{2n+1} hb^{2n+1} Q_n(d))."""
    ring = kz_ring() if ring is None else ring
    coeffs = {}
    n = 1
    while 2 * n + 1 <= maxdeg:
        k = 2 * n + 1
        coeffs[k] = _zeta(ring, k) * Fraction(-2 * 2 ** k * q_n(n, d), k)
        n += 1
    return ScalarSeries(maxdeg, coeffs, ring, var=HBAR).exp()


BERNOULLI = {2: Fraction(1, 6), 4: Fraction(-1, 30), 6: Fraction(1, 42),
             8: Fraction(-1, 30), 10: Fraction(5, 66), 12: Fraction(-691, 2730)}


def euler_zeta_factor(k):
    """zeta(2k) / (2 pi)^{2k} = (-1)^{k+1} B_{2k} / (2 (2k)!)."""
    return Fraction((-1) ** (k + 1)) * BERNOULLI[2 * k] / (2 * math.factorial(2 * k))


def specialize_even(s: ScalarSeries, maxdeg=None) -> ScalarSeries:
    """Send a purely even series over the zeta ring to Q[[h]].

    Every monomial must carry only even zetas with total weight equal to its
    hb-power (so the transcendental factors cancel); gamma or odd zetas, or
    a weight mismatch, raise.
    """
    ring = s.ring
    maxdeg = s.maxdeg if maxdeg is None else maxdeg
    out = {}
    for power, coeff in s.coeffs.items():
        if power % 2:
            raise ValueError("odd hb-power %d cannot specialize" % power)
        total = Fraction(0)
        for exps, c in coeff.terms.items():
            weight = 0
            factor = Fraction(1)
            for i, e in enumerate(exps):
                if not e:
                    continue
                name = ring.symbols[i]
                if not name.startswith("zeta"):
                    raise ValueError("symbol %s survives specialization" % name)
                k = int(name[4:])
                if k % 2:
                    raise ValueError("odd zeta_%d survives specialization" % k)
                weight += k * e
                factor *= euler_zeta_factor(k // 2) ** e
            if weight != power:
                raise ValueError("zeta weight %d differs from hb-power %d" % (weight, power))
            total += c * factor * Fraction((-1) ** (power // 2))
        if total:
            out[power] = total
    return ScalarSeries(maxdeg, out, None, s.known_order, "h")


def phi_kz_symbolic(maxdeg=5):
    """The degree-5 truncation of the KZ associator over formal symbols
    zt3 = zeta(3)/(2 i pi)^3 and zt5 = zeta(5)/(2 i pi)^5:

        1 + w3/24 + zt3 psi1 + phi4 + (1/2) zt5 psi2 - (1/24) zt3 (w10 + w11 - w3 psi1),

    with phi4 = (-w7 - 4 w6 - 4 w8 + 5 w3^2)/5760.  The sign of the w3 psi1
    term is the one forced by the membership equations and by evenness of
    the twisted reference; it is the unique degree-5 completion of the lower
    data in the lambda=1 family with these zt3/zt5 coordinates.
    """
    from .associators import AssociatorCandidate
    from .grtgt import psi1, psi2
    ring = SymRing(("zt3", "zt5"))
    zt3, zt5 = ring.symbol("zt3"), ring.symbol("zt5")
    w3 = w_element(3, maxdeg, ring)
    series = NCSeries.one(XY, maxdeg, ring) + Fraction(1, 24) * w3
    if maxdeg >= 4:
        phi4 = (-1 * w_element(7, maxdeg, ring) - 4 * w_element(6, maxdeg, ring)
                - 4 * w_element(8, maxdeg, ring) + 5 * (w3 * w3))
        series = series + Fraction(1, 5760) * phi4
    if maxdeg >= 3:
        series = series + zt3 * psi1(maxdeg, ring)
    if maxdeg >= 5:
        series = series + (zt5 * Fraction(1, 2)) * psi2(maxdeg, ring)
        corr = w_element(10, maxdeg, ring) + w_element(11, maxdeg, ring) - w3 * psi1(maxdeg, ring)
        series = series - (zt3 * Fraction(1, 24)) * corr
    return AssociatorCandidate(series, 1)
