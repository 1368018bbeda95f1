#!/usr/bin/env python3
"""The graded and filtered group laws and their actions on associators.

The graded group (lambda = 0 associators) acts on the right by

    (Phi . f)(x,y) = Phi(f x f^{-1}, y) f,

the filtered group acts on the left through group-like arguments, and the
two actions commute.  Each associator Phi identifies the groups via
iota_Phi, pinned down by Phi . f = iota_Phi(f) . Phi.  Everything is
computed with formal symbols a, b, so the output is the generic element.
"""

from fractions import Fraction

from gtassoc import (SymRing, act_grt, act_gt, c_extract, g_ab, grt_cap_psi, grt_exp,
                     gt_checks, iota, kappa_identification, phi0_reference, psi1, psi2)
from gtassoc.ncseries import nc_log
from gtassoc.wbasis import w_coordinates

print(__doc__)

phi0 = phi0_reference(5)
ring = SymRing(("a", "b"))
a, b = ring.symbol("a"), ring.symbol("b")

print("the graded Lie generators in low degree:")
print("  degree 3:", dict(sorted(w_coordinates(psi1(5), 3).items())), "(psi1 = w5 - w4)")
print("  degree 5:", dict(sorted(w_coordinates(psi2(5), 5).items())), "(psi2)")

print("\nacting on the reference shifts the degree-3 coefficient:")
for z in (Fraction(1), Fraction(-3, 2)):
    twisted = act_grt(phi0, grt_exp(-z * psi1(5)))
    print("  twist by exp(%s (w4 - w5)): c = %s" % (z, c_extract(twisted)))

print("\nthe generic filtered element g_{a,b} = iota(Phi0, Psi_{a,b}):")
gab = g_ab(a, b, phi0)
L = nc_log(gab.series)
print("  log degree 3:", dict(sorted(w_coordinates(L, 3).items())))
print("  log degree 4 vanishes:", L.homogeneous(4).is_zero())
print("  log degree 5:", dict(sorted(w_coordinates(L, 5).items())))

print("\nits membership report (duality, hexagon, 4-strand push):")
for name, ok in gt_checks(gab).items():
    print("  %-10s %s" % (name, "pass" if ok else "FAIL"))

print("\nleft and right twists agree coefficientwise:",
      act_gt(gab, phi0.promote(ring)).series.equal_through(
          act_grt(phi0.promote(ring), grt_cap_psi(a, b, 5, ring)).series))

print("\nmatching the 1+x-embedding projection against the classical")
print("exp-sum form with formal kappa symbols:")
a_val, b_val, ok = kappa_identification(gab.series)
print("  a = %s,  b = %s,  full match: %s" % (a_val, b_val, ok))
