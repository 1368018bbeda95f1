#!/usr/bin/env python3
"""Matrix models of the type-A Iwahori-Hecke algebra at q = e^h.

A model is a family of 2x2 blocks M_d with trace q - q^{-1} and
determinant -1; the braid generator sigma_r acts on standard tableaux by
q on same-column pairs, -q^{-1} on same-line pairs, and by M_d on an
adjacent-transposition pair at axial distance d.  The scalar b_d (the
upper-right block entry) is the model's only freedom.
"""

from fractions import Fraction

from gtassoc import (MatrixModel, Partition, b_semi, hecke_infinitesimal, phat,
                     phi0_reference, q_integer, rep_build, tableaux, unitarity_check)
from gtassoc.hecke import a_entry, delta_eigenvalues_ok

print(__doc__)

phi0 = phi0_reference(5)
model = MatrixModel("semi", phi0)

shape = Partition((3, 2))
print("standard tableaux of the two-column shape [3,2], in order:")
for t in tableaux(shape):
    print("  lines:", t.rows(), " content:", t.content_vector())

rep = rep_build(shape, model)
print("\nbraid relations hold:", rep.braid_relations_ok())
print("delta_r eigenvalues are q^{2 c_r(T)}:", delta_eigenvalues_ok(rep, shape, model))

print("\nthe forced diagonal entry a_d = -q^{-d}/[d]_q, first coefficients:")
for d in (2, 3, 4):
    ad = a_entry(d)
    print("  a_%d = %s + %s h + %s h^2 + ..." % (
        d, ad.coefficient(0), ad.coefficient(1), ad.coefficient(2)))

print("\nthe associator-derived scalar, rescaled by d/(d+1):")
for d in (2, 3, 4, 5, 6):
    s = Fraction(d, d + 1) * b_semi(phi0, d)
    print("  d=%d: 1 + (%s) h^2 + (%s) h^4   (odd terms vanish: even reference)"
          % (d, s.coefficient(2), s.coefficient(4)))

print("\nthe functor route and the block route agree matrix-wise:")
rho = hecke_infinitesimal(shape)
functor = phat(rho, phi0)
print("  phat == rep_build on [3,2]:",
      all(functor.sigma(i).equal_through(rep.sigma(i)) for i in (1, 2, 3, 4)))

print("\nthe closed-form unitary model (formal square roots of d^2-1):")
unitary = MatrixModel("unitary", maxdeg=7)
blk = unitary.block(2)
print("  block at d=2, upper-right entry:", blk.entry(0, 1))
print("  transpose-involution unitarity on [2,2]:",
      unitarity_check(rep_build(Partition((2, 2)), unitary)))
print("  q-integer identity [3][1] = [2]^2 - 1:",
      (q_integer(3) * q_integer(1)).equal_through(
          q_integer(2) * q_integer(2) - q_integer(1)))
