"""Kazhdan-Lusztig polynomials, Z-polynomials, and their equivariant
refinements for uniform matroids.

The rank-aggregated recursion computes P(U_{k,n}) without touching a
lattice, so coefficients like 91728 at (15, 16) come out instantly.  The
equivariant layer refines each coefficient into symmetric-group
irreducibles; taking dimensions recovers the scalar polynomials, while the
Gamma-decomposition shows that equivariant gamma-positivity fails already
for the free matroid on two elements.
"""

from matroid_invariants import (
    eq_kl_uniform,
    eq_z_uniform,
    gamma_decompose_eq,
    kl_poly,
    kl_uniform,
    uniform,
    z_poly,
    z_uniform,
)

print("P(U_15,16) =", kl_uniform(15, 16))
print("Z(U_4,6)   =", z_uniform(4, 6))

m = uniform(3, 6)
print("\ncross-checking engines on U_3,6:")
print("  P by characteristic recursion:", kl_poly(m, "epw"))
print("  P by intrinsic decomposition: ", kl_poly(m, "intrinsic"))
print("  P by deletion recursion:      ", kl_poly(m, "bv_deletion"))
print("  Z by convolution:             ", z_poly(m, "conv_def"))
print("  Z by deletion recursion:      ", z_poly(m, "bv_deletion"))

print("\nequivariant refinement of P(U_5,8):")
p = eq_kl_uniform(5, 8)
for d in range(p.degree + 1):
    print("  x^%d: %s" % (d, p.coeff(d)))
print("  dimensions:", p.dim_poly(), "=", kl_uniform(5, 8))

print("\nequivariant Z of the free matroid on two elements:")
z = eq_z_uniform(2, 2)
for d in range(3):
    print("  x^%d: %s" % (d, z.coeff(d)))
gammas = gamma_decompose_eq(z, 2)
for i, g in enumerate(gammas):
    print("  Gamma_%d = %s (%s)" % (i, g, "honest" if g.is_honest() else "virtual"))
print("so the scalar gamma-positivity of Z does not lift equivariantly.")
