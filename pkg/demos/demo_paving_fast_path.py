"""The paving fast path.

For a paving matroid the Chow and augmented Chow polynomials only depend on
the rank, the size, and the multiset of sizes of stressed hyperplanes; the
closed form needs a handful of uniform evaluations.  The Vamos matroid
(rank 4 on 8 elements, 5 stressed hyperplanes of size 4) is the classic
example; sparse paving sweeps parametrized by the number of
circuit-hyperplanes come for free.
"""

from matroid_invariants import (
    aug_chow_chains,
    aug_chow_paving,
    chow_chains,
    chow_paving,
    gamma_vector,
    real_rooted,
    vamos,
)

v = vamos()
counts = v.stressed_hyperplane_counts()
print("Vamos matroid: rank %d on %d elements" % (v.rank, v.n))
print("stressed hyperplane counts:", counts)

uh = chow_paving(v.rank, v.n, counts)
h = aug_chow_paving(v.rank, v.n, counts)
print("uH via the paving formula: ", uh)
print("uH via chain enumeration:  ", chow_chains(v))
print("H via the paving formula:  ", h)
print("H via chain enumeration:   ", aug_chow_chains(v))
assert uh == chow_chains(v) and h == aug_chow_chains(v)

print("\nsweep over sparse paving matroids with n=10, k=5 and lambda circuit-")
print("hyperplanes (the matroid itself is never materialized):")
for lam in (0, 5, 10, 15, 20, 25):
    uh = chow_paving(5, 10, {5: lam})
    g = gamma_vector(uh, 4)
    print(
        "  lambda=%2d  uH=%-34s gamma=%-16s real-rooted=%s"
        % (lam, uh, g, real_rooted(uh))
    )
