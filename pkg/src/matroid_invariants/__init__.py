"""Exact computation and certification of Chow polynomials, augmented Chow
polynomials, Kazhdan-Lusztig polynomials and Z-polynomials of matroids."""

from .matroid import (
    BivariatePoly,
    Matroid,
    MatroidError,
    boolean,
    complete_graph,
    direct_sum,
    empty_matroid,
    equal_tutte_pair,
    mask_of,
    set_of,
    tutte,
    uniform,
    vamos,
)
from .poly import (
    ONE,
    Poly,
    X,
    ZERO,
    NotPalindromic,
    NonUnitConstant,
    binomial_eulerian,
    derangement,
    eulerian,
    gamma_expand,
    gamma_vector,
    is_log_concave,
    is_nonneg,
    is_palindromic,
    is_unimodal,
    ones,
    palindromic_decompose,
    series_inverse_prefix,
    shape_checks,
    stirling2,
)
from .poset import (
    FlatsLattice,
    GradedPoset,
    bergman_f_h,
    char_poly,
    interval_char_poly,
    interval_chibar,
    kls_H_general,
    kls_P_general,
    kls_uH_general,
    kls_Z_general,
    lattice_of_flats,
    mobius,
    reduced_char_poly,
    whitney_numbers,
)
from .realroots import (
    RatPoly,
    count_distinct_real_roots,
    interlaces,
    isolate_real_roots,
    real_rooted,
)
from .invariants import (
    AUGCHOW_METHODS,
    CHOW_METHODS,
    KL_METHODS,
    Z_METHODS,
    aug_chow_alt_conv,
    aug_chow_chains,
    aug_chow_contraction_conv,
    aug_chow_incidence_inv,
    aug_chow_intrinsic,
    aug_chow_mobius_conv,
    aug_chow_of_paving,
    aug_chow_paving,
    aug_chow_semismall,
    aug_chow_uniform,
    aug_chow_uniform_coloop,
    aug_chow_uniform_inverse,
    certify_dominance,
    certify_gamma,
    certify_gamma_poset,
    chibar_uniform,
    chow_braid,
    chow_chains,
    chow_char_conv,
    chow_incidence_inv,
    chow_intrinsic,
    chow_of_paving,
    chow_paving,
    chow_semismall,
    chow_uniform,
    chow_uniform_coloop,
    chow_uniform_inverse,
    hrs_identity,
    invariant_report,
    kl_bv_deletion,
    kl_poly,
    kl_uniform,
    tau,
    z_bv_deletion,
    z_poly,
    z_uniform,
)
from .hz import hz_poly, hz_recursion_check, hz_uniform, search_s_vectors
from .equivariant import (
    GradedVirtualRep,
    VirtualRep,
    eq_kl_uniform,
    eq_z_uniform,
    gamma_decompose_eq,
    pieri_induce_trivial,
    restrict_once,
    restrict_to,
    specht_dim,
)

__version__ = "0.1.0"
