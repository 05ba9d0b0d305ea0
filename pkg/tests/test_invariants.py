import pytest

from matroid_invariants.matroid import (
    Matroid,
    boolean,
    complete_graph,
    empty_matroid,
    equal_tutte_pair,
    mask_of,
    uniform,
    vamos,
)
from matroid_invariants.poly import (
    ONE,
    Poly,
    X,
    ZERO,
    binomial_eulerian,
    eulerian,
    gamma_vector,
)
from matroid_invariants.poset import interval_chibar, lattice_of_flats
from matroid_invariants.invariants import (
    applicable_methods,
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
from matroid_invariants.poset import GradedPoset

CHOW_ENGINES = (chow_chains, chow_char_conv, chow_intrinsic, chow_incidence_inv)
AUG_ENGINES = (
    aug_chow_chains,
    aug_chow_contraction_conv,
    aug_chow_alt_conv,
    aug_chow_mobius_conv,
    aug_chow_intrinsic,
    aug_chow_incidence_inv,
)


# -- chain engines ------------------------------------------------------------------


def test_chow_chains_examples():
    for n in range(6):
        assert chow_chains(boolean(n)) == eulerian(n), n
    assert chow_chains(uniform(3, 4)) == Poly([1, 7, 1])
    assert chow_chains(empty_matroid()) == ONE
    assert chow_chains(Matroid.from_bases(2, [{0}])) == ZERO  # loops


def test_aug_chow_chains_examples():
    for n in range(6):
        assert aug_chow_chains(boolean(n)) == binomial_eulerian(n), n
    assert aug_chow_chains(uniform(3, 4)) == Poly([1, 11, 11, 1])
    assert aug_chow_chains(vamos()) == Poly([1, 78, 234, 78, 1])


def test_chains_complexity_warning(monkeypatch):
    monkeypatch.setenv("MATROID_MAX_FLATS", "10")
    with pytest.warns(RuntimeWarning):
        chow_chains(uniform(3, 5))
    monkeypatch.setenv("MATROID_MAX_FLATS", "10000")
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("error")
        chow_chains(uniform(3, 5))


# -- convolution engines ---------------------------------------------------------------


def test_chow_char_conv_table_values():
    assert chow_char_conv(uniform(5, 6)) == Poly([1, 51, 161, 51, 1])
    assert chow_char_conv(uniform(2, 2)) == Poly([1, 1])
    # any rank-2 loopless matroid has Chow polynomial 1 + x
    assert chow_char_conv(uniform(2, 5)) == Poly([1, 1])
    assert chow_char_conv(complete_graph(3)) == Poly([1, 1])


def test_chow_intrinsic_values():
    assert chow_intrinsic(uniform(4, 5)) == Poly([1, 21, 21, 1])
    assert chow_intrinsic(vamos()) == Poly([1, 70, 70, 1])


def test_chow_incidence_values():
    assert chow_incidence_inv(uniform(3, 5)) == Poly([1, 11, 1])
    assert chow_incidence_inv(boolean(4)) == eulerian(4)
    k4 = complete_graph(4)
    assert chow_incidence_inv(k4) == chow_chains(k4)


def test_aug_chow_convolutions_agree():
    for m in (uniform(4, 5), boolean(3), empty_matroid(), uniform(2, 6)):
        values = {f(m) for f in AUG_ENGINES}
        assert len(values) == 1, m
    assert aug_chow_mobius_conv(uniform(4, 5)) == Poly([1, 26, 66, 26, 1])
    assert aug_chow_contraction_conv(empty_matroid()) == ONE
    assert aug_chow_alt_conv(boolean(3)) == Poly([1, 7, 7, 1])


# -- semismall -------------------------------------------------------------------------


def test_semismall_hand_run_rank2():
    # deleting a point of a triangle leaves a free pair; no proper flat F
    # with F + i a flat contributes, so uH = uH(U_{2,2}) = 1 + x
    assert chow_semismall(uniform(2, 3)) == Poly([1, 1])


def test_semismall_boolean_coloop_route():
    for n in range(7):
        assert chow_semismall(boolean(n)) == eulerian(n), n
        assert aug_chow_semismall(boolean(n)) == binomial_eulerian(n), n


def test_semismall_matches_other_engines():
    for m in (uniform(3, 6), vamos(), complete_graph(4), uniform(2, 4).add_coloop()):
        assert chow_semismall(m) == chow_char_conv(m), m
        assert aug_chow_semismall(m) == aug_chow_contraction_conv(m), m


# -- uniform closed forms -----------------------------------------------------------------


def test_uniform_table_values():
    assert chow_uniform(3, 5) == Poly([1, 11, 1])
    assert chow_uniform(7, 8) == Poly([1, 239, 3361, 7631, 3361, 239, 1])
    assert aug_chow_uniform(7, 9) == Poly([1, 466, 10204, 40444, 40444, 10204, 466, 1])
    with pytest.raises(ValueError):
        chow_uniform(3, 2)


def test_uniform_inverse_forms_agree():
    for n in range(9):
        for k in range(n + 1):
            assert chow_uniform_inverse(k, n) == chow_uniform(k, n), (k, n)
            assert aug_chow_uniform_inverse(k, n) == aug_chow_uniform(k, n), (k, n)
    assert chow_uniform_inverse(2, 7) == Poly([1, 1])


def test_uniform_coloop_closed_forms():
    assert chow_uniform_coloop(2, 3) == Poly([1, 5, 1])
    assert aug_chow_uniform_coloop(3, 4) == Poly([1, 23, 55, 23, 1])
    assert chow_uniform_coloop(1, 1) == eulerian(2)
    for k, n in [(1, 2), (2, 3), (3, 4), (2, 4), (3, 5)]:
        m = uniform(k, n).add_coloop()
        assert chow_uniform_coloop(k, n) == chow_chains(m), (k, n)
        assert aug_chow_uniform_coloop(k, n) == aug_chow_chains(m), (k, n)


def test_chibar_uniform_closed_form():
    from matroid_invariants.poset import reduced_char_poly

    for n in range(1, 8):
        for k in range(1, n + 1):
            assert chibar_uniform(k, n) == reduced_char_poly(uniform(k, n)), (k, n)


# -- paving ---------------------------------------------------------------------------------


def test_paving_formula_examples():
    assert chow_paving(4, 8, {4: 5}) == Poly([1, 70, 70, 1])
    assert chow_paving(3, 6, {3: 4}) == Poly([1, 8, 1])
    assert chow_paving(3, 6, {}) == chow_uniform(3, 6)
    assert aug_chow_paving(4, 8, {4: 5}) == Poly([1, 78, 234, 78, 1])
    with pytest.raises(ValueError):
        chow_paving(3, 6, {3: -1})
    with pytest.raises(ValueError):
        chow_paving(3, 6, {2: 1})


def test_chow_of_paving_uses_counts():
    assert chow_of_paving(vamos()) == Poly([1, 70, 70, 1])
    assert aug_chow_of_paving(vamos()) == Poly([1, 78, 234, 78, 1])
    assert chow_of_paving(complete_graph(4)) == Poly([1, 8, 1])
    # U_{2,4} plus a coloop is paving with one stressed hyperplane of size 4
    m = uniform(2, 4).add_coloop()
    assert m.is_paving() and m.stressed_hyperplane_counts() == {4: 1}
    assert chow_of_paving(m) == chow_char_conv(m)
    with pytest.raises(ValueError):
        chow_of_paving(complete_graph(4).add_coloop())  # triangles beat the rank


# -- braid ----------------------------------------------------------------------------------


def test_chow_braid_against_lattice():
    assert chow_braid(2) == ONE
    for n in range(2, 7):
        assert chow_braid(n) == chow_chains(complete_graph(n)), n
    with pytest.raises(ValueError):
        chow_braid(0)


# -- Kazhdan-Lusztig and Z ---------------------------------------------------------------------


def test_kl_z_base_values():
    for n in range(7):
        assert kl_poly(boolean(n)) == ONE
        assert z_poly(boolean(n)) == (ONE + X) ** n
    assert kl_poly(empty_matroid()) == ONE
    assert z_poly(empty_matroid()) == ONE
    assert kl_poly(uniform(2, 3)) == ONE
    assert z_poly(uniform(2, 3)) == Poly([1, 3, 1])


def test_kl_loops_convention():
    loopy = Matroid.from_bases(2, [{0}])
    assert kl_poly(loopy) == ZERO
    assert z_poly(loopy) == Poly([1, 1])  # Z of the loop-free part U_{1,1}


def test_kl_uniform_desk_scale():
    assert kl_uniform(15, 16) == Poly([1, 104, 2640, 23100, 76440, 91728, 32032, 1430])
    assert kl_uniform(6, 6) == ONE
    assert kl_uniform(2, 4) == kl_poly(uniform(2, 4), "epw")


def test_kl_methods_agree():
    for k, n in [(2, 4), (3, 5), (3, 6), (4, 6), (2, 3)]:
        m = uniform(k, n)
        vals = {
            kl_poly(m, "epw"),
            kl_poly(m, "intrinsic"),
            kl_poly(m, "uniform_fast"),
            kl_bv_deletion(m),
        }
        assert len(vals) == 1, (k, n)
        assert z_poly(m, "conv_def") == z_bv_deletion(m) == z_uniform(k, n), (k, n)
    with pytest.raises(ValueError):
        kl_poly(uniform(2, 4), "unknown")
    with pytest.raises(ValueError):
        kl_poly(vamos(), "uniform_fast")


def test_kl_bv_on_non_uniform():
    for m in (vamos(), complete_graph(4), equal_tutte_pair()[0]):
        assert kl_bv_deletion(m) == kl_poly(m, "epw"), m
        assert z_bv_deletion(m) == z_poly(m, "conv_def"), m


def test_tau():
    assert tau(uniform(2, 3)) == 0  # even rank
    assert tau(uniform(1, 2)) == 1
    assert tau(uniform(3, 6)) == kl_poly(uniform(3, 6)).coeff(1)
    assert tau(boolean(5)) == 0


def test_kl_degree_bound(small_corpus, store):
    for name, m, _ in small_corpus:
        if m.rank == 0:
            continue
        p = kl_poly(m, "epw", store.lattice(m))
        assert 2 * p.degree < m.rank, name


# -- certification ------------------------------------------------------------------------------


def test_certify_gamma_pass():
    rep = certify_gamma(vamos())
    assert rep.ok
    by_name = {e.name: e.gamma for e in rep.entries}
    assert by_name["chow"] == Poly([1, 67])
    rep = certify_gamma(boolean(4))
    assert rep.ok
    assert {e.name: e.gamma for e in rep.entries}["z"] == ONE


def test_certify_gamma_poset_counterexample():
    p = GradedPoset(
        [0, 1, 2, 2, 3, 3, 4, 4, 5],
        [[0, 1], [1, 2], [1, 3], [2, 4], [3, 5], [4, 6], [5, 7], [6, 8], [7, 8]],
    )
    rep = certify_gamma_poset(p)
    assert not rep.ok
    chow_entry = next(e for e in rep.entries if e.name == "chow")
    assert chow_entry.gamma == Poly([1, 3, -1])


def test_certify_dominance():
    assert certify_dominance(complete_graph(4)).ok
    assert certify_dominance(uniform(3, 6)).ok  # equality case
    assert certify_dominance(vamos()).ok
    assert chow_char_conv(complete_graph(4)) == Poly([1, 8, 1])
    assert chow_uniform(3, 6) == Poly([1, 16, 1])


def test_hrs_identity():
    hrs_identity(3, 5)
    hrs_identity(4, 8)
    rep = hrs_identity(1, 6)
    assert rep.h_poly == ONE
    rep = hrs_identity(5, 5)  # barycentric subdivision case
    assert rep.h_poly == eulerian(5)
    with pytest.raises(ValueError):
        hrs_identity(0, 4)


# -- loop conventions and simplification -----------------------------------------------------------


def test_loop_conventions_all_engines():
    loopy = uniform(0, 3)
    for f in CHOW_ENGINES:
        assert f(loopy) == ZERO, f.__name__
    assert chow_semismall(loopy) == ZERO
    for f in AUG_ENGINES:
        assert f(loopy) == ONE, f.__name__
    assert aug_chow_semismall(loopy) == ONE
    loopy2 = uniform(0, 2).add_coloop()
    for f in AUG_ENGINES:
        assert f(loopy2) == Poly([1, 1]), f.__name__


def test_simplification_invariance():
    # uH and H only see the lattice of flats
    m = Matroid.from_bases(4, [{0, 2}, {0, 3}, {1, 2}, {1, 3}])  # two parallel pairs
    s = m.simplify()
    assert s == boolean(2)
    assert chow_char_conv(m) == chow_char_conv(s)
    assert aug_chow_contraction_conv(m) == aug_chow_contraction_conv(s)


# -- identity suites ------------------------------------------------------------------------------


def test_h_from_uh_identities(small_corpus, store):
    for name, m, _ in small_corpus:
        lat = store.lattice(m)
        h = aug_chow_contraction_conv(m, lat)
        assert h == aug_chow_alt_conv(m, lat), name
        # evaluation identity H(1) - uH(1) = sum over nonempty flats of uH(M/F)(1)
        from matroid_invariants.invariants import _chow_upper_table

        table = _chow_upper_table(lat)
        uh = table[lat.bottom]
        total = sum(table[f](1) for f in range(lat.size) if f != lat.bottom)
        assert h(1) - uh(1) == total, name


def test_z_convolution_identity(small_corpus, store):
    from matroid_invariants.invariants import _kl_upper_table

    for name, m, _ in small_corpus:
        lat = store.lattice(m)
        table = _kl_upper_table(lat)
        acc = ZERO
        for f in range(lat.size):
            acc = acc + table[f].shift(lat.ranks[f])
        assert acc == z_poly(m, "conv_def", lat), name


def test_kl_multiplicative_uh_not(small_corpus, store):
    # P is multiplicative over direct sums; uH is not
    pairs = [
        (uniform(1, 1), uniform(1, 2)),
        (uniform(2, 3), uniform(1, 2)),
        (uniform(2, 4), boolean(2)),
        (complete_graph(3), uniform(2, 3)),
    ]
    for a, b in pairs:
        s = a.direct_sum(b)
        assert kl_poly(s) == kl_poly(a) * kl_poly(b), (a, b)
    witness = uniform(1, 1).direct_sum(uniform(1, 2))
    assert chow_char_conv(witness) != chow_char_conv(uniform(1, 1)) * chow_char_conv(
        uniform(1, 2)
    )


def test_tau_nonnegative(small_corpus, store):
    for name, m, _ in small_corpus:
        assert tau(m, store.lattice(m)) >= 0, name


# -- reports ---------------------------------------------------------------------------------------


def test_invariant_report_methods_and_agreement():
    r = invariant_report(uniform(4, 8), "chow")
    assert r.agree
    assert set(r.results) == {
        "chains",
        "char_conv",
        "intrinsic",
        "incidence_inv",
        "semismall",
        "uniform_closed",
        "paving",
    }
    r = invariant_report(complete_graph(4), "chow", braid_n=4)
    assert r.agree and "braid_closed" in r.results
    r = invariant_report(uniform(3, 4).add_coloop(), "augchow")
    assert r.agree and "coloop_closed" in r.results
    r = invariant_report(complete_graph(5), "kl")
    assert r.agree and "bv_deletion" not in r.results  # 10 elements > limit
    data = r.to_json()
    assert data["schema"] == "1" and data["agree"] is True


def test_applicable_methods_respects_kind():
    with pytest.raises(ValueError):
        applicable_methods(uniform(2, 4), "nope")
    with pytest.raises(ValueError):
        invariant_report(uniform(2, 4), "chow", "epw")


def test_degree_and_symmetry_contracts(small_corpus, store):
    from matroid_invariants.poly import is_palindromic

    for name, m, _ in small_corpus:
        k = m.rank
        if k == 0:
            continue
        lat = store.lattice(m)
        uh = chow_char_conv(m, lat)
        h = aug_chow_contraction_conv(m, lat)
        z = z_poly(m, "conv_def", lat)
        p = kl_poly(m, "epw", lat)
        assert uh.degree == k - 1 and is_palindromic(uh, k - 1), name
        assert h.degree == k and is_palindromic(h, k), name
        assert z.degree == k and is_palindromic(z, k), name
        assert 2 * p.degree < k, name
        assert uh.coeff(0) == h.coeff(0) == z.coeff(0) == p.coeff(0) == 1, name


def test_invariant_report_timeout():
    with pytest.raises(TimeoutError):
        invariant_report(uniform(3, 6), "chow", deadline=0.0)


def test_interval_chibar_is_minor_chibar(store):
    from matroid_invariants.poset import reduced_char_poly

    m = uniform(3, 6)
    lat = store.lattice(m)
    for fid in range(lat.size):
        fmask = lat.flats[fid]
        assert interval_chibar(lat, lat.bottom, fid) == reduced_char_poly(
            m.restrict(fmask)
        ), fid
        assert interval_chibar(lat, fid, lat.top) == reduced_char_poly(
            m.contract(fmask)
        ), fid
