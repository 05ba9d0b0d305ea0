import json
from fractions import Fraction
from math import comb

import pytest

from matroid_invariants.matroid import (
    Matroid,
    boolean,
    complete_graph,
    empty_matroid,
    uniform,
    vamos,
)
from matroid_invariants.poly import ONE, Poly, X, ZERO, eulerian, ones
from matroid_invariants.poset import (
    FlatsLattice,
    GradedPoset,
    bergman_f_h,
    char_poly,
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

COUNTEREXAMPLE = {
    "rank": [0, 1, 2, 2, 3, 3, 4, 4, 5],
    "covers": [[0, 1], [1, 2], [1, 3], [2, 4], [3, 5], [4, 6], [5, 7], [6, 8], [7, 8]],
}


def brute_mobius_matrix(p):
    """Independent oracle: invert the zeta matrix over the rationals."""
    m = p.size
    zeta = [[Fraction(1 if p.leq(i, j) else 0) for j in range(m)] for i in range(m)]
    inv = [[Fraction(1 if i == j else 0) for j in range(m)] for i in range(m)]
    for col in range(m):
        pivot = next(r for r in range(col, m) if zeta[r][col])
        zeta[col], zeta[pivot] = zeta[pivot], zeta[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = zeta[col][col]
        zeta[col] = [v / scale for v in zeta[col]]
        inv[col] = [v / scale for v in inv[col]]
        for r in range(m):
            if r != col and zeta[r][col]:
                f = zeta[r][col]
                zeta[r] = [a - f * b for a, b in zip(zeta[r], zeta[col])]
                inv[r] = [a - f * b for a, b in zip(inv[r], inv[col])]
    return inv


def chain_poset(length):
    return GradedPoset(list(range(length + 1)), [[i, i + 1] for i in range(length)])


def brute_chow_on_poset(ranks, leq_pairs, top):
    """Independent recursion: rebuild every upper interval as its own poset
    and recurse, with no shared tables."""
    from matroid_invariants.poly import palindromic_decompose

    def upper(z):
        return sorted(j for j in range(len(ranks)) if (z, j) in leq_pairs and j != z)

    def uh(z):
        if z == top:
            return ONE
        s = ZERO
        for f in upper(z):
            s = s + uh(f).shift(ranks[f] - ranks[z])
        return -palindromic_decompose(s)[1]

    return uh


# -- lattice construction ----------------------------------------------------------


def test_lattice_sizes():
    assert lattice_of_flats(uniform(4, 8)).size == 94
    assert lattice_of_flats(boolean(5)).size == 32
    assert lattice_of_flats(complete_graph(4)).size == 15  # Bell(4)
    assert lattice_of_flats(complete_graph(6)).size == 203  # Bell(6)


def test_lattice_requires_loopless():
    with pytest.raises(ValueError):
        lattice_of_flats(Matroid.from_bases(2, [{0}]))


def test_lattice_cover_ranks():
    lat = lattice_of_flats(uniform(3, 5))
    for i, j in lat.covers():
        assert lat.ranks[j] == lat.ranks[i] + 1


# -- Moebius -----------------------------------------------------------------------


def test_mobius_values():
    lat = lattice_of_flats(complete_graph(4))
    assert mobius(lat, lat.bottom, lat.bottom) == 1
    atom = lat.by_rank[1][0]
    assert mobius(lat, lat.bottom, atom) == -1
    assert mobius(lat, lat.bottom, lat.top) == -6
    assert mobius(lat, atom, lat.bottom) == 0  # incomparable direction


def test_mobius_against_zeta_inverse():
    for m in (uniform(2, 4), complete_graph(4), boolean(3)):
        lat = lattice_of_flats(m)
        inv = brute_mobius_matrix(lat)
        for i in range(lat.size):
            for j in range(lat.size):
                assert mobius(lat, i, j) == inv[i][j], (m, i, j)


def test_mobius_alternates_on_geometric_lattices(small_corpus, store):
    for name, m, _ in small_corpus:
        lat = store.lattice(m)
        for fid in range(lat.size):
            mu = mobius(lat, lat.bottom, fid)
            r = lat.ranks[fid]
            assert mu != 0 and (mu > 0) == (r % 2 == 0), (name, fid)


# -- characteristic polynomials -------------------------------------------------------


def test_reduced_char_poly_uniform_closed_form():
    for n in range(1, 8):
        for k in range(1, n + 1):
            expect = Poly(
                [(-1) ** j * comb(n - 1, j) for j in range(k)][::-1]
            )
            assert reduced_char_poly(uniform(k, n)) == expect, (k, n)


def test_reduced_char_poly_braid_product():
    for n in (3, 4, 5, 6):
        expect = ONE
        for c in range(2, n):
            expect = expect * (X - c)
        assert reduced_char_poly(complete_graph(n)) == expect, n


def test_char_poly_conventions():
    assert char_poly(Matroid.from_bases(2, [{0}])) == ZERO  # loops
    assert char_poly(empty_matroid()) == ONE
    assert reduced_char_poly(empty_matroid()) == Poly([-1])
    for m in (uniform(2, 4), boolean(3), complete_graph(4)):
        assert char_poly(m)(1) == 0


def test_contraction_telescoping(small_corpus, store):
    # sum over proper flats F of chibar of [F, top] is 1 + x + ... + x^(rk-1)
    for name, m, _ in small_corpus:
        if m.n == 0:
            continue
        lat = store.lattice(m)
        acc = ZERO
        for i in range(lat.size):
            if i != lat.top:
                acc = acc + interval_chibar(lat, i, lat.top)
        assert acc == ones(m.rank), name


def test_whitney_numbers():
    assert whitney_numbers(uniform(3, 5)) == Poly([1, 5, 10, 1])
    assert whitney_numbers(boolean(4)) == (ONE + X) ** 4
    assert whitney_numbers(complete_graph(4)) == Poly([1, 6, 7, 1])


def test_whitney_top_heavy(small_corpus, store):
    for name, m, _ in small_corpus:
        w = whitney_numbers(m, store.lattice(m))
        k = m.rank
        for i in range(k + 1):
            for j in range(i, k - i + 1):
                assert w.coeff(i) <= w.coeff(j), (name, i, j)


# -- Bergman complexes ------------------------------------------------------------------


def brenti_welker_h(k, n):
    acc = ZERO
    for j in range(k):
        acc = acc + comb(n, j) * eulerian(j) * (X - ONE) ** (k - 1 - j)
    return acc


def test_bergman_small_example():
    f, h = bergman_f_h(uniform(2, 3))
    assert f == Poly([3, 1])  # empty chain gives x, three vertices give 3
    assert h == Poly([2, 1])


def test_bergman_matches_closed_form():
    for n in range(1, 8):
        for k in range(1, n + 1):
            _, h = bergman_f_h(uniform(k, n))
            assert h == brenti_welker_h(k, n), (k, n)


def test_bergman_h_nonnegative(small_corpus, store):
    for name, m, _ in small_corpus:
        if m.rank < 1:
            continue
        _, h = bergman_f_h(m, store.lattice(m))
        assert all(c >= 0 for c in h.coeffs), name


def test_bergman_rejects_rank_zero():
    with pytest.raises(ValueError):
        bergman_f_h(empty_matroid())


# -- graded posets and the generic engines -----------------------------------------------


def test_graded_poset_validation():
    with pytest.raises(ValueError):
        GradedPoset([0, 2], [[0, 1]])  # cover jumps two ranks
    with pytest.raises(ValueError):
        GradedPoset([0, 1, 1], [[0, 1], [0, 2]])  # two maximal elements
    with pytest.raises(ValueError):
        GradedPoset([0, 0, 1], [[0, 2], [1, 2]])  # two minimal elements
    with pytest.raises(ValueError):
        GradedPoset([1, 2], [[0, 1]])  # bottom must have rank 0


def test_graded_poset_json_round_trip():
    p = GradedPoset.from_json(COUNTEREXAMPLE)
    blob = json.dumps(p.to_json(), sort_keys=True)
    again = GradedPoset.from_json(json.loads(blob))
    assert json.dumps(again.to_json(), sort_keys=True) == blob


def test_counterexample_poset_values():
    p = GradedPoset.from_json(COUNTEREXAMPLE)
    assert kls_uH_general(p) == Poly([1, 7, 11, 7, 1])
    assert kls_H_general(p) == Poly([1, 8, 18, 18, 8, 1])


def test_single_point_poset():
    p = GradedPoset([0], [])
    assert kls_uH_general(p) == ONE
    assert kls_P_general(p) == ONE and kls_Z_general(p) == ONE


def test_chain_posets_against_brute_recursion():
    for length in range(0, 6):
        p = chain_poset(length)
        leq = {(i, j) for i in range(length + 1) for j in range(i, length + 1)}
        brute = brute_chow_on_poset(list(range(length + 1)), leq, length)
        assert kls_uH_general(p) == brute(0), length


def test_general_engines_specialize_to_lattices():
    for m in (uniform(2, 3), boolean(4), complete_graph(4)):
        lat = lattice_of_flats(m)
        assert kls_Z_general(lat).coeff(0) == 1
        assert kls_P_general(lat).coeff(0) == 1


def test_boolean_z_and_p():
    lat = lattice_of_flats(boolean(4))
    assert kls_Z_general(lat) == (ONE + X) ** 4
    assert kls_P_general(lat) == ONE
    lat23 = lattice_of_flats(uniform(2, 3))
    assert kls_Z_general(lat23) == Poly([1, 3, 1])
    assert kls_P_general(lat23) == ONE
