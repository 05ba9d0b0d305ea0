import pytest

from matroid_invariants import (
    boolean,
    complete_graph,
    equal_tutte_pair,
    lattice_of_flats,
    uniform,
    vamos,
)


class LatticeStore:
    """Session-wide cache of lattices (and hence of the per-lattice engine
    tables); matroids are immutable, so sharing is safe."""

    def __init__(self):
        self._by_key = {}

    def lattice(self, m):
        key = m.key()
        lat = self._by_key.get(key)
        if lat is None:
            lat = lattice_of_flats(m)
            self._by_key[key] = lat
        return lat


@pytest.fixture(scope="session")
def store():
    return LatticeStore()


def build_corpus():
    """The cross-check corpus: uniform matroids with 0 <= k <= n <= 8, their
    one-coloop extensions, the graphic matroid of K4, the Vamos matroid, the
    equal-Tutte pair, braid matroids up to K6, and free matroids up to 8."""
    entries = []
    for n in range(9):
        for k in range(n + 1):
            entries.append(("uniform:%d,%d" % (k, n), uniform(k, n), None))
            entries.append(
                ("uniform+coloop:%d,%d" % (k, n), uniform(k, n).add_coloop(), None)
            )
    entries.append(("graphic-K4", complete_graph(4), 4))
    entries.append(("vamos", vamos(), None))
    m1, m2 = equal_tutte_pair()
    entries.append(("tutte-pair-1", m1, None))
    entries.append(("tutte-pair-2", m2, None))
    for n in range(2, 7):
        entries.append(("braid:%d" % n, complete_graph(n), n))
    for n in range(9):
        entries.append(("boolean:%d" % n, boolean(n), None))
    return entries


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Loopless corpus members on at most 7 elements; handy for the pricier
    per-matroid properties."""
    return [(name, m, b) for name, m, b in corpus if m.n <= 7 and m.is_loopless()]
