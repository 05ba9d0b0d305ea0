"""Graded posets, lattices of flats, Moebius functions, and the generic
interval engines that compute Chow-type and Kazhdan-Lusztig-type
polynomials on any finite bounded graded poset.

Both `GradedPoset` and `FlatsLattice` expose the same small interface used
by the engines: `size`, `ranks[i]`, `above[i]` (ids strictly above i,
ascending by rank), `bottom`, `top`, `leq(i, j)`.  Interval data (Moebius
numbers, interval characteristic polynomials, the per-interval polynomial
tables) is cached on the object after first use; instances are immutable
apart from those caches.
"""

from __future__ import annotations

from .matroid import set_of
from .poly import ONE, Poly, X, ZERO, exact_div_x_minus_1, palindromic_decompose


class GradedPoset:
    """Finite bounded graded poset given by ranks plus covering pairs."""

    def __init__(self, ranks, covers):
        ranks = tuple(ranks)
        m = len(ranks)
        if m == 0:
            raise ValueError("empty poset")
        up = [set() for _ in range(m)]
        for lo, hi in covers:
            if not (0 <= lo < m and 0 <= hi < m):
                raise ValueError("cover endpoint out of range")
            if ranks[hi] != ranks[lo] + 1:
                raise ValueError(
                    "cover (%d, %d) does not raise rank by exactly 1" % (lo, hi)
                )
            up[lo].add(hi)
        above = [set() for _ in range(m)]
        for i in sorted(range(m), key=lambda i: -ranks[i]):
            for j in up[i]:
                above[i].add(j)
                above[i] |= above[j]
        bottoms = [i for i in range(m) if all(i not in above[j] for j in range(m))]
        tops = [i for i in range(m) if not above[i]]
        if len(bottoms) != 1 or len(tops) != 1:
            raise ValueError("poset is not bounded (needs unique bottom and top)")
        self.bottom, self.top = bottoms[0], tops[0]
        if ranks[self.bottom] != 0:
            raise ValueError("bottom element must have rank 0")
        if self.top != self.bottom and self.top not in above[self.bottom]:
            raise ValueError("poset is not bounded (top not above bottom)")
        for i in range(m):
            if i != self.top and self.top not in above[i]:
                raise ValueError("element %d is not below the top" % i)
            if i != self.bottom and i not in above[self.bottom]:
                raise ValueError("element %d is not above the bottom" % i)
        self.ranks = ranks
        self.size = m
        self._above_sets = [frozenset(a) for a in above]
        self.above = [sorted(a, key=lambda j: (ranks[j], j)) for a in above]
        self._cache = {}

    def leq(self, i, j):
        return i == j or j in self._above_sets[i]

    @classmethod
    def from_json(cls, data):
        return cls(data["rank"], data["covers"])

    def to_json(self):
        covers = []
        for i in range(self.size):
            for j in self.above[i]:
                if self.ranks[j] == self.ranks[i] + 1:
                    covers.append([i, j])
        return {"rank": list(self.ranks), "covers": sorted(covers)}

    def __repr__(self):
        return "GradedPoset(size=%d, length=%d)" % (self.size, self.ranks[self.top])


class FlatsLattice:
    """Lattice of flats of a loopless matroid, flats as bit masks by rank."""

    def __init__(self, matroid):
        if not matroid.is_loopless():
            raise ValueError("the lattice of flats requires a loopless matroid")
        self.matroid = matroid
        k = matroid.rank
        by_rank = [[] for _ in range(k + 1)]
        by_rank[0] = [0]
        seen = {0}
        frontier = [0]
        for r in range(k):
            nxt = set()
            for f in frontier:
                rest = matroid.full_mask & ~f
                while rest:
                    bit = rest & -rest
                    rest ^= bit
                    g = matroid.closure(f | bit)
                    if g not in seen:
                        seen.add(g)
                        nxt.add(g)
            frontier = sorted(nxt)
            by_rank[r + 1] = frontier
        flats = [f for flats_r in by_rank for f in flats_r]
        self.flats = tuple(flats)
        self.size = len(flats)
        self.index = {f: i for i, f in enumerate(flats)}
        self.ranks = tuple(matroid.rank_of(f) for f in flats)
        self.by_rank = [[self.index[f] for f in flats_r] for flats_r in by_rank]
        self.bottom = 0
        self.top = self.size - 1
        above = []
        for i, f in enumerate(flats):
            above.append(
                [j for j in range(self.size) if j != i and flats[j] & f == f]
            )
        self.above = above
        self._cache = {}

    def leq(self, i, j):
        return self.flats[i] & self.flats[j] == self.flats[i]

    def covers(self):
        """Covering pairs (i, j); in a geometric lattice these are exactly
        the comparable pairs whose ranks differ by one."""
        return [
            (i, j)
            for i in range(self.size)
            for j in self.above[i]
            if self.ranks[j] == self.ranks[i] + 1
        ]

    def flat_elements(self, i):
        return set_of(self.flats[i])

    def __repr__(self):
        return "FlatsLattice(flats=%d, rank=%d)" % (self.size, self.ranks[self.top])


def lattice_of_flats(matroid):
    """All flats of a loopless matroid, grouped by rank."""
    return FlatsLattice(matroid)


# -- Moebius numbers and interval characteristic polynomials -----------------


def _mobius_row(p, x):
    """All values mu(x, y) for y >= x, memoized on the poset."""
    rows = p._cache.setdefault("mobius_rows", {})
    row = rows.get(x)
    if row is None:
        row = {x: 1}
        for y in p.above[x]:  # ascending rank order
            row[y] = -sum(row[z] for z in row if p.leq(z, y) and z != y)
        rows[x] = row
    return row


def mobius(p, x, y):
    """Moebius number mu(x, y); 0 when x is not below y."""
    if x == y:
        return 1
    if not p.leq(x, y):
        return 0
    return _mobius_row(p, x)[y]


def interval_char_poly(p, x, y):
    """Characteristic polynomial of the interval [x, y]:
    sum_{x <= z <= y} mu(x, z) t^(rk y - rk z)."""
    if not p.leq(x, y):
        raise ValueError("not an interval")
    row = _mobius_row(p, x)
    ry = p.ranks[y]
    out = [0] * (ry - p.ranks[x] + 1)
    for z, mu in row.items():
        if p.leq(z, y):
            out[ry - p.ranks[z]] += mu
    return Poly(out)


def interval_chibar(p, x, y):
    """Reduced characteristic polynomial of the interval [x, y]; by
    convention -1 for the one-point interval."""
    if x == y:
        return Poly((-1,))
    table = p._cache.setdefault("chibar", {})
    val = table.get((x, y))
    if val is None:
        val = exact_div_x_minus_1(interval_char_poly(p, x, y))
        table[(x, y)] = val
    return val


# -- matroid-level poset invariants ------------------------------------------


def char_poly(matroid, lattice=None):
    """Characteristic polynomial; zero for matroids with loops."""
    if not matroid.is_loopless():
        return ZERO
    lat = lattice if lattice is not None else FlatsLattice(matroid)
    return interval_char_poly(lat, lat.bottom, lat.top)


def reduced_char_poly(matroid, lattice=None):
    """chi / (x - 1) for nonempty loopless matroids; -1 for the empty one."""
    if not matroid.is_loopless():
        raise ValueError("reduced characteristic polynomial needs a loopless matroid")
    if matroid.n == 0:
        return Poly((-1,))
    return exact_div_x_minus_1(char_poly(matroid, lattice))


def whitney_numbers(matroid, lattice=None):
    """sum over flats of x^rk(F): Hilbert series of the graded Moebius algebra."""
    if not matroid.is_loopless():
        raise ValueError("Whitney numbers need a loopless matroid")
    lat = lattice if lattice is not None else FlatsLattice(matroid)
    out = [0] * (lat.ranks[lat.top] + 1)
    for r in lat.ranks:
        out[r] += 1
    return Poly(out)


def bergman_f_h(matroid, lattice=None):
    """f- and h-polynomials of the order complex of the proper part of the
    lattice of flats.

    A chain of j proper nonempty flats contributes x^(rk - 1 - j) to f
    (the empty chain gives the leading term x^(rk-1)); h(x) = f(x - 1).
    """
    if not matroid.is_loopless():
        raise ValueError("Bergman complex needs a loopless matroid")
    k = matroid.rank
    if k < 1:
        raise ValueError("Bergman complex needs rank at least 1")
    lat = lattice if lattice is not None else FlatsLattice(matroid)
    counts = [0] * k  # counts[j] = number of chains with j proper nonempty flats
    counts[0] = 1
    proper = [i for i in range(lat.size) if i not in (lat.bottom, lat.top)]

    def extend(i, depth):
        counts[depth] += 1
        for j in lat.above[i]:
            if j != lat.top and depth + 1 < k:
                extend(j, depth + 1)

    for i in proper:
        extend(i, 1)
    f = Poly([counts[k - 1 - e] for e in range(k)])
    return f, _compose_x_minus_1(f)


def _compose_x_minus_1(f):
    """f(x - 1), exactly."""
    acc = ZERO
    shifted = ONE
    base = X - ONE
    for c in f.coeffs:
        if c:
            acc = acc + c * shifted
        shifted = shifted * base
    return acc


# -- generic interval engines -------------------------------------------------


def _decreasing_rank_order(p):
    return sorted(range(p.size), key=lambda i: (-p.ranks[i], i))


def chow_table(p):
    """Per-element table of the Chow-type polynomial of each upper interval
    [z, top], via the symmetric-decomposition recursion: with
    S(x) = sum_{F > z} x^(rk F - rk z) * table[F], split S = a + b into its
    palindromic parts and take -b."""
    table = p._cache.get("chow_table")
    if table is None:
        table = [None] * p.size
        for z in _decreasing_rank_order(p):
            if z == p.top:
                table[z] = ONE
                continue
            rz = p.ranks[z]
            s = ZERO
            for f in p.above[z]:
                s = s + table[f].shift(p.ranks[f] - rz)
            _, b = palindromic_decompose(s)
            table[z] = -b
        p._cache["chow_table"] = table
    return table


def kl_table(p):
    """Per-element Kazhdan-Lusztig-type table for upper intervals [z, top]:
    with S(x) = sum_{F > z} x^(rk F - rk z) * table[F] and rho the interval
    rank, the coefficients are p_j = s_(rho - j) - s_j for j < rho / 2."""
    table = p._cache.get("kl_table")
    if table is None:
        table = [None] * p.size
        for z in _decreasing_rank_order(p):
            if z == p.top:
                table[z] = ONE
                continue
            rz = p.ranks[z]
            rho = p.ranks[p.top] - rz
            s = ZERO
            for f in p.above[z]:
                s = s + table[f].shift(p.ranks[f] - rz)
            half = (rho - 1) // 2 if rho % 2 else rho // 2 - 1
            table[z] = Poly([s.coeff(rho - j) - s.coeff(j) for j in range(half + 1)])
        p._cache["kl_table"] = table
    return table


def kls_uH_general(p):
    """Chow-type polynomial of a bounded graded poset."""
    return chow_table(p)[p.bottom]


def kls_H_general(p):
    """Augmented Chow-type polynomial: sum_F x^rk(F) * uH of [F, top]."""
    table = chow_table(p)
    acc = ZERO
    for f in range(p.size):
        acc = acc + table[f].shift(p.ranks[f])
    return acc


def kls_P_general(p):
    """Kazhdan-Lusztig-type polynomial of a bounded graded poset."""
    return kl_table(p)[p.bottom]


def kls_Z_general(p):
    """Z-type polynomial: sum_F x^rk(F) * P of [F, top]."""
    table = kl_table(p)
    acc = ZERO
    for f in range(p.size):
        acc = acc + table[f].shift(p.ranks[f])
    return acc
