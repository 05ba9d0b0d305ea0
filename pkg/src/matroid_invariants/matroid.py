"""Matroids on ground sets of at most 24 elements.

Subsets of the ground set [n] = {0, ..., n-1} are bit masks in a single
machine word; the bases family is a sorted tuple of masks.  Construction
from an explicit bases list validates the exchange axiom in full; matroids
produced by the combinators (dual, minors, sums, relaxation of a stressed
subset) skip re-validation where validity is inherited.
"""

from __future__ import annotations

from itertools import combinations

MAX_GROUND = 24


class MatroidError(ValueError):
    """Invalid bases family; `reason` is one of 'empty', 'mixed', 'exchange'."""

    def __init__(self, reason, message):
        self.reason = reason
        super().__init__(message)


def mask_of(elements):
    """Bit mask of an iterable of elements."""
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def set_of(mask):
    """Sorted element list of a bit mask."""
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def _subsets_of_size(mask, k):
    return (mask_of(c) for c in combinations(set_of(mask), k))


class Matroid:
    """Matroid given by its ground-set size and bases (as bit masks)."""

    __slots__ = ("n", "bases", "rank", "_bases_set")

    def __init__(self, n, bases, validate=True):
        if n < 0 or n > MAX_GROUND:
            raise ValueError("ground set size must be between 0 and %d" % MAX_GROUND)
        bases = tuple(sorted(set(bases)))
        if not bases:
            raise MatroidError("empty", "a matroid needs at least one basis")
        full = (1 << n) - 1
        if any(b & ~full for b in bases):
            raise ValueError("basis uses elements outside the ground set")
        rank = bases[0].bit_count()
        if any(b.bit_count() != rank for b in bases):
            raise MatroidError("mixed", "bases of different cardinalities")
        self.n = n
        self.bases = bases
        self.rank = rank
        self._bases_set = frozenset(bases)
        if validate:
            self._check_exchange()

    def _check_exchange(self):
        bases = self.bases
        inset = self._bases_set
        for b1 in bases:
            for b2 in bases:
                if b1 == b2:
                    continue
                only1 = b1 & ~b2
                only2 = b2 & ~b1
                a = only1
                while a:
                    bit = a & -a
                    a ^= bit
                    swap_base = b1 ^ bit
                    c = only2
                    while c:
                        cbit = c & -c
                        c ^= cbit
                        if (swap_base | cbit) in inset:
                            break
                    else:
                        raise MatroidError(
                            "exchange",
                            "exchange fails for bases %s, %s at element %d"
                            % (set_of(b1), set_of(b2), bit.bit_length() - 1),
                        )

    @classmethod
    def from_bases(cls, n, bases):
        """Validated construction from an iterable of element iterables."""
        return cls(n, (mask_of(b) for b in bases))

    # -- oracles -----------------------------------------------------------

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def rank_of(self, subset):
        """rk(A) = max over bases of |A & B|."""
        a = subset if isinstance(subset, int) else mask_of(subset)
        return max((a & b).bit_count() for b in self.bases)

    def closure(self, subset):
        """Smallest flat containing the subset, as a mask.

        An element f lies outside the closure iff some basis meeting A in
        rk(A) elements contains f; so cl(A) is the complement of the union
        of the rank-attaining bases (together with A itself).
        """
        a = subset if isinstance(subset, int) else mask_of(subset)
        best = max((a & b).bit_count() for b in self.bases)
        outside = 0
        for b in self.bases:
            if (a & b).bit_count() == best:
                outside |= b
        return a | (self.full_mask & ~outside)

    def is_independent(self, subset):
        a = subset if isinstance(subset, int) else mask_of(subset)
        return self.rank_of(a) == a.bit_count()

    def loops(self):
        union = 0
        for b in self.bases:
            union |= b
        return self.full_mask & ~union

    def coloops(self):
        inter = self.full_mask
        for b in self.bases:
            inter &= b
        return inter

    def is_loopless(self):
        return self.loops() == 0

    def flats_would_be_expensive(self):
        return False

    # -- combinators ---------------------------------------------------------

    def dual(self):
        full = self.full_mask
        return Matroid(self.n, (full & ~b for b in self.bases), validate=False)

    def restrict(self, subset):
        """M|_A on the elements of A, relabelled in increasing order."""
        a = subset if isinstance(subset, int) else mask_of(subset)
        if a & ~self.full_mask:
            raise ValueError("restriction set is not inside the ground set")
        elems = set_of(a)
        pos = {e: i for i, e in enumerate(elems)}
        r = self.rank_of(a)
        new_bases = set()
        for b in self.bases:
            inter = b & a
            if inter.bit_count() == r:
                new_bases.add(mask_of(pos[e] for e in set_of(inter)))
        return Matroid(len(elems), new_bases, validate=False)

    def delete(self, subset):
        a = subset if isinstance(subset, int) else mask_of(subset)
        return self.restrict(self.full_mask & ~a)

    def contract(self, subset):
        """M/A = (M* restricted to the complement)* on E - A, relabelled."""
        a = subset if isinstance(subset, int) else mask_of(subset)
        if a & ~self.full_mask:
            raise ValueError("contraction set is not inside the ground set")
        keep = set_of(self.full_mask & ~a)
        pos = {e: i for i, e in enumerate(keep)}
        r = self.rank_of(a)
        new_bases = set()
        for b in self.bases:
            if (b & a).bit_count() == r:
                new_bases.add(mask_of(pos[e] for e in set_of(b & ~a)))
        return Matroid(len(keep), new_bases, validate=False)

    def simplify(self):
        """Delete loops and all but one representative of each parallel class."""
        keep = []
        seen = 0
        loops = self.loops()
        for e in range(self.n):
            bit = 1 << e
            if bit & loops or bit & seen:
                continue
            keep.append(e)
            seen |= self.closure(bit)
        return self.restrict(mask_of(keep))

    def add_coloop(self):
        bit = 1 << self.n
        return Matroid(self.n + 1, (b | bit for b in self.bases), validate=False)

    def direct_sum(self, other):
        shift = self.n
        return Matroid(
            self.n + other.n,
            (b1 | (b2 << shift) for b1 in self.bases for b2 in other.bases),
            validate=False,
        )

    # -- structure predicates ------------------------------------------------

    def is_uniform(self):
        from math import comb

        return len(self.bases) == comb(self.n, self.rank)

    def is_paving(self):
        """Every circuit has size >= rank, i.e. all (rank-1)-subsets independent."""
        if not self.is_loopless():
            raise ValueError("paving predicates require a loopless matroid")
        k = self.rank
        if k <= 1:
            return True
        return all(
            self.rank_of(a) == k - 1 for a in _subsets_of_size(self.full_mask, k - 1)
        )

    def _is_paving_raw(self):
        # circuit-size definition, valid with loops: rank <= 1 is always
        # paving, and loops rule out paving once the rank exceeds 1
        k = self.rank
        if k <= 1:
            return True
        if not self.is_loopless():
            return False
        return all(
            self.rank_of(a) == k - 1 for a in _subsets_of_size(self.full_mask, k - 1)
        )

    def is_sparse_paving(self):
        if not self.is_loopless():
            raise ValueError("paving predicates require a loopless matroid")
        return self.is_paving() and self.dual()._is_paving_raw()

    def hyperplanes(self):
        """All flats of rank rk(M) - 1, as masks."""
        k = self.rank
        if k == 0:
            return []
        seen = set()
        for c in combinations(range(self.n), k - 1):
            a = mask_of(c)
            if self.rank_of(a) == k - 1:
                seen.add(self.closure(a))
        return sorted(seen)

    def is_stressed(self, subset):
        """Whether M|_A and M/A are both uniform."""
        a = subset if isinstance(subset, int) else mask_of(subset)
        return self.restrict(a).is_uniform() and self.contract(a).is_uniform()

    def stressed_hyperplane_counts(self):
        """Map h -> number of stressed hyperplanes of size h, for h >= rank."""
        if not self.is_loopless():
            raise ValueError("stressed hyperplane counts require a loopless matroid")
        k = self.rank
        counts = {}
        for hmask in self.hyperplanes():
            h = hmask.bit_count()
            if h < k:
                continue
            if self.restrict(hmask).is_uniform():
                counts[h] = counts.get(h, 0) + 1
        return counts

    def cusp(self, subset):
        """Size-rk(M) subsets meeting A in more than rk(A) elements."""
        a = subset if isinstance(subset, int) else mask_of(subset)
        r = self.rank_of(a)
        return {
            s
            for s in _subsets_of_size(self.full_mask, self.rank)
            if (s & a).bit_count() >= r + 1
        }

    def relax(self, subset):
        """Relaxation by a stressed subset: adjoin the cusp sets as new bases."""
        a = subset if isinstance(subset, int) else mask_of(subset)
        if not self.is_stressed(a):
            raise ValueError("relaxation requires a stressed subset")
        return Matroid(self.n, set(self.bases) | self.cusp(a), validate=True)

    # -- identity, serialization ----------------------------------------------

    def key(self):
        return (self.n, self.bases)

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Matroid(n=%d, rank=%d, bases=%d)" % (self.n, self.rank, len(self.bases))

    def to_json(self):
        return {"n": self.n, "bases": sorted(set_of(b) for b in self.bases)}

    @classmethod
    def from_json(cls, data):
        return cls.from_bases(data["n"], data["bases"])


# -- constructors -----------------------------------------------------------


def uniform(k, n):
    """The uniform matroid of rank k on n elements."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if n > MAX_GROUND:
        raise ValueError("ground set too large")
    full = (1 << n) - 1
    return Matroid(n, _subsets_of_size(full, k), validate=False)


def boolean(n):
    """The free matroid on n elements."""
    return uniform(n, n)


def empty_matroid():
    return uniform(0, 0)


def vamos():
    """The rank-4 matroid on 8 elements whose bases are all 4-subsets except
    five circuit-hyperplanes (the standard V_8 presentation)."""
    chs = [{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}, {0, 1, 6, 7}, {2, 3, 6, 7}]
    ch_masks = {mask_of(c) for c in chs}
    full = (1 << 8) - 1
    bases = [b for b in _subsets_of_size(full, 4) if b not in ch_masks]
    return Matroid(8, bases, validate=True)


def complete_graph(m):
    """Graphic matroid of the complete graph on m vertices (spanning trees)."""
    if m < 1:
        raise ValueError("need at least one vertex")
    edges = list(combinations(range(m), 2))
    if len(edges) > MAX_GROUND:
        raise ValueError("too many edges for the ground-set cap")
    if m == 1:
        return empty_matroid()
    bases = []
    for tree in combinations(range(len(edges)), m - 1):
        parent = list(range(m))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        ok = True
        for i in tree:
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            bases.append(mask_of(tree))
    return Matroid(len(edges), bases, validate=False)


def _rank3_from_lines(n, lines, parallel_pairs=()):
    """Rank-3 matroid on [n] given by its rank-2 flats ("lines") and any
    parallel pairs; bases are the triples not inside a line and not
    containing a parallel pair.  Lines must pairwise meet in at most one
    parallel class for this to be a matroid (validated)."""
    dependent = set()
    for line in lines:
        for t in combinations(sorted(line), 3):
            dependent.add(mask_of(t))
    for p in parallel_pairs:
        pm = mask_of(p)
        for e in range(n):
            if not pm & (1 << e):
                dependent.add(pm | (1 << e))
    full = (1 << n) - 1
    bases = [b for b in _subsets_of_size(full, 3) if b not in dependent]
    return Matroid(n, bases, validate=True)


def equal_tutte_pair():
    """Two rank-4 matroids on 7 elements with equal Tutte polynomials but
    different Chow and augmented Chow polynomials.

    Both are duals of rank-3 point-line geometries with one doubled point:
    the first has lines {0,1,2,3}, {0,4,5}, {1,5,6}, {2,3,4,6} with 2 and 3
    parallel; the second has lines {0,1,2,3}, {0,4,5,6} with 5 and 6
    parallel.
    """
    m1_dual = _rank3_from_lines(
        7,
        [{0, 1, 2, 3}, {0, 4, 5}, {1, 5, 6}, {2, 3, 4, 6}],
        parallel_pairs=[(2, 3)],
    )
    m2_dual = _rank3_from_lines(
        7,
        [{0, 1, 2, 3}, {0, 4, 5, 6}],
        parallel_pairs=[(5, 6)],
    )
    return m1_dual.dual(), m2_dual.dual()


def direct_sum(m1, m2):
    return m1.direct_sum(m2)


# -- Tutte polynomial ---------------------------------------------------------


class BivariatePoly:
    """Sparse polynomial in two variables with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (i, j), c in items:
            if c:
                data[(i, j)] = data.get((i, j), 0) + c
        self.terms = {k: v for k, v in data.items() if v}

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BivariatePoly(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return BivariatePoly({k: other * v for k, v in self.terms.items()})
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariatePoly(out)

    __rmul__ = __mul__

    def shift(self, dx, dy):
        return BivariatePoly({(i + dx, j + dy): c for (i, j), c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, BivariatePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        def mono(i, j, c):
            parts = []
            if c != 1 or (i == 0 and j == 0):
                parts.append(str(c))
            if i:
                parts.append("x" if i == 1 else "x^%d" % i)
            if j:
                parts.append("y" if j == 1 else "y^%d" % j)

            return "*".join(parts)
        keys = sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0]))
        return " + ".join(mono(i, j, self.terms[(i, j)]) for i, j in keys)

    def to_json(self):
        return {"terms": [[i, j, str(c)] for (i, j), c in sorted(self.terms.items())]}


def tutte(m):
    """Tutte polynomial by deletion-contraction, memoized on minor identity."""
    memo = {}

    def rec(mat):
        key = mat.key()
        cached = memo.get(key)
        if cached is not None:
            return cached
        if mat.n == 0:
            result = BivariatePoly.one()
        else:
            bit = 1
            loops = mat.loops()
            coloops = mat.coloops()
            if bit & loops:
                result = rec(mat.delete(bit)).shift(0, 1)
            elif bit & coloops:
                result = rec(mat.contract(bit)).shift(1, 0)
            else:
                result = rec(mat.delete(bit)) + rec(mat.contract(bit))
        memo[key] = result
        return result

    return rec(m)
