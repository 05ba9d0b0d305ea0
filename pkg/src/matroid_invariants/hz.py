"""Generalized binomial Eulerian polynomials from inversion sequences.

For a vector s = (s_1, ..., s_n) of positive integers, the inversion
sequences are all e = (e_1, ..., e_n) with 0 <= e_i < s_i, padded on both
sides by e_0 = e_{n+1} = 0 and s_0 = s_{n+1} = 1.  A position i in [0, n]
is an ascent when e_i/s_i < e_{i+1}/s_{i+1} and a collision when the two
ratios are equal; comparisons are done by exact cross-multiplication.  The
polynomial of the vector is

    sum over e of (1 + x)^col(e) * x^asc(e).

The consecutive-integer specialization s = (n-k+2, ..., n) reproduces the
augmented Chow polynomial of the uniform matroid U_{k,n}; by convention the
empty vector (k = 1) gives x + 1 and k = 0 gives 1.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb

from .poly import ONE, X, ZERO, eulerian


def hz_poly(s):
    """Ascent/collision generating polynomial of the inversion sequences of s."""
    s = tuple(s)
    if any(v <= 0 for v in s):
        raise ValueError("entries of s must be positive integers")
    padded = (1,) + s + (1,)
    n = len(s)
    powers = [(ONE + X) ** c for c in range(n + 2)]
    acc = ZERO
    for e in product(*(range(v) for v in s)):
        seq = (0,) + e + (0,)
        asc = col = 0
        for i in range(n + 1):
            lhs = seq[i] * padded[i + 1]
            rhs = seq[i + 1] * padded[i]
            if lhs < rhs:
                asc += 1
            elif lhs == rhs:
                col += 1
        acc = acc + powers[col].shift(asc)
    return acc


@lru_cache(maxsize=None)
def hz_uniform(k, n):
    """The polynomial of s = (n-k+2, ..., n); equals the augmented Chow
    polynomial of U_{k,n}.  Conventions: k = 0 gives 1, k = 1 gives x + 1."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if k == 0:
        return ONE
    if k == 1:
        return ONE + X
    return hz_poly(range(n - k + 2, n + 1))


def hz_recursion_check(k, n):
    """Verify, purely by enumeration, the deletion-style recursion
    E(k,n) = E(k-1,n-1) + x sum_{j<k} C(n-1,j) A_j(x) E(k-1-j, n-1-j)."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    rhs = hz_uniform(k - 1, n - 1)
    acc = ZERO
    for j in range(k):
        acc = acc + comb(n - 1, j) * eulerian(j) * hz_uniform(k - 1 - j, n - 1 - j)
    return hz_uniform(k, n) == rhs + acc.shift(1)


def search_s_vectors(target, length):
    """All s in Z_{>0}^length with hz_poly(s) == target, exhaustively.

    Finiteness: every inversion sequence contributes at least 1 to the
    evaluation at x = 1, so prod(s) <= target(1); only vectors within that
    product bound can match, and all of them are enumerated.
    """
    bound = target(1)
    if bound <= 0:
        return []
    hits = []
    stack = [((), 1)]
    while stack:
        prefix, prod_so_far = stack.pop()
        if len(prefix) == length:
            if hz_poly(prefix) == target:
                hits.append(prefix)
            continue
        v = 1
        while prod_so_far * v <= bound:
            stack.append((prefix + (v,), prod_so_far * v))
            v += 1
    hits.sort()
    return hits
