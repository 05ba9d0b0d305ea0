"""Exact real-root certification: Sturm sequences, isolation, interlacing.

Everything here runs on integers and `fractions.Fraction`; there is no
floating point on any certification path.  Sturm chains are kept as
primitive integer polynomials (each remainder is rescaled by a positive
rational), which keeps the sign structure intact while avoiding the worst
of rational coefficient swell.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .poly import Poly


class RatPoly:
    """Dense polynomial with exact rational coefficients (ascending degree)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_poly(cls, p):
        return cls(p.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, v):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def derivative(self):
        return RatPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def divmod(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        dd = len(div) - 1
        lead = div[-1]
        quo = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] / lead
            if c:
                quo[i - dd] = c
                for j, dj in enumerate(div):
                    rem[i - dd + j] -= c * dj
        return RatPoly(quo), RatPoly(rem)

    def primitive_int(self):
        """Positive rescaling onto primitive integer coefficients."""
        if not self.coeffs:
            return ()
        denom = 1
        for c in self.coeffs:
            denom = denom * c.denominator // gcd(denom, c.denominator)
        ints = [int(c * denom) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        return tuple(c // g for c in ints)

    def __repr__(self):
        return "RatPoly(%r)" % (self.coeffs,)


def _int_coeffs(p):
    if isinstance(p, Poly):
        return p.coeffs
    if isinstance(p, RatPoly):
        return p.primitive_int()
    return Poly(p).coeffs


def _eval_at(coeffs, v):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * v + c
    return acc


def _derivative(coeffs):
    return tuple(i * c for i, c in enumerate(coeffs) if i)


def _primitive(coeffs):
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    g = 0
    for c in cs:
        g = gcd(g, c)
    if g > 1:
        cs = [c // g for c in cs]
    return tuple(cs)


def poly_gcd(a, b):
    """Gcd of two integer polynomials, primitive with positive leading coeff."""
    fa, fb = RatPoly(_int_coeffs(a)), RatPoly(_int_coeffs(b))
    while fb:
        fa, fb = fb, fa.divmod(fb)[1]
    out = fa.primitive_int()
    if out and out[-1] < 0:
        out = tuple(-c for c in out)
    return out


def squarefree_part(p):
    """p / gcd(p, p') as a primitive integer polynomial (same root set)."""
    cs = _primitive(_int_coeffs(p))
    if len(cs) <= 1:
        return cs
    g = poly_gcd(cs, _derivative(cs))
    if len(g) == 1:
        return cs
    quo, rem = RatPoly(cs).divmod(RatPoly(g))
    assert not rem, "gcd failed to divide its polynomial"
    return quo.primitive_int()


def sturm_chain(coeffs):
    """Sturm chain of an integer polynomial, each entry primitive integer."""
    s0 = _primitive(coeffs)
    if len(s0) <= 1:
        return [s0] if s0 else []
    chain = [s0, _primitive(_derivative(s0))]
    while True:
        rem = RatPoly(chain[-2]).divmod(RatPoly(chain[-1]))[1]
        if not rem:
            break
        chain.append(_primitive(tuple(-c for c in rem.primitive_int())))
        # primitive_int of -rem keeps the sign of -rem: positive scaling only
        if len(chain[-1]) == 1:
            break
    return chain


def _sign(v):
    return (v > 0) - (v < 0)


def _variations(signs):
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _variations_at(chain, x):
    return _variations([_sign(_eval_at(c, x)) for c in chain])


def _variations_at_inf(chain, positive):
    signs = []
    for c in chain:
        s = _sign(c[-1])
        if not positive and (len(c) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def count_distinct_real_roots(p, lo=None, hi=None):
    """Number of distinct real roots of p, in (lo, hi] if bounds are given.

    Interval endpoints must not themselves be roots.
    """
    cs = _primitive(_int_coeffs(p))
    if not cs:
        raise ValueError("the zero polynomial has every number as a root")
    if len(cs) == 1:
        return 0
    chain = sturm_chain(cs)
    va = _variations_at_inf(chain, False) if lo is None else _variations_at(chain, lo)
    vb = _variations_at_inf(chain, True) if hi is None else _variations_at(chain, hi)
    return va - vb


def cauchy_bound(coeffs):
    """1 + max |a_i| / |a_d|: every root has absolute value strictly below it."""
    cs = _primitive(_int_coeffs(coeffs))
    lead = abs(cs[-1])
    worst = max(abs(c) for c in cs[:-1]) if len(cs) > 1 else 0
    return Fraction(1) + Fraction(worst, lead)


def real_rooted(p):
    """True iff every complex root of p is real (Sturm certificate).

    Strategy: strip the x^m factor, pass to the squarefree part q, and check
    that q has deg q distinct real roots.
    """
    if isinstance(p, (list, tuple)):
        p = Poly(p)
    if p.is_zero():
        raise ValueError("the zero polynomial is not a valid input")
    cs = list(p.coeffs)
    while cs[0] == 0:
        cs.pop(0)
    q = squarefree_part(cs)
    if len(q) <= 2:
        return True
    return count_distinct_real_roots(q) == len(q) - 1


def isolate_real_roots(p):
    """Disjoint open rational intervals, one per distinct real root of p.

    Interval endpoints are never roots.  Input need not be squarefree; the
    isolation runs on the squarefree part.
    """
    q = squarefree_part(p)
    if len(q) <= 1:
        return []
    chain = sturm_chain(q)
    bound = cauchy_bound(q)

    def count(a, b):
        return _variations_at(chain, a) - _variations_at(chain, b)

    total = count(-bound, bound)
    out = []
    stack = [(-bound, bound, total)]
    while stack:
        lo, hi, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if _eval_at(q, mid) == 0:
            eps = (hi - lo) / 4
            while (
                _eval_at(q, mid - eps) == 0
                or _eval_at(q, mid + eps) == 0
                or count(mid - eps, mid + eps) != 1
            ):
                eps /= 2
            out.append((mid - eps, mid + eps))
            stack.append((lo, mid - eps, count(lo, mid - eps)))
            stack.append((mid + eps, hi, count(mid + eps, hi)))
        else:
            stack.append((lo, mid, count(lo, mid)))
            stack.append((mid, hi, count(mid, hi)))
    out.sort()
    return out


def _multiplicity_layers(p):
    """Chain p, gcd(p, p'), gcd(of that, its derivative), ...

    Counting distinct roots of every layer in an interval counts the roots
    of p there with multiplicity.
    """
    layers = []
    cur = _primitive(_int_coeffs(p))
    while len(cur) > 1:
        layers.append(cur)
        cur = poly_gcd(cur, _derivative(cur))
    return layers


def _root_counter(p):
    layer_chains = [sturm_chain(c) for c in _multiplicity_layers(p)]
    base = [_variations_at_inf(ch, False) for ch in layer_chains]

    def roots_leq(x):
        return sum(b - _variations_at(ch, x) for b, ch in zip(base, layer_chains))

    return roots_leq


def interlaces(p, q):
    """Weak interlacing of root multisets: with p_1 <= ... <= p_s and
    q_1 <= ... <= q_t the sorted real roots (with multiplicity), checks
    q_1 <= p_1 <= q_2 <= p_2 <= ...  Shared roots are allowed.

    Requires deg q in {deg p, deg p + 1}; a q of smaller degree never
    interlaces.  Both inputs must be real-rooted.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("interlacing needs nonzero polynomials")
    if not real_rooted(p) or not real_rooted(q):
        raise ValueError("interlacing requires real-rooted polynomials")
    if q.degree < p.degree or q.degree > p.degree + 1:
        return False
    if p.degree == 0:
        return True

    both = squarefree_part(p * q)
    intervals = isolate_real_roots(Poly(both))
    bound = cauchy_bound(both)
    samples = [-bound] + [hi for (_, hi) in intervals]
    count_p = _root_counter(p)
    count_q = _root_counter(q)
    for s in samples:
        np_, nq = count_p(s), count_q(s)
        if not (np_ <= nq <= np_ + 1):
            return False
    return True
