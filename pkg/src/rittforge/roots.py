"""Exact root enumeration over the Gaussian rationals.

Candidates for degree >= 3 come from factoring p * conj(p) over the plain
rationals (sympy); a Gaussian rational root of p has minimal polynomial of
degree at most 2 over Q, so it shows up as a linear factor or an irreducible
quadratic with negative square discriminant.  Every candidate is re-verified
by exact evaluation, so the final list is sound and complete over Q(i).
"""

from __future__ import annotations

import math
from fractions import Fraction

import sympy

from .gaussian import GR_ZERO, GaussianRational
from .poly import Poly


def rational_sqrt(f: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    if f < 0:
        return None
    n, d = f.numerator, f.denominator
    rn = math.isqrt(n)
    rd = math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


def gaussian_sqrt(c: GaussianRational):
    """One exact square root of c in Q(i), or None if no such root exists."""
    s, t = c.re, c.im
    if t == 0:
        if s == 0:
            return GR_ZERO
        if s > 0:
            r = rational_sqrt(s)
            return None if r is None else GaussianRational(r, Fraction(0))
        r = rational_sqrt(-s)
        return None if r is None else GaussianRational(Fraction(0), r)
    r = rational_sqrt(s * s + t * t)
    if r is None:
        return None
    u2 = (s + r) / 2
    u = rational_sqrt(u2)
    if u is None or u == 0:
        return None
    v = t / (2 * u)
    cand = GaussianRational(u, v)
    if cand * cand == c:
        return cand
    return None


def _sort_key(x: GaussianRational):
    return (x.re, x.im)


def _quadratic_roots(a, b, c):
    """Roots in Q(i) of a x^2 + b x + c with a != 0."""
    disc = b * b - 4 * a * c
    sq = gaussian_sqrt(disc)
    if sq is None:
        return []
    two_a = a + a
    r1 = (-b + sq) / two_a
    r2 = (-b - sq) / two_a
    return [r1] if r1 == r2 else [r1, r2]


def gaussian_roots(p: Poly):
    """All distinct roots of p in Q(i), sorted, each verified exactly."""
    if p.is_zero():
        raise ValueError("the zero polynomial has every root")
    if p.degree <= 0:
        return []
    roots = set()
    v = p.valuation()
    if v > 0:
        roots.add(GR_ZERO)
        p = Poly(p.coeffs[v:])
    if p.degree == 1:
        roots.add(-p.coeffs[0] / p.coeffs[1])
    elif p.degree == 2:
        roots.update(_quadratic_roots(p.coeffs[2], p.coeffs[1], p.coeffs[0]))
    elif p.degree >= 3:
        for cand in _candidates_via_factorization(p):
            if not p.eval(cand):
                roots.add(cand)
    return sorted(roots, key=_sort_key)


def _candidates_via_factorization(p: Poly):
    h = p * p.conj()
    assert all(c.im == 0 for c in h.coeffs)
    # h has rational coefficients; clear denominators to integers
    denom = 1
    for c in h.coeffs:
        denom = denom * c.re.denominator // math.gcd(denom, c.re.denominator)
    ints = [int(c.re * denom) for c in h.coeffs]
    x = sympy.Symbol("x")
    hp = sympy.Poly(list(reversed(ints)), x, domain="QQ")
    cands = []
    for factor, _mult in hp.factor_list()[1]:
        fc = [Fraction(int(c.p), int(c.q)) for c in factor.all_coeffs()]
        if factor.degree() == 1:
            a1, a0 = fc
            cands.append(GaussianRational(-a0 / a1, Fraction(0)))
        elif factor.degree() == 2:
            a2, a1, a0 = fc
            b = a1 / a2
            c0 = a0 / a2
            d = b * b / 4 - c0
            # irreducible over Q means d is not a rational square; Q(i) roots
            # need d = -s^2 with s rational
            s = rational_sqrt(-d)
            if s is not None:
                cands.append(GaussianRational(-b / 2, s))
                cands.append(GaussianRational(-b / 2, -s))
    return cands
