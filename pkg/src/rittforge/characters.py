"""Multiplicative characters on the polynomial composition semigroup.

A character sends composition to multiplication and every constant to the
absorbing Zero value. Built-in families: the degree character deg^s, the
length character base^l(p) with the base kept symbolic, the bi-orbit
character supported on A o P^n o B for a fixed prime P, and finite tables
of per-prime values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .decompose import complete_decomposition, is_indecomposable
from .equivalence import affine_biequiv
from .gaussian import GaussianRational, gr
from .poly import Poly


@dataclass(frozen=True, slots=True)
class Zero:
    def __mul__(self, other):
        return char_mul(self, other)


@dataclass(frozen=True, slots=True)
class Exact:
    value: GaussianRational

    def __mul__(self, other):
        return char_mul(self, other)


@dataclass(frozen=True, slots=True)
class PowerOfBase:
    base: object  # symbolic tag (str) or GaussianRational
    exp: int

    def __mul__(self, other):
        return char_mul(self, other)


ZERO = Zero()


def char_mul(x, y):
    if x == ZERO or y == ZERO:
        return ZERO
    if isinstance(x, Exact) and isinstance(y, Exact):
        return Exact(x.value * y.value)
    if isinstance(x, PowerOfBase) and isinstance(y, PowerOfBase):
        if x.base == y.base:
            return PowerOfBase(x.base, x.exp + y.exp)
        if isinstance(x.base, GaussianRational) and isinstance(y.base, GaussianRational):
            return Exact(x.base**x.exp * y.base**y.exp)
        raise ValueError("cannot combine powers of different symbolic bases")
    power, exact = (x, y) if isinstance(x, PowerOfBase) else (y, x)
    if isinstance(power.base, GaussianRational):
        return Exact(power.base**power.exp * exact.value)
    raise ValueError("cannot multiply a symbolic power by an exact value")


@dataclass(frozen=True, slots=True)
class DegreeChar:
    s: int = 1


@dataclass(frozen=True, slots=True)
class LengthChar:
    base: object = "e"


@dataclass(frozen=True, slots=True)
class AffineOrbitChar:
    P: Poly
    a: GaussianRational

    def __post_init__(self):
        if self.P.degree < 2 or not is_indecomposable(self.P):
            raise ValueError("orbit character needs an indecomposable base of degree >= 2")
        if not self.a:
            raise ValueError("orbit character value must be nonzero")


@dataclass(frozen=True, slots=True)
class PrimeTable:
    table: dict = field(default_factory=dict)


def _orbit_value(chi: AffineOrbitChar, p: Poly):
    # cheap necessary condition first: deg(p) must be a power of deg(P)
    iterate, n = chi.P, 1
    while iterate.degree < p.degree:
        iterate, n = iterate.compose(chi.P), n + 1
    if iterate.degree != p.degree:
        return ZERO
    if affine_biequiv(iterate, p) is None:
        return ZERO
    return PowerOfBase(chi.a, n)


def evaluate(chi, p: Poly):
    if p.degree <= 0:
        return ZERO
    if isinstance(chi, DegreeChar):
        return Exact(gr(Fraction(p.degree) ** chi.s))
    if p.degree == 1:
        if isinstance(chi, LengthChar):
            return PowerOfBase(chi.base, 0)
        if isinstance(chi, AffineOrbitChar):
            return ZERO
        if isinstance(chi, PrimeTable):
            return Exact(gr(1))  # empty factor product
    if isinstance(chi, LengthChar):
        return PowerOfBase(chi.base, complete_decomposition(p).length)
    if isinstance(chi, AffineOrbitChar):
        return _orbit_value(chi, p)
    if isinstance(chi, PrimeTable):
        values = [chi.table.get(f, ZERO) for f in complete_decomposition(p).factors]
        out = values[0]
        for v in values[1:]:
            out = char_mul(out, v)
        return out
    raise TypeError(f"not a character: {chi!r}")


def verify_multiplicative(chi, samples):
    """Pairs (p, q) with evaluate(p o q) != evaluate(p) * evaluate(q)."""
    violations = []
    for p, q in samples:
        left = evaluate(chi, p.compose(q))
        right = char_mul(evaluate(chi, p), evaluate(chi, q))
        if left != right:
            violations.append((p, q, left, right))
    return violations


def check_prime_data(table: dict, quadruples):
    """Consistency report for candidate per-prime character data.

    Flags table constants with nonzero values, and quadruples
    (P1, P2, P3, P4) with P1 o P2 = P3 o P4 whose values violate
    v(P1)*v(P2) = v(P3)*v(P4). Quadruples not satisfying the composition
    identity are rejected outright.
    """
    report = []
    for key, value in table.items():
        if key.degree <= 0 and value != ZERO:
            report.append(("constant", key))
    for i, (p1, p2, p3, p4) in enumerate(quadruples):
        if p1.compose(p2) != p3.compose(p4):
            raise ValueError(f"quadruple {i} does not satisfy P1 o P2 = P3 o P4")
        lhs = char_mul(table.get(p1, ZERO), table.get(p2, ZERO))
        rhs = char_mul(table.get(p3, ZERO), table.get(p4, ZERO))
        if lhs != rhs:
            report.append(("quadruple", i))
    return report
