from fractions import Fraction

from rittforge.gaussian import GR_I, GR_ONE, GR_ZERO, gr
from rittforge.poly import X, constant, monomial, poly
from rittforge.roots import gaussian_roots, gaussian_sqrt, rational_sqrt

from util import make_rng, rand_gaussian


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(0)) == 0
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None


def test_gaussian_sqrt_cases():
    assert gaussian_sqrt(gr(-1)) in (GR_I, -GR_I)
    s = gaussian_sqrt(gr(0, 2))
    assert s is not None and s * s == gr(0, 2)
    assert gaussian_sqrt(gr(2)) is None
    assert gaussian_sqrt(gr(Fraction(9, 4))) == gr(Fraction(3, 2))
    assert gaussian_sqrt(gr(-4)) in (gr(0, 2), gr(0, -2))
    s = gaussian_sqrt(gr(3, 4))
    assert s is not None and s * s == gr(3, 4)
    assert gaussian_sqrt(gr(1, 1)) is None
    assert gaussian_sqrt(GR_ZERO) == GR_ZERO


def test_gaussian_sqrt_randomized_round_trip():
    rng = make_rng(10)
    for _ in range(100):
        x = rand_gaussian(rng)
        s = gaussian_sqrt(x * x)
        assert s is not None
        assert s * s == x * x


def test_roots_low_degree():
    assert gaussian_roots(poly(-6, 2)) == [gr(3)]
    assert gaussian_roots(poly(-1, 0, 1)) == [gr(-1), gr(1)]
    assert gaussian_roots(poly(1, 0, 1)) == [-GR_I, GR_I]
    assert gaussian_roots(poly(2, 0, 1)) == []  # roots +- i sqrt(2)
    assert gaussian_roots(poly(3, 1)) == [gr(-3)]


def test_roots_of_unity():
    assert gaussian_roots(poly(-1, 0, 0, 1)) == [GR_ONE]  # cube roots: only 1
    quartic = poly(-1, 0, 0, 0, 1)
    assert gaussian_roots(quartic) == sorted(
        [GR_ONE, -GR_ONE, GR_I, -GR_I], key=lambda x: (x.re, x.im)
    )


def test_roots_with_zero_root():
    p = monomial(2) * poly(-1, 1)  # z^2 (z - 1)
    assert gaussian_roots(p) == [GR_ZERO, GR_ONE]


def test_roots_constructed_products():
    rng = make_rng(11)
    irr = poly(-2, 0, 1)  # z^2 - 2, no Gaussian rational roots
    for _ in range(20):
        wanted = set()
        p = irr
        for _ in range(rng.randint(1, 3)):
            r = rand_gaussian(rng, height=4)
            wanted.add(r)
            p = p * (X - constant(r))
        found = gaussian_roots(p)
        assert set(found) == wanted
        for r in found:
            assert not p.eval(r)


def test_roots_degree_error():
    try:
        gaussian_roots(poly())
        assert False
    except ValueError:
        pass
    assert gaussian_roots(constant(5)) == []
