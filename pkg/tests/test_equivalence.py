from fractions import Fraction

import pytest

from rittforge.equivalence import (
    BiEquivWitness,
    SandwichSemigroup,
    affine_biequiv,
    affine_conjugate,
    has_symmetries,
    sandwich_compose,
    sandwich_isomorphism,
)
from rittforge.gaussian import gr
from rittforge.poly import AffineMap, IDENTITY_MAP, X, constant, poly
from rittforge.ratfun import RatFun, ratfun

from util import make_rng, rand_gaussian, rand_nonzero_gaussian, rand_poly


def am(a, b=0):
    return AffineMap(gr(a), gr(b))


Z2 = poly(0, 0, 1)
Z3 = poly(0, 0, 0, 1)


class TestBiEquiv:
    def test_known_pair(self):
        w = affine_biequiv(Z2, poly(3, 4, 2))
        assert w == BiEquivWitness(am(2, 1), am(1, 1))
        assert w.transports(Z2, poly(3, 4, 2))

    def test_identity_pair(self):
        w = affine_biequiv(Z2, Z2)
        assert w == BiEquivWitness(IDENTITY_MAP, IDENTITY_MAP)

    def test_linear_term_obstruction(self):
        assert affine_biequiv(Z3, poly(0, 1, 0, 1)) is None

    def test_cubic_recovery(self):
        # q = (2z+1) o (z^3+z) o (z-1), expanded by hand
        p = poly(0, 1, 0, 1)
        q = poly(-3, 8, -6, 2)
        w = affine_biequiv(p, q)
        assert w == BiEquivWitness(am(2, 1), am(1, -1))

    def test_critical_point_obstruction(self):
        # the orbit of z^4 only contains polynomials with one critical point
        assert affine_biequiv(poly(0, 0, 0, 0, 1), poly(0, 0, -2, 0, 1)) is None

    def test_degree_mismatch(self):
        assert affine_biequiv(Z2, Z3) is None

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            affine_biequiv(poly(1, 1), Z2)

    def test_constructed_pairs_always_found(self):
        rng = make_rng(40)
        for _ in range(40):
            n = rng.choice([2, 3, 4, 5])
            p = rand_poly(rng, n, height=3)
            a = AffineMap(rand_nonzero_gaussian(rng, 3), rand_gaussian(rng, 3))
            b = AffineMap(rand_nonzero_gaussian(rng, 3), rand_gaussian(rng, 3))
            q = a.to_poly().compose(p).compose(b.to_poly())
            w = affine_biequiv(p, q)
            assert w is not None and w.transports(p, q)

    def test_witnesses_always_verify(self):
        rng = make_rng(41)
        for _ in range(25):
            n = rng.choice([2, 3, 4])
            p = rand_poly(rng, n, height=3)
            q = rand_poly(rng, n, height=3)
            w = affine_biequiv(p, q)
            assert w is None or w.transports(p, q)


class TestSymmetries:
    def test_square(self):
        out = has_symmetries(Z2)
        assert BiEquivWitness(am(1), am(-1)) in out
        assert len(out) == 4
        assert all(w.transports(Z2, Z2) for w in out)
        assert BiEquivWitness(IDENTITY_MAP, IDENTITY_MAP) not in out

    def test_cube(self):
        out = has_symmetries(Z3)
        assert BiEquivWitness(am(-1), am(-1)) in out
        assert all(w.transports(Z3, Z3) for w in out)

    def test_odd_cubic(self):
        assert has_symmetries(poly(0, 1, 0, 1)) == [
            BiEquivWitness(am(-1), am(-1))
        ]

    def test_dense_cubic_central_involution(self):
        # every cubic is centrally symmetric about its inflection point:
        # here c = -1/3 and 2*p(c) = 130/27
        p = poly(3, 2, 1, 1)
        assert has_symmetries(p) == [
            BiEquivWitness(
                am(-1, Fraction(130, 27)), am(-1, Fraction(-2, 3))
            )
        ]

    def test_dense_quartic_empty(self):
        assert has_symmetries(poly(1, 1, 1, 1, 1)) == []

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            has_symmetries(poly(0, 1))


class TestConjugacy:
    def test_shift(self):
        f = affine_conjugate(poly(0, 2, 1), Z2)
        assert f == am(1, 1)

    def test_identity(self):
        assert affine_conjugate(Z2, Z2) == IDENTITY_MAP

    def test_no_witness(self):
        assert affine_conjugate(Z2, poly(1, 0, 1)) is None

    def test_degree_mismatch(self):
        assert affine_conjugate(Z2, Z3) is None

    def test_constructed_pairs_and_iterate_transport(self):
        rng = make_rng(42)
        for _ in range(15):
            n = rng.choice([2, 3])
            p = rand_poly(rng, n, height=3)
            f = AffineMap(rand_nonzero_gaussian(rng, 3), rand_gaussian(rng, 3))
            q = f.to_poly().compose(p).compose(f.inverse().to_poly())
            w = affine_conjugate(p, q)
            assert w is not None
            wp, wi = w.to_poly(), w.inverse().to_poly()
            pk, qk = p, q
            for _ in range(3):
                assert wp.compose(pk).compose(wi) == qk
                pk, qk = pk.compose(p), qk.compose(q)


class TestSandwich:
    def test_identity_kernel(self):
        s = SandwichSemigroup(X)
        assert sandwich_compose(s, Z2, Z3) == Z2.compose(Z3)

    def test_square_kernel(self):
        s = SandwichSemigroup(Z2)
        assert sandwich_compose(s, poly(1, 1), poly(1, 1)) == poly(2, 2, 1)

    def test_constant_absorbs(self):
        s = SandwichSemigroup(Z2)
        assert sandwich_compose(s, constant(5), poly(1, 1)) == constant(5)

    def test_associativity(self):
        rng = make_rng(43)
        for _ in range(20):
            g = rand_poly(rng, rng.choice([1, 2]), height=2)
            f, h, k = (rand_poly(rng, rng.choice([1, 2]), height=2) for _ in range(3))
            s = SandwichSemigroup(g)
            assert s.compose(s.compose(f, h), k) == s.compose(f, s.compose(h, k))

    def test_ratfun_kernel(self):
        s = SandwichSemigroup(ratfun(poly(1), poly(0, 1)))  # kernel 1/z
        out = s.compose(poly(1, 1), poly(0, 0, 1))
        assert isinstance(out, RatFun)
        assert out == ratfun(poly(1, 0, 1), poly(0, 0, 1))  # 1/z^2 + 1


class TestSandwichIsomorphism:
    def test_identity_transformer(self):
        iso = sandwich_isomorphism(IDENTITY_MAP, IDENTITY_MAP, Z2)
        assert iso.P2 == Z2
        assert iso.apply(Z3) == Z3

    def test_shift_example(self):
        iso = sandwich_isomorphism(am(1, 1), IDENTITY_MAP, Z2)
        assert iso.P2 == poly(2, -2, 1)
        assert iso.apply(Z2) == poly(2, -2, 1)

    def test_image_of_identity_is_b_inverse(self):
        iso = sandwich_isomorphism(am(1, 1), am(2, 3), Z2)
        assert iso.apply(X) == iso.B.inverse().to_poly()

    def test_law_on_random_samples(self):
        rng = make_rng(44)
        iso = sandwich_isomorphism(am(2, 1), am(1, -3), poly(0, 1, 1))
        samples = [
            (rand_poly(rng, rng.choice([1, 2]), height=2),
             rand_poly(rng, rng.choice([1, 2]), height=2))
            for _ in range(20)
        ]
        assert iso.verify(samples)

    def test_wrong_kernel_detected(self):
        iso = sandwich_isomorphism(am(1, 1), IDENTITY_MAP, Z2)
        broken = type(iso)(iso.f, iso.B, iso.P1, Z2)
        with pytest.raises(AssertionError):
            broken.verify([(Z2, Z3)])
