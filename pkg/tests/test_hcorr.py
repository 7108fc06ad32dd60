"""Correspondence algebra: branch products, resultant composition, fibers."""

import itertools

import pytest
from util import make_rng, rand_poly, rand_ratfun

from rittforge.bipoly import BiPoly
from rittforge.hcorr import (
    HolCorr,
    compose,
    degree,
    fiber,
    from_branches,
    graph,
    inverse,
)
from rittforge.poly import Poly, X, constant
from rittforge.ratfun import RF_ONE, RF_X, RatFun, _as_ratfun


def poly(*cs):
    return Poly(tuple(cs))


def rf(num, den=None):
    num = num if isinstance(num, Poly) else poly(*num)
    if den is None:
        return _as_ratfun(num)
    den = den if isinstance(den, Poly) else poly(*den)
    return RatFun(num, den)


Z2 = poly(0, 0, 1)
ONE_OVER_Z = rf((1,), (0, 1))


class TestConstruction:
    def test_monic_required(self):
        with pytest.raises(ValueError):
            HolCorr(BiPoly((_as_ratfun(X), _as_ratfun(constant(2)))))

    def test_positive_degree_required(self):
        with pytest.raises(ValueError):
            HolCorr(BiPoly((RF_ONE,)))

    def test_empty_branch_list(self):
        with pytest.raises(ValueError):
            from_branches([])

    def test_graph_is_w_minus_branch(self):
        k = graph(Z2)
        assert k.poly.coeffs_in_W == (_as_ratfun(-Z2), RF_ONE)
        assert degree(k) == 1

    def test_two_branch_example(self):
        # [z+1, 1/z] -> W^2 - (z+1+1/z) W + (z+1)/z
        k = from_branches([rf((1, 1)), ONE_OVER_Z])
        e1 = rf((1, 1)) + ONE_OVER_Z
        e2 = rf((1, 1)) * ONE_OVER_Z
        assert k.poly.coeffs_in_W == (e2, -e1, RF_ONE)
        assert degree(k) == 2

    def test_plus_minus_pair(self):
        k = from_branches([_as_ratfun(X), _as_ratfun(-X)])
        assert k.poly.coeffs_in_W == (_as_ratfun(-Z2), _as_ratfun(Poly(())), RF_ONE)

    def test_symmetric_functions_of_branches(self):
        # coefficient of W^i must be the signed elementary symmetric e_{d-i}
        rng = make_rng(51)
        for _ in range(10):
            d = rng.randrange(2, 4)
            branches = [rand_ratfun(rng, rng.randrange(0, 3), rng.randrange(0, 2)) for _ in range(d)]
            k = from_branches(branches)
            for i in range(d + 1):
                e = _as_ratfun(0)
                for subset in itertools.combinations(branches, d - i):
                    term = RF_ONE
                    for b in subset:
                        term = term * b
                    e = e + term
                sign = RF_ONE if (d - i) % 2 == 0 else -RF_ONE
                assert k.poly.coeff(i) == sign * e

    def test_duplicate_branches_keep_multiplicity(self):
        k = from_branches([_as_ratfun(X), _as_ratfun(X)])
        assert degree(k) == 2
        sf = k.squarefree_part()
        assert degree(sf) == 1
        assert sf.squarefree
        assert sf.poly == graph(X).poly


class TestCompose:
    def test_worked_example(self):
        # graph(w+1) after graph(z^2) is graph(z^2+1)
        c = compose(graph(poly(1, 1)), graph(Z2))
        assert c == graph(poly(1, 0, 1))

    def test_identity_neutral(self):
        samples = [
            graph(Z2),
            from_branches([rf((1, 1)), ONE_OVER_Z]),
            inverse(graph(Z2)),
        ]
        for k in samples:
            assert compose(graph(X), k).poly == k.poly
            assert compose(k, graph(X)).poly == k.poly

    def test_graph_functoriality(self):
        rng = make_rng(52)
        done = 0
        while done < 12:
            f = rand_ratfun(rng, rng.randrange(1, 4), rng.randrange(0, 2))
            g = rand_ratfun(rng, rng.randrange(1, 4), rng.randrange(0, 2))
            try:
                fg = f.compose(g)
                c = compose(graph(f), graph(g))
            except (ZeroDivisionError, ValueError):
                continue
            if fg.is_constant():
                continue
            assert c == graph(fg)
            done += 1

    def test_degree_bound(self):
        rng = make_rng(53)
        for _ in range(10):
            d1 = rng.randrange(1, 4)
            d2 = rng.randrange(1, 3)
            k1 = from_branches([_as_ratfun(rand_poly(rng, rng.randrange(1, 3), height=3)) for _ in range(d1)])
            k2 = from_branches([_as_ratfun(rand_poly(rng, rng.randrange(1, 3), height=3)) for _ in range(d2)])
            c = compose(k2, k1)
            assert degree(c) <= degree(k1) * degree(k2)

    def test_squarefree_option_collapses_repeats(self):
        doubled = from_branches([RF_X, RF_X])
        kept = compose(doubled, graph(X))
        assert degree(kept) == 2
        collapsed = compose(doubled, graph(X), squarefree=True)
        assert collapsed.squarefree
        assert collapsed.poly == graph(X).poly

    def test_branch_into_pole_is_degenerate(self):
        with pytest.raises(ValueError):
            compose(graph(ONE_OVER_Z), graph(constant(0)))


class TestInverse:
    def test_square_root_correspondence(self):
        inv = inverse(graph(Z2))
        assert inv.poly.coeffs_in_W == (_as_ratfun(-X), _as_ratfun(Poly(())), RF_ONE)
        assert degree(inv) == 2

    def test_mobius_inverse_is_graph_of_inverse_map(self):
        # w = 1/(z+1) inverts to z = (1-w)/w
        k = inverse(graph(rf((1,), (1, 1))))
        assert k == graph(rf((1, -1), (0, 1)))

    def test_constant_graph_has_no_inverse(self):
        assert inverse(graph(constant(5))) is None
        assert inverse(from_branches([_as_ratfun(constant(1)), _as_ratfun(constant(2))])) is None

    def test_involution(self):
        rng = make_rng(54)
        samples = [
            graph(Z2),
            from_branches([rf((1, 1)), ONE_OVER_Z]),
            from_branches([_as_ratfun(rand_poly(rng, 2, height=3, monic=True)), _as_ratfun(X)]),
        ]
        for k in samples:
            assert inverse(inverse(k)) == k

    def test_inverse_undoes_composition_on_fibers(self):
        k = graph(Z2)
        round_trip = compose(inverse(k), k)
        # z belongs to the fiber of round_trip over z
        for z0 in (2.0, -1.5, 0.5 + 0.5j):
            values = fiber(round_trip, z0)
            assert any(abs(w - z0) < 1e-8 for w in values)


class TestFiber:
    def test_graph_fiber(self):
        assert fiber(graph(Z2), 2) == [pytest.approx(4.0)]

    def test_square_root_fiber(self):
        values = fiber(inverse(graph(Z2)), 4)
        assert values == [pytest.approx(-2.0), pytest.approx(2.0)]

    def test_complex_fiber_sorted(self):
        values = fiber(inverse(graph(Z2)), -4)
        assert values == [pytest.approx(-2e0j), pytest.approx(2e0j)]

    def test_pole_precondition(self):
        with pytest.raises(ValueError):
            fiber(graph(ONE_OVER_Z), 0)

    def test_fiber_matches_coefficients(self):
        # reconstructed monic polynomial from the fiber values must match the
        # evaluated coefficients (relative 1e-8)
        rng = make_rng(55)
        for _ in range(8):
            d = rng.randrange(1, 4)
            k = from_branches([_as_ratfun(rand_poly(rng, rng.randrange(1, 3), height=3)) for _ in range(d)])
            z0 = complex(rng.randrange(-3, 4), rng.randrange(-3, 4)) + 0.5
            values = fiber(k, z0)
            assert len(values) == d
            prod = [1.0 + 0.0j]
            for w in values:
                nxt = [0.0j] * (len(prod) + 1)
                for i, c in enumerate(prod):
                    nxt[i + 1] += c
                    nxt[i] -= w * c
                prod = nxt
            scale = max(max(abs(c) for c in prod), 1.0)
            for i, c in enumerate(prod):
                expected = k.poly.coeff(i)
                num = complex(*_eval_pair(expected, z0))
                assert abs(c - num) <= 1e-8 * scale


def _eval_pair(r, z0):
    from rittforge.hcorr import _eval_ratfun

    v = _eval_ratfun(r, z0)
    return v.real, v.imag


class TestDegree:
    def test_graph_and_branches(self):
        assert degree(graph(ONE_OVER_Z)) == 1
        assert degree(from_branches([_as_ratfun(X), _as_ratfun(-X), _as_ratfun(Z2)])) == 3

    def test_compose_multiplies_for_function_graphs(self):
        c = compose(graph(Z2), graph(poly(0, 0, 0, 1)))
        assert degree(c) == 1
        two_valued = compose(inverse(graph(Z2)), inverse(graph(Z2)))
        assert degree(two_valued) == 4
