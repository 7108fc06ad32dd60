"""Shared helpers for the seeded randomized tests."""

import os
import random
from fractions import Fraction

from rittforge.gaussian import GaussianRational
from rittforge.poly import Poly
from rittforge.ratfun import RatFun

DEFAULT_SEED = int(os.environ.get("RITTFORGE_SEED", "1729"))


def make_rng(offset=0):
    return random.Random(DEFAULT_SEED + offset)


def rand_fraction(rng, height=9):
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def rand_gaussian(rng, height=9, rational_only=False):
    re = rand_fraction(rng, height)
    im = Fraction(0) if rational_only else rand_fraction(rng, height)
    return GaussianRational(re, im)


def rand_nonzero_gaussian(rng, height=9):
    while True:
        x = rand_gaussian(rng, height)
        if x:
            return x


def rand_poly(rng, degree, height=5, monic=False):
    coeffs = [rand_gaussian(rng, height) for _ in range(degree)]
    coeffs.append(
        GaussianRational(Fraction(1), Fraction(0))
        if monic
        else rand_nonzero_gaussian(rng, height)
    )
    return Poly(tuple(coeffs))


def rand_ratfun(rng, num_degree, den_degree, height=4):
    num = rand_poly(rng, num_degree, height)
    den = rand_poly(rng, den_degree, height)
    return RatFun(num, den)
