import random
from fractions import Fraction

import pytest

from sicplane.exactpoly import BiPoly, GaussRat
from sicplane.killing import SpecialConformalKillingTensor


def rand_fraction(rng, lo=-9, hi=9, den=6):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def rand_gauss(rng, allow_imag=True):
    im = rand_fraction(rng) if (allow_imag and rng.random() < 0.4) else Fraction(0)
    return GaussRat(rand_fraction(rng), im)


def rand_nonzero_gauss(rng, allow_imag=True):
    while True:
        g = rand_gauss(rng, allow_imag)
        if g:
            return g


def rand_tensor(rng):
    return SpecialConformalKillingTensor(*(rand_gauss(rng) for _ in range(5)))


def rand_bipoly(rng, max_deg=3, terms=5):
    coeffs = {}
    for _ in range(terms):
        i, j = rng.randint(0, max_deg), rng.randint(0, max_deg)
        coeffs[(i, j)] = rand_gauss(rng)
    return BiPoly(coeffs)


@pytest.fixture
def rng():
    return random.Random(20240817)
