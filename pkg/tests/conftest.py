"""Shared oracle: the lattice count done the slow, obviously-correct way."""

from fractions import Fraction

import pytest


def _brute_count(p: int, q: int, r: int) -> tuple[int, int, int]:
    """(sigma_plus, sigma_minus, nullity) by direct rational enumeration.

    Walks every lattice point (i,j,k) and classifies s = i/p + j/q + k/r
    by its residue mod 2, with no floor tricks and no floats.  Small cubes
    only; exists to check the fast counters, not to be fast.
    """
    plus = minus = null = 0
    for i in range(1, p):
        for j in range(1, q):
            for k in range(1, r):
                s = Fraction(i, p) + Fraction(j, q) + Fraction(k, r)
                if s.denominator == 1:
                    null += 1
                elif s % 2 < 1:
                    plus += 1
                else:
                    minus += 1
    return plus, minus, null


@pytest.fixture
def brute_count():
    return _brute_count
