"""
Unit tests for characteristic polynomials over prime fields and Newton traces.
"""

import random
from fractions import Fraction

import numpy as np
import pytest

from src.linalg.modular import (
    PRIME_BITS,
    charpoly_mod,
    fraction_mod,
    is_prime,
    modular_charpoly,
    newton_traces,
    power_sums_from_charpoly,
    random_primes,
)
from src.linalg.poly_matrix import PolyMatrix
from src.ring.laurent import Q, S, ParamPoint
from src.utils.errors import BadPrime, NonSquare


def test_is_prime():
    """Small known cases."""
    assert is_prime(2) and is_prime(65537) and is_prime(101)
    assert not is_prime(1) and not is_prime(65535) and not is_prime(91)


def test_random_primes_are_distinct_and_sized():
    """Primes come from [2^23, 2^24) and never repeat."""
    primes = random_primes(random.Random(7), 4)
    assert len(set(primes)) == 4
    assert all(2 ** (PRIME_BITS - 1) <= p < 2**PRIME_BITS and is_prime(p) for p in primes)


def test_random_primes_are_seeded():
    """The same seed gives the same primes."""
    assert random_primes(random.Random(3), 3) == random_primes(random.Random(3), 3)


def test_fraction_mod():
    """1/2 = 4 mod 7; a denominator divisible by the prime is a BadPrime."""
    assert fraction_mod(Fraction(1, 2), 7) == 4
    with pytest.raises(BadPrime):
        fraction_mod(Fraction(1, 7), 7)


def test_charpoly_two_by_two():
    """[[1, 2], [3, 4]] has x^2 - 5x - 2, i.e. (1, 96, 99) mod 101."""
    a = np.array([[1, 2], [3, 4]], dtype=np.int64)
    assert charpoly_mod(a, 101) == [1, 96, 99]


def test_charpoly_cyclic_permutation():
    """The 3-cycle permutation matrix has x^3 - 1."""
    a = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=np.int64)
    assert charpoly_mod(a, 101) == [1, 0, 0, 100]


def test_charpoly_needs_square():
    """A 2x3 array has no characteristic polynomial."""
    with pytest.raises(NonSquare):
        charpoly_mod(np.zeros((2, 3), dtype=np.int64), 101)


def test_modular_charpoly_of_polymatrix():
    """diag(q, s) at q = 2, s = 3 gives (x - 2)(x - 3) = x^2 - 5x + 6."""
    m = PolyMatrix.diag([Q, S])
    assert modular_charpoly(m, ParamPoint.exact(q=2, s=3), 101) == [1, 96, 6]


def test_power_sums_from_charpoly():
    """Tr A = 5, Tr A^2 = 29, Tr A^3 = 155 = 54 mod 101 for A = [[1, 2], [3, 4]]."""
    assert power_sums_from_charpoly([1, 96, 99], 3, 101) == [5, 29, 54]


def test_newton_traces_exact_and_float():
    """diag(1/2, 3): traces 7/2 and 37/4, exactly and in floating point."""
    m = PolyMatrix.diag([Q, 3])
    exact = newton_traces(m, ParamPoint.exact(q=Fraction(1, 2)), 2)
    assert exact == [Fraction(7, 2), Fraction(37, 4)]
    floats = newton_traces(m, ParamPoint.floating(q=0.5), 2)
    assert floats == pytest.approx([3.5, 9.25])


def test_symbolic_newton_traces():
    """[[q, 1], [s, 0]] has Tr = q, q^2 + 2s and q^3 + 3qs for k = 1, 2, 3."""
    m = PolyMatrix.from_rows([[Q, 1], [S, 0]])
    assert newton_traces(m, None, 3) == [Q, Q**2 + 2 * S, Q**3 + 3 * Q * S]


def test_symbolic_traces_specialize_to_exact_ones():
    """Evaluating the Laurent traces agrees with the exact traces at a point."""
    m = PolyMatrix.from_rows([[Q, S**-1], [S, Q**-1]])
    at = ParamPoint.exact(q=Fraction(3, 2), s=Fraction(5, 7))
    symbolic = newton_traces(m, None, 4)
    assert [t.specialize(at) for t in symbolic] == newton_traces(m, at, 4)
