"""
Unit tests for the Laurent polynomial ring.

These tests check ring arithmetic, quantum integers, exact division by
polynomials in q, specialization and substitution.
"""

from fractions import Fraction

import pytest

from src.ring.laurent import (
    LAMBDA,
    ONE,
    Q,
    Q13,
    S,
    ZERO,
    LaurentPoly,
    ParamPoint,
    PointMode,
    divide_lambda_power,
    exact_divide,
    qnum,
    ring_arith,
)
from src.utils.errors import NotDivisible, ZeroToNegativePower


def test_difference_of_squares():
    """(q + q^-1)(q - q^-1) = q^2 - q^-2."""
    assert (Q + Q**-1) * LAMBDA == Q**2 - Q**-2


def test_zero_terms_are_dropped():
    """q - q is the zero polynomial and compares equal to 0."""
    assert (Q - Q).is_zero()
    assert Q - Q == 0
    assert LaurentPoly.const(3) == 3


def test_quantum_integers():
    """[3] = q^2 + 1 + q^-2, [0] = 0 and [-n] = -[n]."""
    assert qnum(3) == Q**2 + 1 + Q**-2
    assert qnum(1) == ONE
    assert qnum(0) == ZERO
    assert qnum(-2) == -(Q + Q**-1)


def test_exact_divide_by_lambda():
    """(q^2 - q^-2) / (q - q^-1) = q + q^-1, with the other variables carried along."""
    assert exact_divide(Q**2 - Q**-2, LAMBDA) == Q + Q**-1
    assert exact_divide((Q**2 - Q**-2) * S, LAMBDA) == (Q + Q**-1) * S


def test_exact_divide_remainder():
    """
    q^2 + 1 is not a multiple of q - q^-1.
    """
    with pytest.raises(NotDivisible):
        exact_divide(Q**2 + 1, LAMBDA)


def test_exact_divide_rejects_s_divisor():
    """Divisors must involve only q."""
    with pytest.raises(ValueError):
        exact_divide(Q, S + 1)


def test_divide_lambda_power():
    """lambda^3 s / lambda^3 = s, and lambda^0 leaves the polynomial alone."""
    assert divide_lambda_power(LAMBDA**3 * S, 3) == S
    assert divide_lambda_power(Q + 1, 0) == Q + 1


def test_specialize_exact():
    """q + s^-1 at q = 3/2, s = 5/7 is 3/2 + 7/5 = 29/10."""
    at = ParamPoint.exact(q=Fraction(3, 2), s=Fraction(5, 7))
    assert (Q + S**-1).specialize(at) == Fraction(29, 10)


def test_specialize_zero_to_negative_power():
    """A zero value meeting a negative exponent is an error."""
    with pytest.raises(ZeroToNegativePower):
        (Q**-1).specialize(ParamPoint.exact(q=0))


def test_substitute_units():
    """q13 -> -s turns q13 s into -s^2, and q -> q^-1 inverts powers of q."""
    assert (Q13 * S).substitute({"q13": -S}) == -(S**2)
    assert (Q**-2 + Q).substitute({"q": Q**-1}) == Q**2 + Q**-1


def test_inverse_needs_a_unit():
    """Only single-term polynomials are invertible."""
    assert (Q**2 * S).scale(2).inverse() == (Q**-2 * S**-1).scale(Fraction(1, 2))
    with pytest.raises(NotDivisible):
        (Q + 1).inverse()


def test_json_format():
    """2 q s^-1 is serialized as one term with its full exponent vector."""
    p = LaurentPoly.monomial(2, q=1, s=-1)
    assert p.to_json() == {"terms": [{"c": "2/1", "e": [1, -1, 0, 0, 0]}]}
    assert LaurentPoly.from_json(p.to_json()) == p


def test_ring_arith_dispatch():
    """The named operations agree with the operators."""
    assert ring_arith(Q, S, "mul") == LaurentPoly.monomial(1, q=1, s=1)
    assert ring_arith(Q, S, "neg") == -Q
    with pytest.raises(ValueError):
        ring_arith(Q, S, "div")


def test_param_point_validation():
    """Unknown variables and floats in exact mode are rejected."""
    with pytest.raises(ValueError):
        ParamPoint.exact(x=1)
    with pytest.raises(ValueError):
        ParamPoint.exact(q=1.5)
    assert ParamPoint.ones()["q23"] == 1


def test_monomial_factors_cancel():
    """q^-1 (q + q^2) and 1 + q are the same element and hash alike."""
    p = Q**-1 * (Q + Q**2)
    assert p == 1 + Q
    assert hash(p) == hash(1 + Q)
    assert (Q**3 - Q**3 * S).degree_range("q") == (3, 3)


def test_exact_divide_with_shift():
    """(q^2 - q^-2) s^-1 / lambda = (q + q^-1) s^-1."""
    p = (Q**2 - Q**-2) * S**-1
    assert exact_divide(p, LAMBDA) == (Q + Q**-1) * S**-1
    assert exact_divide(p * Q**5, LAMBDA * Q**-2) == (Q + Q**-1) * S**-1 * Q**7


def test_substitute_polynomial_image():
    """s -> q + 1 in s^2 q^-1 gives q + 2 + q^-1."""
    assert (S**2 * Q**-1).substitute({"s": Q + 1}) == Q + 2 + Q**-1
    with pytest.raises(NotDivisible):
        (S**-1).substitute({"s": Q + 1})


def test_point_mode():
    assert ParamPoint.exact(q=2).mode is PointMode.EXACT
    assert ParamPoint.floating(q=2.0).mode == "float"
    assert not ParamPoint.floating(q=2.0).is_exact
