"""Exact coefficient arithmetic in Q(v) and Q(sqrt(q))."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from diskhall.scalar import (ONE, Q, V, ZERO, PoleError, QuadraticScalar,
                             RationalFunctionV, evaluate_at, is_prime_power,
                             prime_power_decompose)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def test_canonical_form_is_structural():
    # (v^2 - 1)/(v - 1) must reduce to v + 1 on construction
    x = (V * V - ONE) / (V - ONE)
    assert x == V + ONE
    assert hash(x) == hash(V + ONE)


def test_v_and_q_powers():
    assert V * V == Q
    assert RationalFunctionV.v_power(-3) * RationalFunctionV.v_power(3) == ONE
    assert RationalFunctionV.q_power(2) == V ** 4
    assert V ** 0 == ONE


def test_negative_integer_pow():
    assert V ** -2 == ONE / Q
    x = (V + ONE) ** -1
    assert x * (V + ONE) == ONE


def test_pow_rejects_fractional_exponent():
    with pytest.raises(TypeError):
        V ** 0.5


def test_zero_and_division():
    assert ZERO.is_zero()
    assert (V - V).is_zero()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


@given(rationals, rationals)
def test_rational_embedding_is_a_homomorphism(a, b):
    ra = RationalFunctionV.from_rational(a)
    rb = RationalFunctionV.from_rational(b)
    assert ra + rb == RationalFunctionV.from_rational(a + b)
    assert ra * rb == RationalFunctionV.from_rational(a * b)


@given(st.integers(-6, 6), st.integers(-6, 6))
def test_v_power_additivity(n, k):
    assert RationalFunctionV.v_power(n) * RationalFunctionV.v_power(k) \
        == RationalFunctionV.v_power(n + k)


def test_field_inverse_roundtrip():
    x = (V ** 3 - 2 * V + ONE) / (V ** 2 + 7)
    assert x * x.inverse() == ONE
    assert ONE / x == x.inverse()


def test_str_is_readable():
    assert str(V) == "v"
    assert str(ONE / (V ** 2 - ONE)) == "1/(-1 + v^2)"


# -- specialization at v = sqrt(q) ------------------------------------------

def test_evaluate_at_non_square():
    s = evaluate_at(V, 2)
    assert (s.a, s.b) == (0, 1)
    assert evaluate_at(V ** 2, 2) == 2


def test_evaluate_at_perfect_square_folds():
    s = evaluate_at(V, 4)
    assert (s.a, s.b) == (2, 0)
    assert evaluate_at(V ** -1 / (V ** 2 - ONE), 4) == Fraction(1, 6)
    assert evaluate_at(V ** -1 / (V ** 2 - ONE), 9) == Fraction(1, 24)


def test_evaluate_pole():
    with pytest.raises(PoleError):
        evaluate_at(ONE / (V ** 2 - 2), 2)


@given(rationals, rationals, rationals, rationals)
def test_quadratic_scalar_ring_laws(a, b, c, d):
    x = QuadraticScalar(2, a, b)
    y = QuadraticScalar(2, c, d)
    assert x * y == y * x
    assert x * (y + y) == x * y + x * y
    if not x.is_zero():
        assert x * x.inverse() == QuadraticScalar(2, 1)


def test_quadratic_scalar_mixed_q_rejected():
    with pytest.raises(ValueError):
        QuadraticScalar(2, 1) + QuadraticScalar(3, 1)


def test_sqrt_q_power():
    assert QuadraticScalar.sqrt_q_power(2, 2) == 2
    assert QuadraticScalar.sqrt_q_power(2, -2) == Fraction(1, 2)
    odd = QuadraticScalar.sqrt_q_power(3, 3)
    assert (odd.a, odd.b) == (0, 3)


def test_prime_power_decompose():
    assert prime_power_decompose(8) == (2, 3)
    assert prime_power_decompose(9) == (3, 2)
    assert prime_power_decompose(7) == (7, 1)
    assert prime_power_decompose(12) is None
    assert prime_power_decompose(1) is None
    assert is_prime_power(27) and not is_prime_power(6)
