import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from tdesign.surd import QuadraticSurd, integer_sqrt, sign_sum_of_roots

fracs = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
radicands = st.integers(min_value=2, max_value=10**6)


def test_integer_sqrt():
    assert integer_sqrt(3600) == (60, True)
    assert integer_sqrt(120) == (10, False)
    assert integer_sqrt(0) == (0, True)
    with pytest.raises(ValueError):
        integer_sqrt(-1)


def test_sqrt_of_square_is_rational():
    s = QuadraticSurd.sqrt(Fraction(9, 4))
    assert s.is_rational() and s.to_fraction() == Fraction(3, 2)


def test_square_factors_are_pulled_out():
    s = QuadraticSurd.sqrt(72)  # 6 sqrt 2
    assert s * s == 72
    assert s == 6 * QuadraticSurd.sqrt(2)


def test_field_operations():
    a = QuadraticSurd(1, 2, 3)
    b = QuadraticSurd(Fraction(1, 2), -1, 3)
    assert (a * b) / b == a
    assert a * a.inverse() == 1
    assert a**3 == a * a * a
    assert a.norm() == 1 - 12
    assert (a + b) - b == a


def test_mismatched_radicands_rejected():
    with pytest.raises(ValueError):
        QuadraticSurd.sqrt(2) + QuadraticSurd.sqrt(3)


def test_cross_radicand_comparison():
    assert QuadraticSurd.sqrt(2) < QuadraticSurd.sqrt(3)
    assert QuadraticSurd(1, 1, 2).compare(QuadraticSurd(0, 1, 5)) == 1  # 2.414 > 2.236


def test_floor_ceil():
    s = QuadraticSurd(0, 1, 2)
    assert s.floor() == 1 and s.ceil() == 2
    big = QuadraticSurd(0, 1, 10**30 + 1)
    assert big.floor() == 10**15
    assert QuadraticSurd(Fraction(-7, 2)).floor() == -4
    assert QuadraticSurd(3).is_integer()


@given(fracs, fracs, radicands)
def test_sign_matches_sympy_free_squaring(a, b, d):
    s = QuadraticSurd(a, b, d)
    with mpmath.workprec(300):
        ref = mpmath.mpf(a.numerator) / a.denominator + mpmath.mpf(b.numerator) / b.denominator * mpmath.sqrt(d)
    if ref != 0:
        assert s.sign() == (1 if ref > 0 else -1)


@given(fracs, fracs, radicands, fracs, radicands)
def test_sign_sum_of_two_roots(u, v, d1, w, d2):
    with mpmath.workprec(400):
        ref = mpmath.mpf(u.numerator) / u.denominator + \
            mpmath.mpf(v.numerator) / v.denominator * mpmath.sqrt(d1) + \
            mpmath.mpf(w.numerator) / w.denominator * mpmath.sqrt(d2)
    got = sign_sum_of_roots(u, v, d1, w, d2)
    if abs(ref) > mpmath.mpf(10) ** -80:
        assert got == (1 if ref > 0 else -1)


def test_comparison_against_200_bit_floats():
    """10^4 random comparisons, including near-ties, must agree with 200-bit evaluation."""
    rng = random.Random(20240611)
    disagreements = 0
    for trial in range(10_000):
        d1, d2 = rng.randint(2, 10**6), rng.randint(2, 10**6)
        x = QuadraticSurd(Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**3)),
                          Fraction(rng.randint(-10**4, 10**4), rng.randint(1, 10**3)), d1)
        if trial % 4 == 0:  # near-tie: same radicand, tiny rational shift
            y = x + Fraction(rng.choice((-1, 1)), 10**12)
        else:
            y = QuadraticSurd(Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**3)),
                              Fraction(rng.randint(-10**4, 10**4), rng.randint(1, 10**3)), d2)
        diff = x.to_mpf(200) - y.to_mpf(200)
        ref = 0 if diff == 0 else (1 if diff > 0 else -1)
        if x.compare(y) != ref:
            disagreements += 1
    assert disagreements == 0


def test_hash_consistent_with_equality():
    assert hash(QuadraticSurd.sqrt(8)) == hash(2 * QuadraticSurd.sqrt(2))
    assert hash(QuadraticSurd(5)) == hash(Fraction(5))
