from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from malgrange.scalars import (InexactDivisionError, format_integer,
                               format_rational, int_divexact, int_gcd,
                               int_sign, parse_integer, parse_rational,
                               rat_cmp, rat_inv, rational)

ints = st.integers(min_value=-10**12, max_value=10**12)
rats = st.fractions(min_value=-1000, max_value=1000, max_denominator=997)


def test_divexact_exact():
    assert int_divexact(84, 7) == 12
    assert int_divexact(-84, 7) == -12
    assert int_divexact(0, 5) == 0


def test_divexact_rejects_inexact():
    with pytest.raises(InexactDivisionError):
        int_divexact(7, 2)


def test_divexact_rejects_zero_divisor():
    with pytest.raises(InexactDivisionError):
        int_divexact(1, 0)


def test_big_product_roundtrips_through_decimal():
    big = 2**70
    assert parse_integer(format_integer(big * big)) == 2**140


def test_harmonic_sum_matches_accumulation_oracle():
    total = Fraction(0)
    for k in range(1, 21):
        total = total + Fraction(1, k)
    # second path: accumulate over a common denominator
    from math import lcm
    den = lcm(*range(1, 21))
    num = sum(den // k for k in range(1, 21))
    assert total == Fraction(num, den)


def test_gcd_nonnegative():
    assert int_gcd(-6, 4) == 2
    assert int_gcd(0, 0) == 0


def test_rational_normalizes():
    assert rational(2, 4) == Fraction(1, 2)
    assert rational(3, -6) == Fraction(-1, 2)


def test_rat_inv_zero():
    with pytest.raises(ZeroDivisionError):
        rat_inv(Fraction(0))


def test_sign_and_cmp():
    assert int_sign(-3) == -1 and int_sign(0) == 0 and int_sign(9) == 1
    assert rat_cmp(Fraction(1, 3), Fraction(1, 2)) == -1
    assert rat_cmp(Fraction(1, 2), Fraction(1, 2)) == 0


@given(ints)
def test_integer_format_parse_roundtrip(a):
    assert parse_integer(format_integer(a)) == a


@given(rats)
def test_rational_format_parse_roundtrip(a):
    assert parse_rational(format_rational(a)) == a


@given(rats, rats)
def test_rational_field_axioms(a, b):
    assert a + b == b + a
    assert a * b == b * a
    if b != 0:
        assert (a / b) * b == a


def test_rational_format_shape():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
