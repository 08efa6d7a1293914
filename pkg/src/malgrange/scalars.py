"""Exact scalar arithmetic over Z and Q.

Integers are Python ints (arbitrary precision, no overflow path exists);
rationals are ``fractions.Fraction``, which is kept reduced with a positive
denominator by construction.  This module pins down the operation families,
the canonical text formats, and the error behaviour the rest of the engine
relies on.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Integer = int
Rational = Fraction


class InexactDivisionError(ArithmeticError):
    """Raised when an exact quotient was requested but does not exist."""


# -- integer family ----------------------------------------------------------

def int_add(a: int, b: int) -> int:
    return a + b


def int_sub(a: int, b: int) -> int:
    return a - b


def int_mul(a: int, b: int) -> int:
    return a * b


def int_divexact(a: int, b: int) -> int:
    if b == 0 or a % b != 0:
        raise InexactDivisionError(f"inexact division: {a} by {b}")
    return a // b


def int_gcd(a: int, b: int) -> int:
    # gcd(0, 0) = 0 by convention; result is never negative.
    return math.gcd(a, b)


def int_cmp(a: int, b: int) -> int:
    return (a > b) - (a < b)


def int_sign(a: int) -> int:
    return (a > 0) - (a < 0)


# -- rational family ---------------------------------------------------------

def rational(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rat_neg(a: Fraction) -> Fraction:
    return -a


def rat_inv(a: Fraction) -> Fraction:
    if a == 0:
        raise ZeroDivisionError("division by zero")
    return 1 / a


def rat_cmp(a: Fraction, b: Fraction) -> int:
    return (a > b) - (a < b)


# -- canonical text formats --------------------------------------------------

_INT_RE = re.compile(r"-?\d+")
_RAT_RE = re.compile(r"(-?\d+)(?:/(-?\d+))?")


def format_integer(a: int) -> str:
    return str(a)


def parse_integer(text: str) -> int:
    if not _INT_RE.fullmatch(text.strip()):
        raise ValueError(f"not an integer literal: {text!r}")
    return int(text)


def format_rational(a: Fraction) -> str:
    """Canonical form: reduced, '-' prefix only, denominator omitted when 1."""
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def parse_rational(text: str) -> Fraction:
    m = _RAT_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return rational(num, den)
