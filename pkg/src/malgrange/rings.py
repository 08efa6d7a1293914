"""Multivariate polynomial ring Q[x1..xn] with exact rational coefficients.

Polynomials are stored in a canonical form: terms sorted descending in
graded-reverse-lexicographic order, no zero coefficients, monomials pairwise
distinct.  Structural equality is therefore semantic equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Tuple

from .scalars import format_rational

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class RingSpec:
    """The commutative polynomial ring over Q in the named variables."""

    var_names: Tuple[str, ...]

    def __post_init__(self):
        if len(self.var_names) < 1:
            raise ValueError("ring needs at least one variable")
        if len(set(self.var_names)) != len(self.var_names):
            raise ValueError("variable names must be pairwise distinct")
        for name in self.var_names:
            if not name or not name.isidentifier():
                raise ValueError(f"bad variable name: {name!r}")

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    def var_index(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __str__(self) -> str:
        return "Q[" + ",".join(self.var_names) + "]"


def ring(*names: str) -> RingSpec:
    return RingSpec(tuple(names))


# -- monomials ----------------------------------------------------------------

def mono_one(nvars: int) -> Monomial:
    return (0,) * nvars


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial well-order given by a sort key; larger key = larger monomial."""

    name: str

    def key(self, exps: Monomial):
        if self.name == "lex":
            return exps
        # grevlex: total degree first, ties broken by the *smallest* exponent
        # in the last position where they differ winning.
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def __str__(self) -> str:
        return self.name


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


# -- polynomials ---------------------------------------------------------------

class Poly:
    """Immutable polynomial in canonical (grevlex-descending) form."""

    __slots__ = ("ring", "terms")

    ring: RingSpec
    terms: Tuple[Tuple[Monomial, Fraction], ...]

    def __init__(self, ring: RingSpec, terms: Iterable[Tuple[Monomial, Fraction]],
                 *, _canonical: bool = False):
        object.__setattr__(self, "ring", ring)
        if _canonical:
            object.__setattr__(self, "terms", tuple(terms))
            return
        acc: dict = {}
        for exps, coeff in terms:
            exps = tuple(exps)
            if len(exps) != ring.nvars:
                raise ValueError("monomial length does not match ring")
            c = acc.get(exps, 0) + coeff
            if c == 0:
                acc.pop(exps, None)
            else:
                acc[exps] = Fraction(c)
        ordered = sorted(acc.items(), key=lambda t: GREVLEX.key(t[0]), reverse=True)
        object.__setattr__(self, "terms", tuple(ordered))

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    # constructors

    @staticmethod
    def zero(ring: RingSpec) -> "Poly":
        return Poly(ring, (), _canonical=True)

    @staticmethod
    def constant(ring: RingSpec, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly.zero(ring)
        return Poly(ring, ((mono_one(ring.nvars), c),), _canonical=True)

    @staticmethod
    def one(ring: RingSpec) -> "Poly":
        return Poly.constant(ring, 1)

    @staticmethod
    def variable(ring: RingSpec, index: int, power: int = 1) -> "Poly":
        exps = tuple(power if i == index else 0 for i in range(ring.nvars))
        return Poly(ring, ((exps, Fraction(1)),), _canonical=True)

    @staticmethod
    def term(ring: RingSpec, coeff, exps: Monomial) -> "Poly":
        coeff = Fraction(coeff)
        if coeff == 0:
            return Poly.zero(ring)
        return Poly(ring, ((tuple(exps), coeff),), _canonical=True)

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1
                                  and mono_degree(self.terms[0][0]) == 0)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[0][1]

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(mono_degree(m) for m, _ in self.terms)

    def leading_term(self, order: MonomialOrder = GREVLEX) -> Tuple[Fraction, Monomial]:
        if not self.terms:
            raise ValueError("no leading term: zero polynomial")
        if order is GREVLEX or order.name == "grevlex":
            m, c = self.terms[0]
            return c, m
        m, c = max(self.terms, key=lambda t: order.key(t[0]))
        return c, m

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.terms)

    # arithmetic

    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.ring, self.terms + other.terms)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, tuple((m, -c) for m, c in self.terms), _canonical=True)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                c = acc.get(m, 0) + c1 * c2
                if c == 0:
                    acc.pop(m, None)
                else:
                    acc[m] = c
        ordered = sorted(acc.items(), key=lambda t: GREVLEX.key(t[0]), reverse=True)
        return Poly(self.ring, tuple(ordered), _canonical=True)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly.zero(self.ring)
        return Poly(self.ring, tuple((m, c * k) for m, k in self.terms), _canonical=True)

    def mul_term(self, coeff: Fraction, exps: Monomial) -> "Poly":
        """Multiply by the single term coeff * x^exps (stays canonical)."""
        if coeff == 0:
            return Poly.zero(self.ring)
        return Poly(self.ring,
                    tuple((mono_mul(m, exps), coeff * c) for m, c in self.terms),
                    _canonical=True)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        out = Poly.one(self.ring)
        for _ in range(n):
            out = out * self
        return out

    # identity & text

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.ring, self.terms))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)})"


def format_monomial(ring: RingSpec, exps: Monomial) -> str:
    parts = []
    for name, e in zip(ring.var_names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    """Canonical text form; grevlex-descending, '-' joins, no '+' prefix."""
    if not f.terms:
        return "0"
    chunks = []
    for i, (m, c) in enumerate(f.terms):
        mono = format_monomial(f.ring, m)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{format_rational(mag)}*{mono}"
        else:
            body = format_rational(mag)
        if i == 0:
            chunks.append(("-" if c < 0 else "") + body)
        else:
            chunks.append((" - " if c < 0 else " + ") + body)
    return "".join(chunks)


def poly_sum(ring: RingSpec, polys: Sequence[Poly]) -> Poly:
    out = Poly.zero(ring)
    for p in polys:
        out = out + p
    return out
