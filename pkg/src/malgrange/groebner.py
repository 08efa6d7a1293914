"""Groebner bases for submodules of free modules R^k over Q[x1..xn].

Provides exact division with remainder, Buchberger completion to the unique
reduced basis, syzygy computation, and membership solving.  All kernel,
cokernel, and equality decisions elsewhere in the engine reduce to these
operations.

Module monomials are (position, monomial) pairs.  The default order is
position-over-term with e1 > e2 > ... over grevlex, which makes the
elimination-style syzygy and lifting computations below correct.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from .rings import (GREVLEX, MonomialOrder, Monomial, Poly, RingSpec,
                    mono_div, mono_divides, mono_lcm, mono_mul, mono_one)


@dataclass(frozen=True)
class ModuleOrder:
    """Well-order on (position, monomial) pairs; positions rank e1 > e2 > ..."""

    base: MonomialOrder = GREVLEX
    scheme: str = "POT"

    def __post_init__(self):
        if self.scheme not in ("POT", "TOP"):
            raise ValueError("scheme must be POT or TOP")

    def key(self, pos: int, exps: Monomial):
        if self.scheme == "POT":
            return (-pos, self.base.key(exps))
        return (self.base.key(exps), -pos)

    def __str__(self) -> str:
        return f"{self.scheme}/{self.base}"


POT_GREVLEX = ModuleOrder(GREVLEX, "POT")


class Vector:
    """Element of the free module R^k, stored as a k-tuple of polynomials."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring: RingSpec, entries: Iterable[Poly]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "entries", tuple(entries))
        for p in self.entries:
            if p.ring != ring:
                raise ValueError("ring mismatch in vector entry")

    def __setattr__(self, *_):
        raise AttributeError("Vector is immutable")

    @staticmethod
    def zero(ring: RingSpec, rank: int) -> "Vector":
        z = Poly.zero(ring)
        return Vector(ring, (z,) * rank)

    @staticmethod
    def unit(ring: RingSpec, rank: int, pos: int) -> "Vector":
        one = Poly.one(ring)
        z = Poly.zero(ring)
        return Vector(ring, tuple(one if i == pos else z for i in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.entries)

    def __add__(self, other: "Vector") -> "Vector":
        if self.rank != other.rank:
            raise ValueError("vector rank mismatch")
        return Vector(self.ring, (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Vector") -> "Vector":
        if self.rank != other.rank:
            raise ValueError("vector rank mismatch")
        return Vector(self.ring, (a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Vector":
        return Vector(self.ring, (-a for a in self.entries))

    def scale(self, c) -> "Vector":
        return Vector(self.ring, (p.scale(c) for p in self.entries))

    def poly_mul(self, f: Poly) -> "Vector":
        return Vector(self.ring, (p * f for p in self.entries))

    def mul_term(self, coeff: Fraction, exps: Monomial) -> "Vector":
        return Vector(self.ring, (p.mul_term(coeff, exps) for p in self.entries))

    def add_term(self, pos: int, coeff: Fraction, exps: Monomial) -> "Vector":
        t = Poly.term(self.ring, coeff, exps)
        return Vector(self.ring, (p + t if i == pos else p
                                  for i, p in enumerate(self.entries)))

    def leading(self, order: ModuleOrder) -> Tuple[int, Monomial, Fraction]:
        """(position, monomial, coefficient) of the maximal module term."""
        best = None
        best_key = None
        for pos, p in enumerate(self.entries):
            if p.is_zero():
                continue
            c, m = p.leading_term(order.base)
            k = order.key(pos, m)
            if best_key is None or k > best_key:
                best_key = k
                best = (pos, m, c)
        if best is None:
            raise ValueError("zero vector has no leading term")
        return best

    def concat(self, other: "Vector") -> "Vector":
        return Vector(self.ring, self.entries + other.entries)

    def slice(self, start: int, stop: int) -> "Vector":
        return Vector(self.ring, self.entries[start:stop])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Vector) and self.ring == other.ring
                and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.ring, self.entries))

    def __str__(self) -> str:
        return "[" + ", ".join(str(p) for p in self.entries) + "]"

    def __repr__(self) -> str:
        return f"Vector({self})"


# -- division ------------------------------------------------------------------

def _to_scaled_ints(terms: Iterable[Tuple[Tuple[int, Monomial], Fraction]],
                    ) -> Tuple[Fraction, dict]:
    """(s, D) with D a primitive integer term dict and s * D the input."""
    items = list(terms)
    denom_lcm = 1
    for _, c in items:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [(k, c.numerator * (denom_lcm // c.denominator)) for k, c in items]
    num_gcd = 0
    for _, n in ints:
        num_gcd = gcd(num_gcd, n)
    if num_gcd == 0:
        return Fraction(1), {}
    return Fraction(num_gcd, denom_lcm), {k: n // num_gcd for k, n in ints}


def divide(v: Vector, basis: Sequence[Vector], order: ModuleOrder = POT_GREVLEX,
           ) -> Tuple[Vector, List[Poly]]:
    """Multivariate division: v = sum(q[i] * basis[i]) + r.

    No term of r is divisible (same position) by any basis leading term.
    Among applicable reducers the first in the given sequence wins.

    The loop runs on (rational scalar) * (primitive integer term dict)
    representations of the dividend and the divisors, so the per-term
    arithmetic is plain integer work; the emitted quotients and remainder
    are the exact rationals of the textbook division.
    """
    ring = v.ring
    for g in basis:
        if g.rank != v.rank:
            raise ValueError("vector rank mismatch")
    leads = [g.leading(order) for g in basis]
    scale, p = _to_scaled_ints(
        ((pos, exps), c)
        for pos, poly in enumerate(v.entries) for exps, c in poly.terms)
    divisors = []
    for g, (gpos, gexps, _) in zip(basis, leads):
        gscale, gd = _to_scaled_ints(
            ((pos, exps), c)
            for pos, poly in enumerate(g.entries) for exps, c in poly.terms)
        divisors.append((gscale, gd, gd[(gpos, gexps)]))

    def term_key(k):
        return order.key(k[0], k[1])

    quotients: List[dict] = [{} for _ in basis]
    rem_terms: List[List[Tuple[int, Monomial, Fraction]]] = [
        [] for _ in range(v.rank)]
    steps = 0
    while p:
        pos, exps = max(p, key=term_key)
        a = p[(pos, exps)]
        for i, (gpos, gexps, _) in enumerate(leads):
            if gpos == pos and mono_divides(gexps, exps):
                gscale, gd, b = divisors[i]
                shift = mono_div(exps, gexps)
                factor = scale * a / (gscale * b)
                quotients[i][shift] = quotients[i].get(shift, 0) + factor
                d = gcd(a, b)
                ap, bp = a // d, b // d
                if bp != 1:
                    p = {k: bp * c for k, c in p.items()}
                    scale /= bp
                for (gp, ge), gc in gd.items():
                    kk = (gp, mono_mul(ge, shift))
                    nv = p.get(kk, 0) - ap * gc
                    if nv:
                        p[kk] = nv
                    else:
                        p.pop(kk, None)
                steps += 1
                if steps % 32 == 0 and p:
                    content = 0
                    for c in p.values():
                        content = gcd(content, c)
                    if content > 1:
                        p = {k: c // content for k, c in p.items()}
                        scale *= content
                break
        else:
            rem_terms[pos].append((pos, exps, scale * a))
            del p[(pos, exps)]
    remainder = Vector(ring, (
        Poly(ring, [(exps, c) for _, exps, c in terms])
        for terms in rem_terms))
    quots = [Poly(ring, [(exps, Fraction(c)) for exps, c in q.items()])
             for q in quotients]
    return remainder, quots


def _reduce_primitive(v: Vector, basis: Sequence[Vector],
                      order: ModuleOrder) -> Vector:
    """Remainder of v against basis, up to a positive rational unit.

    Same reduction steps as divide, but no quotient bookkeeping and no
    rational scalar at all: the working dividend stays a primitive
    integer term dict, which is all a Groebner completion round needs
    (every pushed element is renormalized anyway).
    """
    ring = v.ring
    for g in basis:
        if g.rank != v.rank:
            raise ValueError("vector rank mismatch")
    leads = [g.leading(order) for g in basis]
    _, p = _to_scaled_ints(
        ((pos, exps), c)
        for pos, poly in enumerate(v.entries) for exps, c in poly.terms)
    divisors = []
    for g, (gpos, gexps, _) in zip(basis, leads):
        _, gd = _to_scaled_ints(
            ((pos, exps), c)
            for pos, poly in enumerate(g.entries) for exps, c in poly.terms)
        divisors.append((gd, gd[(gpos, gexps)]))

    def term_key(k):
        return order.key(k[0], k[1])

    rem: dict = {}
    steps = 0
    while p:
        pos, exps = max(p, key=term_key)
        a = p[(pos, exps)]
        for i, (gpos, gexps, _) in enumerate(leads):
            if gpos == pos and mono_divides(gexps, exps):
                gd, b = divisors[i]
                shift = mono_div(exps, gexps)
                d = gcd(a, b)
                ap, bp = a // d, b // d
                if bp != 1:
                    p = {k: bp * c for k, c in p.items()}
                    if rem:
                        rem = {k: bp * c for k, c in rem.items()}
                for (gp, ge), gc in gd.items():
                    kk = (gp, mono_mul(ge, shift))
                    nv = p.get(kk, 0) - ap * gc
                    if nv:
                        p[kk] = nv
                    else:
                        p.pop(kk, None)
                steps += 1
                if steps % 32 == 0:
                    content = 0
                    for c in p.values():
                        content = gcd(content, c)
                    for c in rem.values():
                        content = gcd(content, c)
                    if content > 1:
                        p = {k: c // content for k, c in p.items()}
                        rem = {k: c // content for k, c in rem.items()}
                break
        else:
            rem[(pos, exps)] = a
            del p[(pos, exps)]
    if not rem:
        return Vector.zero(ring, v.rank)
    content = 0
    for c in rem.values():
        content = gcd(content, c)
    lead_key = max(rem, key=term_key)
    sign = 1 if rem[lead_key] > 0 else -1
    content *= sign
    per_pos: List[List[Tuple[Monomial, Fraction]]] = [
        [] for _ in range(v.rank)]
    for (pos, exps), c in rem.items():
        per_pos[pos].append((exps, Fraction(c // content)))
    return Vector(ring, (Poly(ring, terms) for terms in per_pos))


# -- Buchberger completion -------------------------------------------------------

def _concentrated_position(v: Vector) -> Optional[int]:
    """The unique position carrying all nonzero entries, if there is one."""
    pos = None
    for i, p in enumerate(v.entries):
        if not p.is_zero():
            if pos is not None:
                return None
            pos = i
    return pos


def _scale_cof(cof: Optional[List[Poly]], c) -> Optional[List[Poly]]:
    if cof is None:
        return None
    return [p.scale(c) for p in cof]


def _primitive_scale(v: Vector, order: ModuleOrder) -> Fraction:
    """Unit c such that c*v has coprime integer coefficients, positive lead.

    Working bases are kept in this form rather than monic: it bounds the
    rational arithmetic during completion (monic scaling lets numerators and
    denominators compound across reduction steps).
    """
    coeffs = [c for p in v.entries for _, c in p.terms]
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    num_gcd = 0
    for c in coeffs:
        num_gcd = gcd(num_gcd, c.numerator * (denom_lcm // c.denominator))
    scale = Fraction(denom_lcm, num_gcd)
    if v.leading(order)[2] * scale < 0:
        scale = -scale
    return scale


def _combine_cof(cof: Optional[List[Poly]], quotients: Sequence[Poly],
                 cof_rows: Sequence[Optional[List[Poly]]],
                 ) -> Optional[List[Poly]]:
    """Cofactors of v - sum(q_b * basis_b) given cofactors of v and basis."""
    if cof is None:
        return None
    out = list(cof)
    for q, row in zip(quotients, cof_rows):
        if q.is_zero():
            continue
        for k, c in enumerate(row):
            if not c.is_zero():
                out[k] = out[k] - c * q
    return out


def _s_vector_cof(f: Vector, cf, g: Vector, cg, order: ModuleOrder):
    """(s, cof): the S-vector of (f, g) with its tracked cofactors."""
    _, fexps, fcoeff = f.leading(order)
    _, gexps, gcoeff = g.leading(order)
    l = mono_lcm(fexps, gexps)
    ac, am = 1 / fcoeff, mono_div(l, fexps)
    bc, bm = 1 / gcoeff, mono_div(l, gexps)
    s = f.mul_term(ac, am) - g.mul_term(bc, bm)
    if cf is None:
        return s, None
    cof = [x.mul_term(ac, am) - y.mul_term(bc, bm) for x, y in zip(cf, cg)]
    return s, cof


def _interreduce(basis: List[Vector], order: ModuleOrder,
                 cofs: Optional[List[List[Poly]]] = None,
                 ) -> Tuple[List[Vector], Optional[List[List[Poly]]]]:
    """Minimalize, tail-reduce, and normalize to the unique reduced basis."""
    track = cofs is not None
    items = []
    for idx, v in enumerate(basis):
        if not v.is_zero():
            pos, exps, coeff = v.leading(order)
            items.append((order.key(pos, exps), pos, exps,
                          v.scale(1 / coeff),
                          _scale_cof(cofs[idx], 1 / coeff) if track else None))
    items.sort(key=lambda t: t[0])
    minimal: List[Tuple] = []
    for key, pos, exps, v, cof in items:
        if any(p == pos and mono_divides(e, exps)
               for _, p, e, _, _ in minimal):
            continue
        minimal.append((key, pos, exps, v, cof))
    reduced = []
    for i, (_, _, _, v, cof) in enumerate(minimal):
        others = [w for j, (_, _, _, w, _) in enumerate(minimal) if j != i]
        other_cofs = [c for j, (_, _, _, _, c) in enumerate(minimal)
                      if j != i]
        r, q = divide(v, others, order)
        rcof = _combine_cof(cof, q, other_cofs)
        pos, exps, coeff = r.leading(order)
        reduced.append((order.key(pos, exps), r.scale(1 / coeff),
                        _scale_cof(rcof, 1 / coeff)))
    reduced.sort(key=lambda t: t[0])
    out_vs = [t[1] for t in reduced]
    out_cofs = [t[2] for t in reduced] if track else None
    return out_vs, out_cofs


@dataclass(frozen=True)
class GrobnerBasis:
    """Reduced Groebner basis: monic, pairwise irreducible, sorted ascending."""

    ring: RingSpec
    rank: int
    order: ModuleOrder
    gens: Tuple[Vector, ...]

    def normal_form(self, v: Vector) -> Tuple[Vector, List[Poly]]:
        if v.rank != self.rank:
            raise ValueError("rank mismatch")
        return divide(v, self.gens, self.order)

    def reduce(self, v: Vector) -> Vector:
        return self.normal_form(v)[0]

    def contains(self, v: Vector) -> bool:
        return self.reduce(v).is_zero()

    def __str__(self) -> str:
        return "{" + "; ".join(str(g) for g in self.gens) + "}"


def buchberger(gens: Sequence[Vector], order: ModuleOrder = POT_GREVLEX,
               *, ring: Optional[RingSpec] = None, rank: Optional[int] = None,
               ) -> GrobnerBasis:
    """Reduced Groebner basis of the submodule generated by gens.

    Normal pair-selection strategy; the coprime-lead shortcut is applied only
    to pairs concentrated in one common position (the unrestricted product
    criterion is unsound for modules), together with the chain criterion.
    A final sweep re-checks every S-vector of the candidate basis, so the
    output is correct independently of the pair bookkeeping.
    """
    gb, _ = _buchberger_core(gens, order, ring, rank, track=False)
    return gb


def extended_buchberger(gens: Sequence[Vector],
                        order: ModuleOrder = POT_GREVLEX, *,
                        ring: Optional[RingSpec] = None,
                        rank: Optional[int] = None,
                        ) -> Tuple[GrobnerBasis, List[List[Poly]]]:
    """(G, A) with A[a] the coefficients expressing G[a] over the input:
    G[a] = sum(A[a][i] * gens[i]); zero input vectors get zero columns."""
    return _buchberger_core(gens, order, ring, rank, track=True)


def _buchberger_core(gens: Sequence[Vector], order: ModuleOrder,
                     ring: Optional[RingSpec], rank: Optional[int],
                     track: bool,
                     ) -> Tuple[GrobnerBasis, Optional[List[List[Poly]]]]:
    m = len(gens)
    seeds = [(i, v) for i, v in enumerate(gens) if not v.is_zero()]
    if not seeds:
        if ring is None or rank is None:
            raise ValueError("empty input needs explicit ring and rank")
        return GrobnerBasis(ring, rank, order, ()), ([] if track else None)
    ring = seeds[0][1].ring
    rank = seeds[0][1].rank
    for _, v in seeds:
        if v.rank != rank:
            raise ValueError("rank mismatch")

    basis: List[Vector] = []
    cofs: List[Optional[List[Poly]]] = []
    leads: List[Tuple[int, Monomial]] = []
    conc: List[Optional[int]] = []
    pending: List[Tuple[int, int]] = []

    def push(v: Vector, cof):
        pos, exps, _ = v.leading(order)
        c = _primitive_scale(v, order)
        j = len(basis)
        basis.append(v.scale(c))
        cofs.append(_scale_cof(cof, c))
        leads.append((pos, exps))
        conc.append(_concentrated_position(basis[-1]))
        for i in range(j):
            if leads[i][0] == pos:
                pending.append((i, j))

    def unit_cof(i: int) -> Optional[List[Poly]]:
        if not track:
            return None
        return [Poly.one(ring) if k == i else Poly.zero(ring)
                for k in range(m)]

    for i, v in seeds:
        if track:
            r, q = divide(v, basis, order)
            rcof = _combine_cof(unit_cof(i), q, cofs)
        else:
            r, rcof = _reduce_primitive(v, basis, order), None
        if not r.is_zero():
            push(r, rcof)

    def pair_key(pair):
        i, j = pair
        l = mono_lcm(leads[i][1], leads[j][1])
        return (order.key(leads[i][0], l), i, j)

    while True:
        while pending:
            pending.sort(key=pair_key)
            i, j = pending.pop(0)
            pos = leads[i][0]
            li, lj = leads[i][1], leads[j][1]
            if (conc[i] == pos and conc[j] == pos
                    and mono_lcm(li, lj) == mono_mul(li, lj)):
                continue
            l = mono_lcm(li, lj)
            chained = False
            remaining = set(pending)
            for k in range(len(basis)):
                if k in (i, j) or leads[k][0] != pos:
                    continue
                if not mono_divides(leads[k][1], l):
                    continue
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in remaining and pjk not in remaining:
                    chained = True
                    break
            if chained:
                continue
            s, scof = _s_vector_cof(basis[i], cofs[i], basis[j], cofs[j],
                                    order)
            if track:
                r, q = divide(s, basis, order)
                rcof = _combine_cof(scof, q, cofs)
            else:
                r, rcof = _reduce_primitive(s, basis, order), None
            if not r.is_zero():
                push(r, rcof)
        candidate, cand_cofs = _interreduce(
            basis, order, cofs if track else None)
        extra = _nonzero_s_reductions(candidate, cand_cofs, order)
        if not extra:
            return (GrobnerBasis(ring, rank, order, tuple(candidate)),
                    cand_cofs)
        basis = list(candidate)
        cofs = list(cand_cofs) if track else [None] * len(basis)
        leads = [v.leading(order)[:2] for v in basis]
        conc = [_concentrated_position(v) for v in basis]
        pending = []
        for r, rcof in extra:
            push(r, rcof)


def _nonzero_s_reductions(basis: Sequence[Vector],
                          cofs: Optional[Sequence[List[Poly]]],
                          order: ModuleOrder) -> List[Tuple]:
    track = cofs is not None
    out = []
    current = list(basis)
    current_cofs = list(cofs) if track else [None] * len(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            pi = basis[i].leading(order)[0]
            pj = basis[j].leading(order)[0]
            if pi != pj:
                continue
            s, scof = _s_vector_cof(basis[i], current_cofs[i],
                                    basis[j], current_cofs[j], order)
            if track:
                r, q = divide(s, current, order)
                rcof = _combine_cof(scof, q, current_cofs)
            else:
                r, rcof = _reduce_primitive(s, current, order), None
            if not r.is_zero():
                out.append((r, rcof))
                current.append(r)
                current_cofs.append(rcof)
    return out


# -- syzygies and membership ------------------------------------------------------

class SpanSolver:
    """Answers membership and syzygy questions for a fixed generator list.

    Keeps the reduced basis of the span together with the cofactor rows
    expressing each basis vector over the generators; membership
    certificates are division quotients pushed through the cofactors, and
    syzygies come from Schreyer's construction (one row per same-position
    S-pair of the basis, plus one row per generator re-expressed through
    the basis).
    """

    def __init__(self, gens: Sequence[Vector], ring: RingSpec, rank: int,
                 order: ModuleOrder = POT_GREVLEX):
        self.ring = ring
        self.rank = rank
        self.count = len(gens)
        self.order = order
        self.gens = list(gens)
        for g in gens:
            if g.rank != rank:
                raise ValueError("rank mismatch")
        self._gb, self._cofs = extended_buchberger(gens, order, ring=ring,
                                                   rank=rank)

    def solve(self, v: Vector) -> Optional[List[Poly]]:
        """Coefficients c with sum(c[i] * gens[i]) = v, or None."""
        if v.rank != self.rank:
            raise ValueError("rank mismatch")
        r, q = self._gb.normal_form(v)
        if not r.is_zero():
            return None
        coeffs = [Poly.zero(self.ring) for _ in range(self.count)]
        for qa, row in zip(q, self._cofs):
            if qa.is_zero():
                continue
            for k, c in enumerate(row):
                if not c.is_zero():
                    coeffs[k] = coeffs[k] + c * qa
        return coeffs

    def contains(self, v: Vector) -> bool:
        if v.rank != self.rank:
            raise ValueError("rank mismatch")
        return self._gb.contains(v)

    def _gb_combination(self, over_gb: List[Poly]) -> Vector:
        """Push a coefficient vector over the basis down to the gens."""
        coeffs = [Poly.zero(self.ring) for _ in range(self.count)]
        for ca, row in zip(over_gb, self._cofs):
            if ca.is_zero():
                continue
            for k, c in enumerate(row):
                if not c.is_zero():
                    coeffs[k] = coeffs[k] + c * ca
        return Vector(self.ring, coeffs)

    def syzygies(self) -> List[Vector]:
        """Certified generators of {(a_1..a_m) : sum(a_i * gens[i]) = 0}.

        Schreyer's construction: the rows below generate all relations
        (any syzygy s splits as s(I - BA) + (s B)A with B the division
        coefficients of the generators over the basis and A the tracked
        cofactors).  The rows are returned as constructed, certified but
        not recompleted: callers that need a canonical presentation run
        Buchberger after projecting to the block they keep, where the
        rank is smaller and completion stays cheap.
        """
        order = self.order
        basis = self._gb.gens
        rows: List[Vector] = []
        # each generator re-expressed through the basis: e_i - B_i A
        for i, f in enumerate(self.gens):
            r, q = self._gb.normal_form(f)
            if not r.is_zero():
                raise RuntimeError("generator escaped its own span")
            combo = self._gb_combination(q)
            unit = Vector.unit(self.ring, self.count, i)
            rows.append(unit - combo)
        # Schreyer rows: one per same-position S-pair of the basis
        for a in range(len(basis)):
            pa, ea, ca = basis[a].leading(order)
            for b in range(a + 1, len(basis)):
                pb, eb, cb = basis[b].leading(order)
                if pa != pb:
                    continue
                l = mono_lcm(ea, eb)
                s = (basis[a].mul_term(1 / ca, mono_div(l, ea))
                     - basis[b].mul_term(1 / cb, mono_div(l, eb)))
                r, q = self._gb.normal_form(s)
                if not r.is_zero():
                    raise RuntimeError("basis is not closed under S-vectors")
                sigma = [-p for p in q]
                sigma[a] = sigma[a] + Poly.term(self.ring, 1 / ca,
                                                mono_div(l, ea))
                sigma[b] = sigma[b] - Poly.term(self.ring, 1 / cb,
                                                mono_div(l, eb))
                rows.append(self._gb_combination(sigma))
        out = []
        for v in rows:
            if v.is_zero():
                continue
            acc = Vector.zero(self.ring, self.rank)
            for c, g in zip(v.entries, self.gens):
                acc = acc + g.poly_mul(c)
            if not acc.is_zero():
                raise RuntimeError("uncertified syzygy")
            out.append(v.scale(_primitive_scale(v, order)))
        return out


def syzygy_basis(gens: Sequence[Vector], ring: RingSpec, rank: int,
                 order: ModuleOrder = POT_GREVLEX) -> List[Vector]:
    if not gens:
        return []
    return SpanSolver(gens, ring, rank, order).syzygies()


def syzygies(gens: Sequence[Vector], ring: RingSpec, rank: int,
             order: ModuleOrder = POT_GREVLEX) -> "PolyMatrix":
    """Matrix whose columns generate the relations among gens."""
    cols = syzygy_basis(gens, ring, rank, order)
    return PolyMatrix.from_columns(ring, len(gens), cols)


# -- polynomial matrices -----------------------------------------------------------

class PolyMatrix:
    """Immutable matrix over the polynomial ring; rows-major storage."""

    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring: RingSpec, nrows: int, ncols: int,
                 rows: Iterable[Iterable[Poly]]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        rows = tuple(tuple(row) for row in rows)
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError("matrix shape mismatch")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *_):
        raise AttributeError("PolyMatrix is immutable")

    @staticmethod
    def zeros(ring: RingSpec, nrows: int, ncols: int) -> "PolyMatrix":
        z = Poly.zero(ring)
        return PolyMatrix(ring, nrows, ncols,
                          tuple((z,) * ncols for _ in range(nrows)))

    @staticmethod
    def identity(ring: RingSpec, n: int) -> "PolyMatrix":
        one = Poly.one(ring)
        z = Poly.zero(ring)
        return PolyMatrix(ring, n, n,
                          tuple(tuple(one if i == j else z for j in range(n))
                                for i in range(n)))

    @staticmethod
    def from_rows(ring: RingSpec, rows: Sequence[Sequence[Poly]],
                  ncols: Optional[int] = None) -> "PolyMatrix":
        nrows = len(rows)
        if nrows == 0:
            if ncols is None:
                raise ValueError("empty matrix needs explicit column count")
            return PolyMatrix(ring, 0, ncols, ())
        return PolyMatrix(ring, nrows, len(rows[0]), rows)

    @staticmethod
    def from_columns(ring: RingSpec, nrows: int,
                     columns: Sequence[Vector]) -> "PolyMatrix":
        for c in columns:
            if c.rank != nrows:
                raise ValueError("column rank mismatch")
        return PolyMatrix(ring, nrows, len(columns),
                          tuple(tuple(c.entries[i] for c in columns)
                                for i in range(nrows)))

    def at(self, i: int, j: int) -> Poly:
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return Vector(self.ring, (self.rows[i][j] for i in range(self.nrows)))

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def row(self, i: int) -> Vector:
        return Vector(self.ring, self.rows[i])

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, self.ncols, self.nrows,
                          tuple(tuple(self.rows[i][j] for i in range(self.nrows))
                                for j in range(self.ncols)))

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.rows for p in row)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._shape_check(other)
        return PolyMatrix(self.ring, self.nrows, self.ncols,
                          tuple(tuple(a + b for a, b in zip(r1, r2))
                                for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._shape_check(other)
        return PolyMatrix(self.ring, self.nrows, self.ncols,
                          tuple(tuple(a - b for a, b in zip(r1, r2))
                                for r1, r2 in zip(self.rows, other.rows)))

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, self.nrows, self.ncols,
                          tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, f: Poly) -> "PolyMatrix":
        return PolyMatrix(self.ring, self.nrows, self.ncols,
                          tuple(tuple(a * f for a in r) for r in self.rows))

    def _shape_check(self, other: "PolyMatrix"):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("matrix shape mismatch")

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError("matrix shape mismatch in product")
        z = Poly.zero(self.ring)
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for k in range(self.ncols):
                    a = self.rows[i][k]
                    b = other.rows[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return PolyMatrix(self.ring, self.nrows, other.ncols, tuple(out))

    def mul_vec(self, v: Vector) -> Vector:
        if v.rank != self.ncols:
            raise ValueError("shape mismatch in matrix-vector product")
        z = Poly.zero(self.ring)
        out = []
        for i in range(self.nrows):
            acc = z
            for k in range(self.ncols):
                a = self.rows[i][k]
                if not a.is_zero() and not v.entries[k].is_zero():
                    acc = acc + a * v.entries[k]
            out.append(acc)
        return Vector(self.ring, out)

    @staticmethod
    def hstack(a: "PolyMatrix", b: "PolyMatrix") -> "PolyMatrix":
        if a.nrows != b.nrows:
            raise ValueError("row count mismatch in hstack")
        return PolyMatrix(a.ring, a.nrows, a.ncols + b.ncols,
                          tuple(r1 + r2 for r1, r2 in zip(a.rows, b.rows)))

    @staticmethod
    def vstack(a: "PolyMatrix", b: "PolyMatrix") -> "PolyMatrix":
        if a.ncols != b.ncols:
            raise ValueError("column count mismatch in vstack")
        return PolyMatrix(a.ring, a.nrows + b.nrows, a.ncols, a.rows + b.rows)

    @staticmethod
    def block_diag(ring: RingSpec, blocks: Sequence["PolyMatrix"]) -> "PolyMatrix":
        nrows = sum(b.nrows for b in blocks)
        ncols = sum(b.ncols for b in blocks)
        z = Poly.zero(ring)
        rows = []
        col_off = 0
        for b in blocks:
            for r in b.rows:
                rows.append((z,) * col_off + tuple(r)
                            + (z,) * (ncols - col_off - b.ncols))
            col_off += b.ncols
        return PolyMatrix(ring, nrows, ncols, tuple(rows))

    @staticmethod
    def kron(a: "PolyMatrix", b: "PolyMatrix") -> "PolyMatrix":
        rows = []
        for i in range(a.nrows):
            for k in range(b.nrows):
                row = []
                for j in range(a.ncols):
                    for l in range(b.ncols):
                        row.append(a.rows[i][j] * b.rows[k][l])
                rows.append(tuple(row))
        return PolyMatrix(a.ring, a.nrows * b.nrows, a.ncols * b.ncols,
                          tuple(rows))

    def __eq__(self, other) -> bool:
        return (isinstance(other, PolyMatrix) and self.ring == other.ring
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.ring, self.nrows, self.ncols, self.rows))

    def __str__(self) -> str:
        return ("[" + ", ".join("[" + ", ".join(str(p) for p in row) + "]"
                                for row in self.rows) + "]")

    def __repr__(self) -> str:
        return f"PolyMatrix({self.nrows}x{self.ncols}, {self})"


def syzygies_mod(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Columns generating {c : a*c lies in the column span of b}.

    Computed as the projection of the syzygies of [a | b] to the a-block,
    re-completed so the output is canonical.
    """
    if a.nrows != b.nrows:
        raise ValueError("row count mismatch")
    ring = a.ring
    if a.ncols == 0:
        return PolyMatrix.zeros(ring, 0, 0)
    solver = SpanSolver(a.columns() + b.columns(), ring, a.nrows)
    projected = [s.slice(0, a.ncols) for s in solver.syzygies()]
    gb = buchberger(projected, ring=ring, rank=a.ncols)
    return PolyMatrix.from_columns(ring, a.ncols, list(gb.gens))


def colon_ideal(v: Vector, b: PolyMatrix) -> List[Poly]:
    """Generators of the ideal {r in R : r*v lies in the column span of b}.

    Elimination at rank k+1: complete the module generated by [v; 1] and
    the columns [b_j; 0], where the tag position comes last and therefore
    has the lowest position-over-term priority.  Basis elements supported
    entirely on the tag position are exactly the multipliers sending v
    into the span, and they form the reduced basis of that ideal.
    """
    if v.rank != b.nrows:
        raise ValueError("rank mismatch")
    ring = v.ring
    k = v.rank
    one = Poly.one(ring)
    zero = Poly.zero(ring)
    gens = [Vector(ring, tuple(v.entries) + (one,))]
    for j in range(b.ncols):
        col = b.column(j)
        gens.append(Vector(ring, tuple(col.entries) + (zero,)))
    gb = buchberger(gens, ring=ring, rank=k + 1)
    return [w.entries[k] for w in gb.gens
            if all(w.entries[i].is_zero() for i in range(k))]


def solve_mod(v: Vector, a: PolyMatrix, b: PolyMatrix) -> Optional[List[Poly]]:
    """Coefficients c with a*c = v modulo the column span of b, or None."""
    if a.nrows != b.nrows or v.rank != a.nrows:
        raise ValueError("shape mismatch")
    solver = SpanSolver(a.columns() + b.columns(), a.ring, a.nrows)
    sol = solver.solve(v)
    if sol is None:
        return None
    return sol[:a.ncols]
