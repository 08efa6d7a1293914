"""Smith normal form over the univariate ring Q[x].

Q[x] is Euclidean, so exact row and column operations diagonalize any
relation matrix into d_1 | d_2 | ... | d_r.  This yields the torsion part
of a univariate module by a route fully independent of the Groebner and
double-dual machinery, and is used only as a verification oracle.
"""

from __future__ import annotations

from typing import List, Tuple

from .rings import Poly, RingSpec
from .groebner import PolyMatrix
from .modules import FPModule


def _require_univariate(ring: RingSpec):
    if ring.nvars != 1:
        raise ValueError("oracle is univariate-only")


def poly_deg(f: Poly) -> int:
    """Degree with deg(0) = -1."""
    if f.is_zero():
        return -1
    return f.total_degree()


def poly_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """Euclidean division in Q[x]: a = q*b + r with deg r < deg b."""
    _require_univariate(a.ring)
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    ring = a.ring
    q = Poly.zero(ring)
    r = a
    bc, bm = b.leading_term()
    bd = bm[0]
    while not r.is_zero() and poly_deg(r) >= bd:
        rc, rm = r.leading_term()
        t = Poly.term(ring, rc / bc, (rm[0] - bd,))
        q = q + t
        r = r - t * b
    return q, r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd in Q[x]."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero():
        return a
    lc, _ = a.leading_term()
    return a.scale(1 / lc)


def _monic(f: Poly) -> Poly:
    lc, _ = f.leading_term()
    return f.scale(1 / lc)


def smith_diagonal(mat: PolyMatrix) -> List[Poly]:
    """Nonzero diagonal d_1 | d_2 | ... of the Smith form of mat, monic."""
    _require_univariate(mat.ring)
    rows = [list(r) for r in mat.rows]
    m, n = mat.nrows, mat.ncols
    diag: List[Poly] = []
    t = 0
    while t < m and t < n:
        pivot = None
        pdeg = None
        for i in range(t, m):
            for j in range(t, n):
                f = rows[i][j]
                if not f.is_zero() and (pdeg is None or poly_deg(f) < pdeg):
                    pivot, pdeg = (i, j), poly_deg(f)
        if pivot is None:
            break
        pi, pj = pivot
        rows[t], rows[pi] = rows[pi], rows[t]
        if pj != t:
            for row in rows:
                row[t], row[pj] = row[pj], row[t]
        while True:
            swapped = False
            for i in range(t + 1, m):
                if rows[i][t].is_zero():
                    continue
                q, _ = poly_divmod(rows[i][t], rows[t][t])
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[t])]
                if not rows[i][t].is_zero():
                    rows[t], rows[i] = rows[i], rows[t]
                    swapped = True
            if swapped:
                continue
            for j in range(t + 1, n):
                if rows[t][j].is_zero():
                    continue
                q, _ = poly_divmod(rows[t][j], rows[t][t])
                for i in range(m):
                    rows[i][j] = rows[i][j] - q * rows[i][t]
                if not rows[t][j].is_zero():
                    for row in rows:
                        row[t], row[j] = row[j], row[t]
                    swapped = True
            if swapped:
                continue
            break
        # enforce the divisibility chain: fold any bad row into row t
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if not poly_divmod(rows[i][j], rows[t][t])[1].is_zero():
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            rows[t] = [a + b for a, b in zip(rows[t], rows[bad])]
            continue
        diag.append(_monic(rows[t][t]))
        t += 1
    return diag


def smith_invariant_factors(mat: PolyMatrix) -> List[Poly]:
    """Non-unit invariant factors of coker(mat), in divisibility order."""
    return [d for d in smith_diagonal(mat) if poly_deg(d) >= 1]


def invariant_factors(m: FPModule) -> List[Poly]:
    """Non-unit invariant factors of a univariate module's torsion part."""
    return smith_invariant_factors(m.relations)


def smith_torsion_oracle(m: FPModule) -> FPModule:
    """Torsion part of M over Q[x] as the direct sum of R/(d_i).

    Computed purely by Euclidean diagonalization, independent of the
    Groebner engine and of the double-dual torsion construction.
    """
    _require_univariate(m.ring)
    factors = smith_invariant_factors(m.relations)
    ring = m.ring
    k = len(factors)
    z = Poly.zero(ring)
    rels = PolyMatrix(ring, k, k,
                      [[factors[i] if i == j else z for j in range(k)]
                       for i in range(k)])
    return FPModule(ring, k, rels)


def smith_free_rank(m: FPModule) -> int:
    """Rank of the free part of a univariate module."""
    _require_univariate(m.ring)
    return m.ngens - len(smith_diagonal(m.relations))
