"""Finitely presented modules over Q[x1..xn] and their morphism calculus.

A module is a cokernel presentation R^p -> R^m -> M -> 0 stored as the
m x p relation matrix (relations are columns).  Elements are column vectors
in R^m, canonicalized by normal form against the relation basis; morphisms
are matrices acting on the left, checked for well-definedness when built.

Kernels, cokernels, images, Hom modules, duals, evaluation maps, and the
torsion subfunctor Ker(M -> M**) all reduce to the syzygy and membership
primitives of the Groebner layer.
"""

from __future__ import annotations

from itertools import product as iter_product
from typing import List, Optional, Sequence, Tuple

from .rings import Poly, RingSpec, mono_divides
from .groebner import (GrobnerBasis, PolyMatrix, SpanSolver, Vector,
                       buchberger, colon_ideal, solve_mod, syzygies_mod)


class FPModule:
    """Module presented by generators e_1..e_m and relation columns."""

    __slots__ = ("ring", "ngens", "relations", "_gb", "_solver")

    def __init__(self, ring: RingSpec, ngens: int, relations: PolyMatrix):
        if relations.ring != ring or relations.nrows != ngens:
            raise ValueError("relation matrix must have one row per generator")
        self.ring = ring
        self.ngens = ngens
        self.relations = relations
        self._gb: Optional[GrobnerBasis] = None
        self._solver: Optional[SpanSolver] = None

    @staticmethod
    def free(ring: RingSpec, rank: int) -> "FPModule":
        return FPModule(ring, rank, PolyMatrix.zeros(ring, rank, 0))

    @staticmethod
    def zero(ring: RingSpec) -> "FPModule":
        return FPModule(ring, 0, PolyMatrix.zeros(ring, 0, 0))

    @staticmethod
    def quotient_ring(ring: RingSpec, ideal_gens: Sequence[Poly]) -> "FPModule":
        mat = PolyMatrix(ring, 1, len(ideal_gens), [list(ideal_gens)])
        return FPModule(ring, 1, mat)

    @property
    def gb(self) -> GrobnerBasis:
        if self._gb is None:
            self._gb = buchberger(self.relations.columns(), ring=self.ring,
                                  rank=self.ngens)
        return self._gb

    @property
    def solver(self) -> SpanSolver:
        if self._solver is None:
            self._solver = SpanSolver(self.relations.columns(), self.ring,
                                      self.ngens)
        return self._solver

    def element(self, vec: Vector) -> "Element":
        return Element(self, vec)

    def generator(self, i: int) -> "Element":
        return Element(self, Vector.unit(self.ring, self.ngens, i))

    def generators(self) -> List["Element"]:
        return [self.generator(i) for i in range(self.ngens)]

    def zero_element(self) -> "Element":
        return Element(self, Vector.zero(self.ring, self.ngens))

    def is_zero(self) -> bool:
        """True when every generator is killed by the relations."""
        return all(self.gb.contains(Vector.unit(self.ring, self.ngens, i))
                   for i in range(self.ngens))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FPModule) or self.ring != other.ring:
            return False
        if self.ngens == other.ngens and self.relations == other.relations:
            return True
        # all presentations of the zero module compare equal
        return self.is_zero() and other.is_zero()

    def __hash__(self) -> int:
        if self.is_zero():
            return hash((self.ring, "zero-module"))
        return hash((self.ring, self.ngens, self.relations))

    def __str__(self) -> str:
        return (f"FPModule({self.ring}, gens={self.ngens}, "
                f"rels={self.relations.ncols})")

    __repr__ = __str__


class Element:
    """Residue class in an FP module; the stored vector is the normal form."""

    __slots__ = ("module", "vec")

    def __init__(self, module: FPModule, vec: Vector):
        if vec.rank != module.ngens:
            raise ValueError("element rank mismatch")
        self.module = module
        self.vec = module.gb.reduce(vec)

    def is_zero(self) -> bool:
        return self.vec.is_zero()

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.module, self.vec + other.vec)

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.module, self.vec - other.vec)

    def __neg__(self) -> "Element":
        return Element(self.module, -self.vec)

    def smul(self, f: Poly) -> "Element":
        return Element(self.module, self.vec.poly_mul(f))

    def _check(self, other: "Element"):
        if self.module != other.module:
            raise ValueError("elements live in different modules")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Element) and self.module == other.module
                and self.vec == other.vec)

    def __hash__(self) -> int:
        return hash((self.module, self.vec))

    def __str__(self) -> str:
        return str(self.vec)

    __repr__ = __str__


class Morphism:
    """Module map source -> target given by a matrix acting on column vectors.

    The constructor verifies that every relation of the source is sent into
    the relation span of the target, so instances are always well defined.
    """

    __slots__ = ("source", "target", "mat")

    def __init__(self, source: FPModule, target: FPModule, mat: PolyMatrix,
                 *, _checked: bool = False):
        if mat.nrows != target.ngens or mat.ncols != source.ngens:
            raise ValueError("morphism matrix shape mismatch")
        if mat.ring != source.ring or source.ring != target.ring:
            raise ValueError("morphism ring mismatch")
        if not _checked:
            for j in range(source.relations.ncols):
                img = mat.mul_vec(source.relations.column(j))
                if not target.gb.contains(img):
                    raise ValueError(
                        "matrix does not define a morphism: relation "
                        f"{j} is not sent into the target relations")
        self.source = source
        self.target = target
        self.mat = mat

    @staticmethod
    def identity(m: FPModule) -> "Morphism":
        return Morphism(m, m, PolyMatrix.identity(m.ring, m.ngens),
                        _checked=True)

    @staticmethod
    def zero(source: FPModule, target: FPModule) -> "Morphism":
        return Morphism(source, target,
                        PolyMatrix.zeros(source.ring, target.ngens,
                                         source.ngens), _checked=True)

    def __call__(self, e: Element) -> Element:
        if e.module != self.source:
            raise ValueError("element not in the source module")
        return Element(self.target, self.mat.mul_vec(e.vec))

    def compose(self, other: "Morphism") -> "Morphism":
        """self o other; apply other first."""
        if other.target != self.source:
            raise ValueError("composition source/target mismatch")
        return Morphism(other.source, self.target, self.mat * other.mat,
                        _checked=True)

    def __add__(self, other: "Morphism") -> "Morphism":
        if self.source != other.source or self.target != other.target:
            raise ValueError("morphism addition shape mismatch")
        return Morphism(self.source, self.target, self.mat + other.mat,
                        _checked=True)

    def __sub__(self, other: "Morphism") -> "Morphism":
        if self.source != other.source or self.target != other.target:
            raise ValueError("morphism subtraction shape mismatch")
        return Morphism(self.source, self.target, self.mat - other.mat,
                        _checked=True)

    def __neg__(self) -> "Morphism":
        return Morphism(self.source, self.target, -self.mat, _checked=True)

    def smul(self, f: Poly) -> "Morphism":
        return Morphism(self.source, self.target, self.mat.scale(f),
                        _checked=True)

    def is_zero(self) -> bool:
        """Zero as a map: every generator image dies in the target."""
        return all(self.target.gb.contains(self.mat.column(j))
                   for j in range(self.mat.ncols))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        return (self - other).is_zero()

    def __str__(self) -> str:
        return f"Morphism({self.source} -> {self.target})"

    __repr__ = __str__


# -- kernels, cokernels, images ---------------------------------------------------

def kernel(phi: Morphism) -> Tuple[FPModule, Morphism]:
    """(K, iota) with K -> source exact onto {v : phi(v) = 0}."""
    m = phi.source
    gens = syzygies_mod(phi.mat, phi.target.relations)
    rels = syzygies_mod(gens, m.relations)
    k = FPModule(m.ring, gens.ncols, rels)
    return k, Morphism(k, m, gens, _checked=True)


def cokernel(phi: Morphism) -> Tuple[FPModule, Morphism]:
    """(C, pi) with pi: target -> C the canonical projection."""
    n = phi.target
    rels = PolyMatrix.hstack(n.relations, phi.mat)
    c = FPModule(n.ring, n.ngens, rels)
    return c, Morphism(n, c, PolyMatrix.identity(n.ring, n.ngens),
                       _checked=True)


def image(phi: Morphism) -> Tuple[FPModule, Morphism, Morphism]:
    """(I, epi, mono) with phi = mono o epi and I presented on source gens."""
    m = phi.source
    rels = syzygies_mod(phi.mat, phi.target.relations)
    i = FPModule(m.ring, m.ngens, rels)
    epi = Morphism(m, i, PolyMatrix.identity(m.ring, m.ngens), _checked=True)
    mono = Morphism(i, phi.target, phi.mat, _checked=True)
    return i, epi, mono


def direct_sum(a: FPModule, b: FPModule) -> Tuple[FPModule, Tuple[Morphism, ...]]:
    """(A + B, (inc_a, inc_b, proj_a, proj_b))."""
    ring = a.ring
    rels = PolyMatrix.block_diag(ring, [a.relations, b.relations])
    s = FPModule(ring, a.ngens + b.ngens, rels)
    za = PolyMatrix.zeros(ring, b.ngens, a.ngens)
    zb = PolyMatrix.zeros(ring, a.ngens, b.ngens)
    ia = PolyMatrix.vstack(PolyMatrix.identity(ring, a.ngens), za)
    ib = PolyMatrix.vstack(zb, PolyMatrix.identity(ring, b.ngens))
    pa = ia.transpose()
    pb = ib.transpose()
    return s, (Morphism(a, s, ia, _checked=True),
               Morphism(b, s, ib, _checked=True),
               Morphism(s, a, pa, _checked=True),
               Morphism(s, b, pb, _checked=True))


def direct_power(m: FPModule, k: int) -> FPModule:
    rels = PolyMatrix.block_diag(m.ring, [m.relations] * k)
    return FPModule(m.ring, m.ngens * k, rels)


# -- Hom modules -------------------------------------------------------------------

def _flatten(mat: PolyMatrix) -> Vector:
    """Column-major flattening; column k occupies slots k*nrows..(k+1)*nrows."""
    entries = []
    for k in range(mat.ncols):
        for i in range(mat.nrows):
            entries.append(mat.rows[i][k])
    return Vector(mat.ring, entries)


def _unflatten(ring: RingSpec, nrows: int, ncols: int, v: Vector) -> PolyMatrix:
    rows = [[v.entries[k * nrows + i] for k in range(ncols)]
            for i in range(nrows)]
    return PolyMatrix(ring, nrows, ncols, rows)


class HomModule(FPModule):
    """Hom(M, N) presented as the kernel of N^m -> N^p, Phi |-> Phi o rel_M.

    Generators decode to actual morphisms M -> N; encode inverts this for
    any well-defined morphism.
    """

    __slots__ = ("dom", "cod", "_emb")

    def __init__(self, dom: FPModule, cod: FPModule):
        ring = dom.ring
        m, n = dom.ngens, cod.ngens
        p = dom.relations.ncols
        rel_action = PolyMatrix.kron(dom.relations.transpose(),
                                     PolyMatrix.identity(ring, n))
        power_m = direct_power(cod, m)
        power_p = direct_power(cod, p)
        rho = Morphism(power_m, power_p, rel_action, _checked=True)
        k, emb = kernel(rho)
        super().__init__(ring, k.ngens, k.relations)
        self.dom = dom
        self.cod = cod
        self._emb = emb.mat

    def decode(self, e: Element) -> Morphism:
        if e.module != self:
            raise ValueError("element not in this Hom module")
        flat = self._emb.mul_vec(e.vec)
        mat = _unflatten(self.ring, self.cod.ngens, self.dom.ngens, flat)
        return Morphism(self.dom, self.cod, mat, _checked=True)

    def encode(self, phi: Morphism) -> Element:
        if phi.source != self.dom or phi.target != self.cod:
            raise ValueError("morphism does not match this Hom module")
        flat = _flatten(phi.mat)
        power_m = direct_power(self.cod, self.dom.ngens)
        coeffs = solve_mod(flat, self._emb, power_m.relations)
        if coeffs is None:
            raise ValueError("morphism failed to encode into Hom module")
        return Element(self, Vector(self.ring, coeffs))

    def decoded_generators(self) -> List[Morphism]:
        return [self.decode(g) for g in self.generators()]


# keyed on presentations, not on FPModule equality: zero-normalized module
# equality must not alias Hom modules of different generator counts
_HOM_CACHE = {}


def hom_module(dom: FPModule, cod: FPModule) -> HomModule:
    key = (dom.ring, dom.ngens, dom.relations, cod.ngens, cod.relations)
    h = _HOM_CACHE.get(key)
    if h is None:
        h = HomModule(dom, cod)
        _HOM_CACHE[key] = h
    return h


def hom_pre(f: Morphism, cod: FPModule) -> Morphism:
    """Hom(f, cod): Hom(target, cod) -> Hom(source, cod), phi -> phi o f."""
    h_t = hom_module(f.target, cod)
    h_s = hom_module(f.source, cod)
    cols = [h_s.encode(h_t.decode(g).compose(f)).vec
            for g in h_t.generators()]
    mat = PolyMatrix.from_columns(f.source.ring, h_s.ngens, cols)
    return Morphism(h_t, h_s, mat, _checked=True)


def hom_post(dom: FPModule, f: Morphism) -> Morphism:
    """Hom(dom, f): Hom(dom, source) -> Hom(dom, target), phi -> f o phi."""
    h_s = hom_module(dom, f.source)
    h_t = hom_module(dom, f.target)
    cols = [h_t.encode(f.compose(h_s.decode(g))).vec
            for g in h_s.generators()]
    mat = PolyMatrix.from_columns(dom.ring, h_t.ngens, cols)
    return Morphism(h_s, h_t, mat, _checked=True)


def dual(m: FPModule) -> HomModule:
    return hom_module(m, FPModule.free(m.ring, 1))


def dual_morphism(f: Morphism) -> Morphism:
    """f* : target* -> source*."""
    return hom_pre(f, FPModule.free(f.source.ring, 1))


def tensor_modules(a: FPModule, b: FPModule) -> FPModule:
    """A (x) B on generators e_i (x) f_j, index i*ngens_b + j."""
    ring = a.ring
    ida = PolyMatrix.identity(ring, a.ngens)
    idb = PolyMatrix.identity(ring, b.ngens)
    rels = PolyMatrix.hstack(PolyMatrix.kron(a.relations, idb),
                             PolyMatrix.kron(ida, b.relations))
    return FPModule(ring, a.ngens * b.ngens, rels)


# -- torsion via the double dual ---------------------------------------------------

def eval_map(m: FPModule) -> Morphism:
    """Canonical M -> M**, generator e_j to evaluation-at-e_j."""
    d = dual(m)
    dd = dual(d)
    lambdas = d.decoded_generators()
    free1 = FPModule.free(m.ring, 1)
    cols = []
    for j in range(m.ngens):
        row = [[lam.mat.rows[0][j] for lam in lambdas]]
        mu = Morphism(d, free1, PolyMatrix(m.ring, 1, d.ngens, row))
        cols.append(dd.encode(mu).vec)
    mat = PolyMatrix.from_columns(m.ring, dd.ngens, cols)
    return Morphism(m, dd, mat)


def bass_torsion(m: FPModule) -> Tuple[FPModule, Morphism]:
    """(T, iota): the kernel of the evaluation map M -> M**."""
    return kernel(eval_map(m))


class AnnihilatorIdeal:
    """Ideal {r in R : r * e = 0}, canonical generators, witness flagged."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring: RingSpec, gens: Sequence[Poly]):
        self.ring = ring
        # canonical presentation: the reduced basis of the ideal, listed
        # with largest leading monomial first
        nonzero = [g for g in gens if not g.is_zero()]
        if nonzero:
            gb = buchberger([Vector(ring, [g]) for g in nonzero],
                            ring=ring, rank=1)
            self.gens = tuple(v.entries[0] for v in reversed(gb.gens))
        else:
            self.gens = ()

    @property
    def witness(self) -> Optional[Poly]:
        """A nonzero annihilating element, when one exists."""
        for g in self.gens:
            if not g.is_zero():
                return g
        return None

    def is_zero(self) -> bool:
        return self.witness is None

    def contains(self, f: Poly) -> bool:
        gb = buchberger([Vector(self.ring, [g]) for g in self.gens],
                        ring=self.ring, rank=1)
        return gb.contains(Vector(self.ring, [f]))

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    __repr__ = __str__


def annihilator(e: Element) -> AnnihilatorIdeal:
    """The ideal of r in R with r * e = 0 in the parent module."""
    m = e.module
    return AnnihilatorIdeal(m.ring, colon_ideal(e.vec, m.relations))


def module_annihilator(m: FPModule) -> AnnihilatorIdeal:
    """The ideal {f in R : f * M = 0}."""
    ring = m.ring
    if m.ngens == 0:
        return AnnihilatorIdeal(ring, [Poly.one(ring)])
    # f kills M iff f * vec(Id) lies in the span of one relation block per
    # generator: a colon ideal in rank ngens^2
    entries = []
    for j in range(m.ngens):
        for i in range(m.ngens):
            entries.append(Poly.one(ring) if i == j else Poly.zero(ring))
    stacked = Vector(ring, entries)
    big = PolyMatrix.block_diag(ring, [m.relations] * m.ngens)
    return AnnihilatorIdeal(ring, colon_ideal(stacked, big))


# -- lifting and submodule comparison ---------------------------------------------

def lift_through(iota: Morphism, phi: Morphism) -> Morphism:
    """psi with iota o psi = phi, assuming im(phi) lies in im(iota)."""
    if iota.target != phi.target:
        raise ValueError("lift requires a common target")
    cols = []
    for j in range(phi.source.ngens):
        c = solve_mod(phi.mat.column(j), iota.mat, iota.target.relations)
        if c is None:
            raise ValueError("morphism does not factor through the image")
        cols.append(Vector(iota.source.ring, c))
    mat = PolyMatrix.from_columns(iota.source.ring, iota.source.ngens, cols)
    return Morphism(phi.source, iota.source, mat)


def images_equal(phi: Morphism, psi: Morphism) -> bool:
    """Equality of im(phi) and im(psi) as submodules of the common target."""
    if phi.target != psi.target:
        raise ValueError("images live in different modules")
    t = phi.target
    sp_phi = SpanSolver(phi.mat.columns() + t.relations.columns(),
                        t.ring, t.ngens)
    sp_psi = SpanSolver(psi.mat.columns() + t.relations.columns(),
                        t.ring, t.ngens)
    fwd = all(sp_psi.contains(phi.mat.column(j))
              for j in range(phi.mat.ncols))
    bwd = all(sp_phi.contains(psi.mat.column(j))
              for j in range(psi.mat.ncols))
    return fwd and bwd


def is_injective(phi: Morphism) -> bool:
    k, _ = kernel(phi)
    return k.is_zero()


def is_surjective(phi: Morphism) -> bool:
    c, _ = cokernel(phi)
    return c.is_zero()


def is_isomorphism(phi: Morphism) -> bool:
    return is_surjective(phi) and is_injective(phi)


# -- dimension over the ground field ------------------------------------------------

def q_dimension(m: FPModule) -> Optional[int]:
    """Dimension of M as a Q-vector space, or None when infinite.

    Counts standard monomials: pairs (position, monomial) outside the
    leading-term module of the relations.
    """
    nv = m.ring.nvars
    leads = [[] for _ in range(m.ngens)]
    for g in m.gb.gens:
        pos, exps, _ = g.leading(m.gb.order)
        leads[pos].append(exps)
    total = 0
    for pos in range(m.ngens):
        bound = [None] * nv
        for exps in leads[pos]:
            nz = [i for i in range(nv) if exps[i] > 0]
            if len(nz) == 0:
                bound = [0] * nv
                break
            if len(nz) == 1:
                i = nz[0]
                if bound[i] is None or exps[i] < bound[i]:
                    bound[i] = exps[i]
        if any(b is None for b in bound):
            return None
        count = 0
        for cand in iter_product(*(range(b) for b in bound)):
            if not any(mono_divides(e, cand) for e in leads[pos]):
                count += 1
        total += count
    return total
