"""Linear constant-coefficient systems and their module-theoretic analysis.

A system A X = 0 (rows of A are equations in the unknowns X over a ring of
commuting operator symbols) is studied through the module M presented by
the transpose of A: solutions with values in a module V are exactly the
homomorphisms M -> V, autonomy is the torsion submodule of M, and the
system is controllable precisely when M is torsion free.  Every analysis
re-checks the torsion/defect identity at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .rings import Poly, RingSpec
from .groebner import PolyMatrix, Vector, solve_mod
from .modules import (Element, FPModule, Morphism, annihilator, bass_torsion,
                      direct_power, hom_module, is_injective, is_surjective,
                      kernel)
from .functors import MainTheoremReport, verify_main_theorem


class ControlSystem:
    """Kernel representation A X = 0; rows are equations, columns unknowns."""

    __slots__ = ("ring", "unknowns", "mat")

    def __init__(self, ring: RingSpec, unknowns: Sequence[str],
                 mat: PolyMatrix):
        if mat.nrows < 1 or mat.ncols < 1:
            raise ValueError("system needs at least one equation and "
                             "one unknown")
        if mat.ncols != len(unknowns):
            raise ValueError("one unknown per matrix column required")
        if len(set(unknowns)) != len(unknowns):
            raise ValueError("duplicate unknown name")
        if mat.ring != ring:
            raise ValueError("system matrix ring mismatch")
        self.ring = ring
        self.unknowns = tuple(unknowns)
        self.mat = mat

    @property
    def n_equations(self) -> int:
        return self.mat.nrows

    @property
    def n_unknowns(self) -> int:
        return self.mat.ncols

    def __str__(self) -> str:
        return (f"ControlSystem({self.ring}, vars={', '.join(self.unknowns)}, "
                f"{self.n_equations} equation(s))")

    __repr__ = __str__


def malgrange_module(sys: ControlSystem) -> FPModule:
    """Module on one generator per unknown, with the equations as relations."""
    return FPModule(sys.ring, sys.n_unknowns, sys.mat.transpose())


def solution_module(sys: ControlSystem, v: FPModule,
                    ) -> Tuple[FPModule, Morphism]:
    """Sol(V) = {(v_1..v_q) in V^q : A v = 0 in V^p}, with its embedding."""
    ring = sys.ring
    vq = direct_power(v, sys.n_unknowns)
    vp = direct_power(v, sys.n_equations)
    action = PolyMatrix.kron(sys.mat, PolyMatrix.identity(ring, v.ngens))
    return kernel(Morphism(vq, vp, action, _checked=True))


@dataclass(frozen=True)
class MalgrangeCheckReport:
    """Bijectivity check of the canonical map Hom(M,V) -> Sol(V)."""

    system: str
    probe: Dict
    hom_ngens: int
    sol_ngens: int
    injective: bool
    surjective: bool

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    @property
    def ok(self) -> bool:
        return self.bijective

    def to_dict(self) -> Dict:
        return {
            "check": "malgrange",
            "system": self.system,
            "probe": self.probe,
            "hom_generators": self.hom_ngens,
            "solution_generators": self.sol_ngens,
            "injective": self.injective,
            "surjective": self.surjective,
            "bijective": self.bijective,
        }


def malgrange_check(sys: ControlSystem, v: FPModule) -> MalgrangeCheckReport:
    """Assert Hom(M, V) = Sol(V) via the map phi -> (phi(e_1)..phi(e_q))."""
    m = malgrange_module(sys)
    h = hom_module(m, v)
    sol, emb = solution_module(sys, v)
    ring = sys.ring
    vq = direct_power(v, sys.n_unknowns)
    cols = []
    for gen in h.generators():
        phi = h.decode(gen)
        flat = []
        for j in range(sys.n_unknowns):
            flat.extend(phi.mat.column(j).entries)
        coeffs = solve_mod(Vector(ring, flat), emb.mat, vq.relations)
        if coeffs is None:
            raise ValueError("solution tuple escaped the solution module")
        cols.append(Vector(ring, coeffs))
    cmp_map = Morphism(h, sol, PolyMatrix.from_columns(ring, sol.ngens, cols))
    return MalgrangeCheckReport(
        system=str(sys.mat),
        probe={"ngens": v.ngens, "relations": str(v.relations)},
        hom_ngens=h.ngens,
        sol_ngens=sol.ngens,
        injective=is_injective(cmp_map),
        surjective=is_surjective(cmp_map),
    )


def autonomy(sys: ControlSystem) -> Tuple[FPModule, Morphism]:
    """The torsion submodule of the Malgrange module, with its inclusion."""
    return bass_torsion(malgrange_module(sys))


def is_controllable(sys: ControlSystem) -> bool:
    """Controllable = torsion-free Malgrange module."""
    t, _ = autonomy(sys)
    return t.is_zero()


def _combination(sys: ControlSystem, vec: Vector) -> str:
    """Human-readable R-combination of the system unknowns."""
    parts = []
    one = Poly.one(sys.ring)
    for name, p in zip(sys.unknowns, vec.entries):
        if p.is_zero():
            continue
        if p == one:
            parts.append(name)
        elif p == -one:
            parts.append(f"-{name}")
        else:
            parts.append(f"({p})*{name}")
    if not parts:
        return "0"
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out


@dataclass(frozen=True)
class AutonomyGenerator:
    """One autonomous observable: a combination of unknowns together with
    the operators annihilating it."""

    combination: str
    element: str
    witnesses: Tuple[str, ...]

    @property
    def witness(self) -> Optional[str]:
        return self.witnesses[0] if self.witnesses else None

    def to_dict(self) -> Dict:
        return {
            "combination": self.combination,
            "element": self.element,
            "annihilators": list(self.witnesses),
        }


@dataclass(frozen=True)
class AnalysisReport:
    """Full controllability analysis of one system."""

    system: str
    unknowns: Tuple[str, ...]
    malgrange: Dict
    generators: Tuple[AutonomyGenerator, ...]
    controllable: bool
    theorem_check: MainTheoremReport

    @property
    def ok(self) -> bool:
        return self.theorem_check.ok

    def to_dict(self) -> Dict:
        return {
            "check": "analysis",
            "system": self.system,
            "unknowns": list(self.unknowns),
            "malgrange": self.malgrange,
            "autonomy": [g.to_dict() for g in self.generators],
            "controllable": self.controllable,
            "theorem_check": self.theorem_check.to_dict(),
        }


def autonomy_report(sys: ControlSystem) -> AnalysisReport:
    """Autonomy generators with annihilator witnesses, plus the runtime
    torsion/defect cross-check."""
    m = malgrange_module(sys)
    t, iota = bass_torsion(m)
    gens: List[AutonomyGenerator] = []
    for j in range(iota.mat.ncols):
        elem = Element(m, iota.mat.column(j))
        if elem.is_zero():
            continue
        ann = annihilator(elem)
        gens.append(AutonomyGenerator(
            combination=_combination(sys, elem.vec),
            element=str(elem.vec),
            witnesses=tuple(str(g) for g in ann.gens if not g.is_zero()),
        ))
    return AnalysisReport(
        system=str(sys.mat),
        unknowns=sys.unknowns,
        malgrange={"ngens": m.ngens, "relations": str(m.relations)},
        generators=tuple(gens),
        controllable=not gens,
        theorem_check=verify_main_theorem(m),
    )
