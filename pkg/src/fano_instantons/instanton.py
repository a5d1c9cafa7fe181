"""Instanton invariants on the blow-up: admissibility, cohomology table,
natural-cohomology pattern, minimality, pullback classification and the
Ext/moduli dimension formulas.

An instanton bundle here is a rank-2 bundle E with c1 = 0 whose charge is
c2(E) = alpha*xi^2 + beta*f^2; gamma records h^1(E(-2*xi)), the single number
controlling earnestness.  Everything below manipulates the (alpha, beta,
gamma) bookkeeping; no sheaf is ever represented explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .chow import (
    BLOWUP_P3,
    CurveClass,
    Geometry,
    GeometryDescriptor,
    GeometryError,
    curve_f,
    div_f,
    pair_curve_divisor,
)
from .riemann_roch import ChernData, chern, euler_characteristic, twist


class InadmissibleInvariants(ValueError):
    """Operation requiring admissible invariants got an inadmissible triple."""

    def __init__(self, violations: list[str]):
        super().__init__("inadmissible invariants: " + "; ".join(violations))
        self.violations = violations


@dataclass(frozen=True)
class InstantonInvariants:
    """The triple (alpha, beta, gamma) attached to an instanton on the blow-up.

    gamma defaults to 0, the earnest case, which is the one the curve
    construction actually produces.
    """

    alpha: int
    beta: int
    gamma: int = 0
    geometry: Geometry = Geometry.BLOWUP_P3

    def charge(self) -> CurveClass:
        return curve_f(self.alpha, self.beta)

    def charge_pairing(self) -> int:
        """c2 . h, the degree of the charge against the polarization."""
        return pair_curve_divisor(self.charge(), div_f(1, 1))

    def chern_data(self) -> ChernData:
        return chern(Geometry.BLOWUP_P3, 2, (0, 0), (self.alpha, self.beta), 0)


def validate_invariants(inv: InstantonInvariants) -> list[str]:
    """Named violations of the admissibility inequalities (empty = admissible).

    The inequalities are exactly the non-negativity of the entries of the
    cohomology table plus the charge bound and 0 <= gamma <= alpha.
    """
    a, b, g = inv.alpha, inv.beta, inv.gamma
    violations = []
    if a < 0:
        violations.append("alpha >= 0")
    if a + b < 0:
        violations.append("alpha + beta >= 0")
    if b + g < 0:
        violations.append("beta + gamma >= 0")
    if 2 * a + b < 2:
        violations.append("2*alpha + beta >= 2")
    if g < 0:
        violations.append("gamma >= 0")
    if g > a:
        violations.append("gamma <= alpha")
    return violations


def is_admissible(inv: InstantonInvariants) -> bool:
    return not validate_invariants(inv)


def require_admissible(inv: InstantonInvariants) -> None:
    violations = validate_invariants(inv)
    if violations:
        raise InadmissibleInvariants(violations)


# The twists F_0..F_5 whose E-cohomology the table records, as (a, b) with
# F_p = O(a*xi + b*f).
TABLE_TWISTS: tuple[tuple[int, int], ...] = (
    (-1, -1), (-1, 0), (-1, 1), (0, -2), (0, -1), (0, 0),
)


@dataclass(frozen=True)
class CohomologyTable:
    """4x6 table of h^q(E tensor F_p), rows q = 0..3, columns p = 0..5."""

    rows: tuple[tuple[int, ...], ...]

    def entry(self, q: int, p: int) -> int:
        return self.rows[q][p]

    def column(self, p: int) -> tuple[int, ...]:
        return tuple(self.rows[q][p] for q in range(4))

    def column_alternating_sum(self, p: int) -> int:
        return sum((-1) ** q * self.rows[q][p] for q in range(4))


def cohomology_table(inv: InstantonInvariants) -> CohomologyTable:
    """The full table of twisted cohomology dimensions for an instanton.

    A negative symbolic entry is exactly an inadmissibility witness, so the
    validator runs first and the instantiated entries are guaranteed
    non-negative.
    """
    require_admissible(inv)
    a, b, g = inv.alpha, inv.beta, inv.gamma
    q1 = (0, a, 2 * a, b + g, a + b, 2 * a + b - 2)
    q2 = (0, 0, 0, g, 0, 0)
    zero = (0,) * 6
    return CohomologyTable(rows=(zero, q1, q2, zero))


@dataclass(frozen=True)
class NaturalCohomologyReport:
    natural: bool
    rows: tuple[tuple[int, tuple[int, int, int, int]], ...]  # (lambda, h-vector)


def check_natural_cohomology(inv: InstantonInvariants) -> NaturalCohomologyReport:
    """h-vectors of E(lambda*h) for lambda in {-2, -1, 0} and the pattern check.

    The values come from the table column p = 5 and Serre duality
    (h^i(E(-2h)) = h^{3-i}(E) for c1 = 0); naturality means at most one
    nonzero entry per row, with the nonzero degree being 1 at lambda = 0 and
    2 at lambda = -2.
    """
    require_admissible(inv)
    h1_e = 2 * inv.alpha + inv.beta - 2
    rows = (
        (0, (0, h1_e, 0, 0)),
        (-1, (0, 0, 0, 0)),
        (-2, (0, 0, h1_e, 0)),
    )
    natural = True
    for lam, hvec in rows:
        nonzero = [i for i, h in enumerate(hvec) if h != 0]
        if len(nonzero) > 1:
            natural = False
        for i in nonzero:
            if not ((i == 1 and lam == 0) or (i == 2 and lam == -2)):
                natural = False
    return NaturalCohomologyReport(natural=natural, rows=rows)


def minimal_charge_bound(geom: GeometryDescriptor) -> Fraction:
    """Lower bound for the charge degree c2 . h on a Fano threefold."""
    if geom.index == 4:
        return Fraction(1)
    if geom.index in (2, 3):
        return Fraction(2)
    if geom.index == 1:
        return Fraction(geom.degree, 4)
    raise GeometryError(f"index {geom.index} out of the Fano range 1..4")


def is_minimal(inv: InstantonInvariants) -> bool:
    """Minimal instantons attain the charge bound: 2*alpha + beta = 2."""
    require_admissible(inv)
    return inv.charge_pairing() == minimal_charge_bound(BLOWUP_P3)


@dataclass(frozen=True)
class PullbackDescriptor:
    """Description of an instanton as a pullback along one of the two maps.

    ``via`` is "sigma" (blow-down to P3) or "pi" (projection to P2); the
    annotations record facts asserted in the source classification, not
    re-verified here.
    """

    via: str
    description: str
    charge: int
    annotations: tuple[str, ...] = ()


ULRICH_NOTE = ("minimality is equivalent to E(h) being an Ulrich bundle; "
               "minimal instantons are generically trivial and earnest "
               "(asserted by the classification, not machine-checked)")


def ulrich_classification(inv: InstantonInvariants) -> PullbackDescriptor:
    """Classify a minimal instanton via the rank-2 Ulrich classification."""
    require_admissible(inv)
    if not is_minimal(inv):
        raise ValueError("Ulrich classification applies to minimal "
                         f"instantons only; 2*alpha + beta = {inv.charge_pairing()}")
    if (inv.alpha, inv.beta) == (1, 0):
        return PullbackDescriptor(
            via="sigma",
            description="pullback of a null-correlation bundle on P3",
            charge=1,
            annotations=(ULRICH_NOTE,),
        )
    if (inv.alpha, inv.beta) == (0, 2):
        return PullbackDescriptor(
            via="pi",
            description="pullback of a stable rank-2 bundle on P2 with c2 = 2",
            charge=2,
            annotations=(ULRICH_NOTE,),
        )
    # Admissible triples such as (2, -2, 2) meet the charge bound but are
    # excluded by the classification (minimal forces earnest, hence beta >= 0).
    return PullbackDescriptor(
        via="none",
        description="no minimal instanton exists with this charge "
                     "(excluded by the Ulrich classification)",
        charge=inv.charge_pairing(),
        annotations=(ULRICH_NOTE,),
    )


def is_earnest_criterion(inv: InstantonInvariants) -> bool:
    """Earnest if and only if gamma = h^1(E(-2*xi)) vanishes."""
    require_admissible(inv)
    return inv.gamma == 0


def in_movable_cone(c: CurveClass) -> bool:
    """Whether a curve class on the blow-up pairs >= 0 with every effective divisor."""
    if c.geometry is not Geometry.BLOWUP_P3:
        raise GeometryError("movable-cone test implemented for the blow-up only")
    alpha, beta = c.coords
    return alpha >= 0 and beta >= 0


def ext_difference(geom: GeometryDescriptor, c2_h: int, c1_sq_h: int = 0) -> int:
    """dim Ext^1(E, E) - dim Ext^2(E, E) for a simple instanton.

    Scalar formula 2*i*c2.h - i*(c1^2.h)/2 - 3 in terms of the index i of the
    geometry; simplicity of the bundle is the caller's responsibility.
    """
    num = 4 * geom.index * c2_h - geom.index * c1_sq_h - 6
    if num % 2 != 0:
        raise ArithmeticError("ext difference is not an integer; "
                              "inconsistent pairing data")
    return num // 2


def classify_pullback(inv: InstantonInvariants) -> Optional[PullbackDescriptor]:
    """Recognize instantons pulled back from P3 (beta = gamma = 0) or P2 (alpha = 0)."""
    require_admissible(inv)
    if inv.beta == 0 and inv.gamma == 0:
        return PullbackDescriptor(
            via="sigma",
            description=f"pullback of a P3 instanton bundle with charge {inv.alpha}",
            charge=inv.alpha,
        )
    if inv.alpha == 0:
        # gamma <= alpha forces gamma = 0 here.
        return PullbackDescriptor(
            via="pi",
            description="pullback of a mu-stable rank-2 bundle on P2 "
                        f"with c1 = 0 and c2 = {inv.beta}",
            charge=inv.beta,
        )
    return None


MODULI_OPEN_QUESTION = (
    "whether this component is the full locus of earnest instantons with "
    "this charge is open for general (alpha, beta)"
)


@dataclass(frozen=True)
class ModuliComponentReport:
    dimension: int
    generically_smooth: bool
    description: str
    annotations: tuple[str, ...] = field(default=(MODULI_OPEN_QUESTION,))


def moduli_component_report(inv: InstantonInvariants) -> ModuliComponentReport:
    """Dimension report for the component containing the curve-built bundles."""
    require_admissible(inv)
    if inv.alpha < 0 or inv.beta < 0:
        raise ValueError("component report needs alpha, beta >= 0")
    dim = 8 * inv.alpha + 4 * inv.beta - 3
    return ModuliComponentReport(
        dimension=dim,
        generically_smooth=True,
        description="component of the instanton locus containing all "
                    "bundles from the disjoint-curve construction",
    )
