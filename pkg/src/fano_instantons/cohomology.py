"""Closed-form sheaf-cohomology dimensions.

Three families of formulas are implemented, all returning exact non-negative
integers:

* ``h_line_f``   -- line bundles O(a*xi + b*f) on the blow-up;
* ``h_omega_f``  -- twists of the pulled-back cotangent bundle of the plane,
  i.e. pi^* Omega^1_{P2} (a*xi + b*f), on the blow-up;
* ``h_line_flag`` -- line bundles O(a1*h1 + a2*h2) on the flag threefold.

All three use truncated sums of binomial coefficients with the convention
that a sum whose upper limit is below its lower limit is 0 and that a
binomial with top smaller than bottom (including any negative top) is 0.
The polynomial extension of the binomial to negative tops is deliberately
NOT used: it would introduce spurious terms and break Serre duality, which
the test suite checks on a grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .chow import DivisorClass, Geometry, GeometryError


def binom_nonneg(m: int, k: int) -> int:
    """Binomial coefficient, 0 whenever the top is less than the bottom."""
    if k < 0:
        raise ValueError("lower index must be non-negative")
    if m < k:
        return 0
    return math.comb(m, k)


def h_line_f(i: int, a: int, b: int) -> int:
    """h^i of O(a*xi + b*f) on the blow-up."""
    if i == 0:
        return sum(binom_nonneg(b + 2 + j, 2) for j in range(a + 1))
    if i == 1:
        return sum(binom_nonneg(b + 1 - j, 2) for j in range(-a - 1))
    if i == 2:
        return sum(binom_nonneg(-b - 1 - j, 2) for j in range(a + 1))
    if i == 3:
        return sum(binom_nonneg(-b + j, 2) for j in range(-a - 1))
    raise ValueError(f"cohomology degree {i} out of range 0..3")


def h_omega_f(i: int, a: int, b: int) -> int:
    """h^i of pi^* Omega^1_{P2} (a*xi + b*f) on the blow-up.

    The two constant-1 branches (for i = 1 and i = 2) take precedence over
    the summation branches; on the tested grid the two kinds of branch are
    never simultaneously nonzero, which the self-check suite asserts.
    """
    if i == 0:
        return sum(binom_nonneg(b + 1 + j, 1) * binom_nonneg(b - 1 + j, 1)
                   for j in range(a + 1))
    if i == 1:
        if a >= -b >= 0:
            return 1
        return sum(binom_nonneg(b - j, 1) * binom_nonneg(b - 2 - j, 1)
                   for j in range(-a - 1))
    if i == 2:
        if a <= -b - 1 <= -2:
            return 1
        return sum(binom_nonneg(-b + 1 - j, 1) * binom_nonneg(-b - 1 - j, 1)
                   for j in range(a + 1))
    if i == 3:
        return sum(binom_nonneg(-b + 2 + j, 1) * binom_nonneg(-b + j, 1)
                   for j in range(-a - 1))
    raise ValueError(f"cohomology degree {i} out of range 0..3")


def h_line_flag(i: int, a1: int, a2: int) -> int:
    """h^i of O(a1*h1 + a2*h2) on the flag threefold.

    The formula is stated for a1 <= a2 and is symmetric under swapping the
    two plane projections, so the inputs are sorted first.
    """
    if i not in (0, 1, 2, 3):
        raise ValueError(f"cohomology degree {i} out of range 0..3")
    a1, a2 = sorted((a1, a2))
    nonzero = (
        (i == 0 and a1 >= 0)
        or (i == 1 and a1 <= -2 and a1 + a2 + 1 >= 0)
        or (i == 2 and a2 >= 0 and a1 + a2 + 3 <= 0)
        or (i == 3 and a2 <= -2)
    )
    if not nonzero:
        return 0
    num = (a1 + 1) * (a2 + 1) * (a1 + a2 + 2)
    assert num % 2 == 0
    return abs(num) // 2


class SheafKind(Enum):
    LINE_BUNDLE = "line"
    PULLBACK_COTANGENT = "omega"


@dataclass(frozen=True)
class SheafTerm:
    """A sheaf for which the closed-form dimensions above apply.

    ``PULLBACK_COTANGENT`` means pi^* Omega^1_{P2} twisted by O(twist) and is
    only available on the blow-up.
    """

    geometry: Geometry
    kind: SheafKind
    twist: tuple[int, int]

    def __post_init__(self) -> None:
        if self.geometry is Geometry.P3:
            raise GeometryError("no sheaf-term cohomology on P3")
        if (self.kind is SheafKind.PULLBACK_COTANGENT
                and self.geometry is not Geometry.BLOWUP_P3):
            raise GeometryError("pullback cotangent terms live on the blow-up only")

    @property
    def rank(self) -> int:
        return 1 if self.kind is SheafKind.LINE_BUNDLE else 2

    def twisted(self, d: tuple[int, int]) -> "SheafTerm":
        return SheafTerm(self.geometry, self.kind,
                         (self.twist[0] + d[0], self.twist[1] + d[1]))

    def divisor(self) -> DivisorClass:
        return DivisorClass(self.geometry, self.twist)


def line_term(geom: Geometry, a: int, b: int) -> SheafTerm:
    return SheafTerm(geom, SheafKind.LINE_BUNDLE, (a, b))


def line_term_f(a: int, b: int) -> SheafTerm:
    return SheafTerm(Geometry.BLOWUP_P3, SheafKind.LINE_BUNDLE, (a, b))


def cotangent_term_f(a: int, b: int) -> SheafTerm:
    return SheafTerm(Geometry.BLOWUP_P3, SheafKind.PULLBACK_COTANGENT, (a, b))


def h_sheaf(i: int, term: SheafTerm) -> int:
    """Dispatch h^i to the closed form matching the term."""
    a, b = term.twist
    if term.kind is SheafKind.PULLBACK_COTANGENT:
        return h_omega_f(i, a, b)
    if term.geometry is Geometry.BLOWUP_P3:
        return h_line_f(i, a, b)
    if term.geometry is Geometry.FLAG:
        return h_line_flag(i, a, b)
    raise GeometryError(f"unsupported sheaf term on {term.geometry.value}")


def h_vector(term: SheafTerm) -> tuple[int, int, int, int]:
    """(h^0, h^1, h^2, h^3) of a sheaf term."""
    return tuple(h_sheaf(i, term) for i in range(4))  # type: ignore[return-value]


def chi_sheaf(term: SheafTerm) -> int:
    h0, h1, h2, h3 = h_vector(term)
    return h0 - h1 + h2 - h3


def is_effective(a: int, b: int) -> bool:
    """Whether O(a*xi + b*f) on the blow-up has a nonzero section."""
    return a >= 0 and a + b >= 0


def is_globally_generated(a: int, b: int) -> bool:
    """Whether O(a*xi + b*f) on the blow-up is globally generated."""
    return a >= 0 and b >= 0


def has_smooth_integral_member(a: int, b: int) -> bool:
    """Whether |a*xi + b*f| contains a smooth integral divisor.

    This holds exactly for globally generated nonzero classes (Bertini) and
    for the exceptional plane class xi - f itself.
    """
    if (a, b) == (1, -1):
        return True
    return is_globally_generated(a, b) and (a, b) != (0, 0)


def smooth_member_classes(box: int) -> list[tuple[int, int]]:
    """All classes in [0, box]^2 with a smooth integral member, plus xi - f."""
    classes = [(1, -1)]
    classes += [(a, b) for a in range(box + 1) for b in range(box + 1)
                if (a, b) != (0, 0)]
    return classes
