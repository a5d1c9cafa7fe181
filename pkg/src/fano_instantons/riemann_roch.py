"""Chern-class calculus and Euler characteristics on the supported threefolds.

Everything is computed in exact rational arithmetic (:class:`fractions.Fraction`);
the Riemann-Roch denominators 6, 4 and 12 must cancel for consistent input and
an integrality assertion guards that boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chow import (
    CurveClass,
    DivisorClass,
    Geometry,
    GeometryError,
    _check_same,
    descriptor,
    divisor_product,
    pair_curve_divisor,
    triple_product,
)


@dataclass(frozen=True)
class ChernData:
    """(rank, c1, c2, c3) of a sheaf-like object in Chow coordinates."""

    geometry: Geometry
    rank: int
    c1: DivisorClass
    c2: CurveClass
    c3: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        _check_same(self.geometry, self.c1.geometry)
        _check_same(self.geometry, self.c2.geometry)


def chern(geom: Geometry, rank: int, c1: tuple[int, int],
          c2: tuple[int, int] = (0, 0), c3: int = 0) -> ChernData:
    return ChernData(geom, rank, DivisorClass(geom, c1), CurveClass(geom, c2), c3)


def line_bundle_chern(d: DivisorClass) -> ChernData:
    return ChernData(d.geometry, 1, d, CurveClass(d.geometry, (0, 0)), 0)


def structure_sheaf_chern(geom: Geometry) -> ChernData:
    return chern(geom, 1, (0, 0))


def twist(c: ChernData, d: DivisorClass) -> ChernData:
    """Chern data of the tensor product with the line bundle O(d)."""
    geom = _check_same(c.geometry, d.geometry)
    r = c.rank
    d2 = divisor_product(d, d)
    c1 = c.c1 + r * d
    c2 = c.c2 + (r - 1) * divisor_product(c.c1, d) + math.comb(r, 2) * d2
    c3 = (c.c3
          + (r - 2) * pair_curve_divisor(c.c2, d)
          + math.comb(r - 1, 2) * pair_curve_divisor(d2, c.c1)
          + math.comb(r, 3) * pair_curve_divisor(d2, d))
    return ChernData(geom, r, c1, c2, c3)


def euler_characteristic(c: ChernData) -> int:
    """chi of a sheaf with the given Chern data, by Riemann-Roch.

    Uses the threefold Riemann-Roch expansion with the canonical class and
    the c2(Omega).c1 pairing taken from the geometry descriptor.  Raises
    ``ArithmeticError`` if the rational expression fails to be an integer,
    which signals inconsistent Chern data (or a bug).
    """
    desc = descriptor(c.geometry)
    if desc.canonical is None or desc.c2_cotangent is None:
        raise GeometryError("Euler characteristic needs Chow arithmetic; "
                            f"unsupported on {c.geometry.value}")
    omega = desc.canonical
    c1_cubed = triple_product(c.c1, c.c1, c.c1)
    c1_c2 = pair_curve_divisor(c.c2, c.c1)
    omega_c1_sq = pair_curve_divisor(divisor_product(c.c1, c.c1), omega)
    omega_c2 = pair_curve_divisor(c.c2, omega)
    omega_sq_c1 = pair_curve_divisor(divisor_product(omega, omega), c.c1)
    c2cot_c1 = pair_curve_divisor(desc.c2_cotangent, c.c1)

    chi = (Fraction(c.rank * desc.chi_structure_sheaf)
           + Fraction(c1_cubed - 3 * c1_c2 + 3 * c.c3, 6)
           - Fraction(omega_c1_sq - 2 * omega_c2, 4)
           + Fraction(omega_sq_c1 + c2cot_c1, 12))
    if chi.denominator != 1:
        raise ArithmeticError(f"non-integral Euler characteristic {chi} "
                              f"for {c}")
    return int(chi)


def rr_blowup(a: int, b: int, alpha: int, beta: int) -> Fraction:
    """Closed form for chi(E(a*xi + b*f)) on the blow-up.

    E here stands for any rank-2 sheaf with c1 = 0, c2 = alpha*xi^2 +
    beta*f^2 and c3 = 0; the value always coincides with
    ``euler_characteristic(twist(...))`` and is in fact an integer.
    """
    return (Fraction(a ** 3, 3) + a * a * b + a * b * b
            + 2 * a * a + b * b + 4 * a * b
            + 3 * b + Fraction(11 * a, 3) + 2
            - (a + b + 2) * alpha - (a + 1) * beta)


def slope(c: ChernData, polarization: DivisorClass) -> Fraction:
    """mu = c1.H^2 / rank with respect to the polarization H."""
    _check_same(c.geometry, polarization.geometry)
    h_sq = divisor_product(polarization, polarization)
    return Fraction(pair_curve_divisor(h_sq, c.c1), c.rank)


def hilbert_polynomial(c: ChernData, polarization: DivisorClass,
                       reduced: bool = False) -> tuple[Fraction, ...]:
    """Coefficients (t^0, t^1, t^2, t^3) of t -> chi(c twisted by t*H).

    chi(tH) is a cubic in t; the coefficients are recovered by exact
    interpolation of the Riemann-Roch values at t = 0, 1, 2, 3, which keeps
    the computation on the audited euler_characteristic path.  With
    ``reduced=True`` the coefficients are divided by the rank.
    """
    values = [Fraction(euler_characteristic(twist(c, t * polarization)))
              for t in range(4)]
    # Newton forward differences at nodes 0..3.
    d1 = [values[k + 1] - values[k] for k in range(3)]
    d2 = [d1[k + 1] - d1[k] for k in range(2)]
    d3 = d2[1] - d2[0]
    # p(t) = v0 + d1*t + d2/2*t(t-1) + d3/6*t(t-1)(t-2)
    c0 = values[0]
    c1 = d1[0] - Fraction(d2[0], 2) + Fraction(d3, 3)
    c2 = Fraction(d2[0], 2) - Fraction(d3, 2)
    c3 = Fraction(d3, 6)
    coeffs = (c0, c1, c2, c3)
    if reduced:
        coeffs = tuple(x / c.rank for x in coeffs)
    return coeffs


def evaluate_cubic(coeffs: tuple[Fraction, ...], t: int) -> Fraction:
    return sum((coeff * t ** k for k, coeff in enumerate(coeffs)), Fraction(0))


def whitney_sum(parts: list[ChernData]) -> ChernData:
    """Chern data of a formal direct sum, by the Whitney formula."""
    if not parts:
        raise ValueError("empty direct sum")
    geom = parts[0].geometry
    rank = 0
    c1 = DivisorClass(geom, (0, 0))
    c2 = CurveClass(geom, (0, 0))
    c3 = 0
    for i, p in enumerate(parts):
        _check_same(geom, p.geometry)
        rank += p.rank
        c1 = c1 + p.c1
        c3 += p.c3
        for q in parts[:i]:
            c3 += pair_curve_divisor(p.c2, q.c1) + pair_curve_divisor(q.c2, p.c1)
        c2 = c2 + p.c2
    for i, p in enumerate(parts):
        for j, q in enumerate(parts[:i]):
            c2 = c2 + divisor_product(p.c1, q.c1)
            for k in range(j):
                c3 += triple_product(p.c1, q.c1, parts[k].c1)
    return ChernData(geom, rank, c1, c2, c3)
