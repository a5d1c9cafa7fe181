"""Exact Chow-ring arithmetic for the two supported threefold geometries.

Two graded rings are implemented, both over the integers and both hard-coded
(there is no generic quotient-ring engine; the rings are tiny and fixed):

* ``BLOWUP_P3`` -- the blow-up F of projective 3-space at a point, with
  divisor basis (xi, f), curve basis (xi^2, f^2) and relations
  f^3 = 0, xi^2 = xi*f.  The point class is xi^3 = xi^2*f = xi*f^2 and
  deg F = (xi+f)^3 = 7.
* ``FLAG`` -- the flag threefold (hyperplane section of P^2 x P^2), with
  divisor basis (h1, h2), curve basis (h1^2, h2^2) and relations
  h1*h2 = h1^2 + h2^2, h1^3 = h2^3 = 0.  The point class is
  h1^2*h2 = h1*h2^2 and the degree is 6.

``P3`` is carried only for scalar data (index, degree); attempting ring
arithmetic on it raises :class:`GeometryError`.

Classes are immutable value objects; all operations are pure functions, so
everything here is safe for unsynchronized concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable


class Geometry(Enum):
    BLOWUP_P3 = "f"
    FLAG = "flag"
    P3 = "p3"


class GeometryError(ValueError):
    """Ring operation requested on an unsupported geometry."""


class GeometryMismatch(GeometryError):
    """Operands tagged with different geometries."""


Pair = tuple[int, int]


def _check_same(a: Geometry, b: Geometry) -> Geometry:
    if a is not b:
        raise GeometryMismatch(f"geometry mismatch: {a.value} vs {b.value}")
    return a


def _check_ring(geom: Geometry) -> None:
    if geom is Geometry.P3:
        raise GeometryError("P3 carries scalar data only, no Chow arithmetic")


# Divisor * divisor -> curve coordinates, per geometry.
#
# Blow-up: (a xi + b f)(c xi + d f) = (ac + ad + bc) xi^2 + bd f^2
# Flag:    (a1 h1 + a2 h2)(c1 h1 + c2 h2)
#          = (a1 c1 + a1 c2 + a2 c1) h1^2 + (a2 c2 + a1 c2 + a2 c1) h2^2
def _div_mul_f(x: Pair, y: Pair) -> Pair:
    (a, b), (c, d) = x, y
    return (a * c + a * d + b * c, b * d)


def _div_mul_flag(x: Pair, y: Pair) -> Pair:
    (a1, a2), (c1, c2) = x, y
    cross = a1 * c2 + a2 * c1
    return (a1 * c1 + cross, a2 * c2 + cross)


# Curve * divisor -> multiple of the point class, per geometry.
#
# Blow-up: (al xi^2 + be f^2)(a xi + b f) = al(a+b) + be*a
# Flag:    (k1 h1^2 + k2 h2^2)(a1 h1 + a2 h2) = k1 a2 + k2 a1
def _curve_div_f(c: Pair, d: Pair) -> int:
    (al, be), (a, b) = c, d
    return al * (a + b) + be * a


def _curve_div_flag(c: Pair, d: Pair) -> int:
    (k1, k2), (a1, a2) = c, d
    return k1 * a2 + k2 * a1


_DIV_MUL: dict[Geometry, Callable[[Pair, Pair], Pair]] = {
    Geometry.BLOWUP_P3: _div_mul_f,
    Geometry.FLAG: _div_mul_flag,
}
_CURVE_DIV: dict[Geometry, Callable[[Pair, Pair], int]] = {
    Geometry.BLOWUP_P3: _curve_div_f,
    Geometry.FLAG: _curve_div_flag,
}


@dataclass(frozen=True)
class DivisorClass:
    """Degree-1 class, integer coordinates in the fixed divisor basis."""

    geometry: Geometry
    coords: Pair

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same(self.geometry, other.geometry)
        return DivisorClass(self.geometry, (self.coords[0] + other.coords[0],
                                            self.coords[1] + other.coords[1]))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.geometry, (-self.coords[0], -self.coords[1]))

    def __rmul__(self, n: int) -> "DivisorClass":
        return DivisorClass(self.geometry, (n * self.coords[0], n * self.coords[1]))

    def square(self) -> "CurveClass":
        return divisor_product(self, self)

    def is_zero(self) -> bool:
        return self.coords == (0, 0)


@dataclass(frozen=True)
class CurveClass:
    """Degree-2 class, integer coordinates in the fixed curve basis."""

    geometry: Geometry
    coords: Pair

    def __add__(self, other: "CurveClass") -> "CurveClass":
        _check_same(self.geometry, other.geometry)
        return CurveClass(self.geometry, (self.coords[0] + other.coords[0],
                                          self.coords[1] + other.coords[1]))

    def __sub__(self, other: "CurveClass") -> "CurveClass":
        return self + (-other)

    def __neg__(self) -> "CurveClass":
        return CurveClass(self.geometry, (-self.coords[0], -self.coords[1]))

    def __rmul__(self, n: int) -> "CurveClass":
        return CurveClass(self.geometry, (n * self.coords[0], n * self.coords[1]))

    def is_zero(self) -> bool:
        return self.coords == (0, 0)


def divisor(geom: Geometry, a: int, b: int) -> DivisorClass:
    _check_ring(geom)
    return DivisorClass(geom, (a, b))


def curve(geom: Geometry, a: int, b: int) -> CurveClass:
    _check_ring(geom)
    return CurveClass(geom, (a, b))


def div_f(a: int, b: int) -> DivisorClass:
    """a*xi + b*f on the blow-up."""
    return DivisorClass(Geometry.BLOWUP_P3, (a, b))


def curve_f(alpha: int, beta: int) -> CurveClass:
    """alpha*xi^2 + beta*f^2 on the blow-up."""
    return CurveClass(Geometry.BLOWUP_P3, (alpha, beta))


def div_flag(a1: int, a2: int) -> DivisorClass:
    """a1*h1 + a2*h2 on the flag threefold."""
    return DivisorClass(Geometry.FLAG, (a1, a2))


def curve_flag(k1: int, k2: int) -> CurveClass:
    """k1*h1^2 + k2*h2^2 on the flag threefold."""
    return CurveClass(Geometry.FLAG, (k1, k2))


def divisor_product(x: DivisorClass, y: DivisorClass) -> CurveClass:
    geom = _check_same(x.geometry, y.geometry)
    _check_ring(geom)
    return CurveClass(geom, _DIV_MUL[geom](x.coords, y.coords))


def pair_curve_divisor(c: CurveClass, d: DivisorClass) -> int:
    """Intersection number of a curve class with a divisor class."""
    geom = _check_same(c.geometry, d.geometry)
    _check_ring(geom)
    return _CURVE_DIV[geom](c.coords, d.coords)


def triple_product(x: DivisorClass, y: DivisorClass, z: DivisorClass) -> int:
    """Degree of the product of three divisor classes."""
    return pair_curve_divisor(divisor_product(x, y), z)


@dataclass(frozen=True)
class GradedClass:
    """A full element of the Chow ring, stored by graded parts.

    ``deg0`` is a multiple of the fundamental class, ``deg3`` a multiple of
    the point class; ``deg1``/``deg2`` live in the fixed bases above.
    Products that would exceed degree 3 are truncated to zero (they vanish
    in the ring for dimension reasons).
    """

    geometry: Geometry
    deg0: int
    deg1: Pair
    deg2: Pair
    deg3: int

    @staticmethod
    def zero(geom: Geometry) -> "GradedClass":
        _check_ring(geom)
        return GradedClass(geom, 0, (0, 0), (0, 0), 0)

    @staticmethod
    def one(geom: Geometry) -> "GradedClass":
        _check_ring(geom)
        return GradedClass(geom, 1, (0, 0), (0, 0), 0)

    @staticmethod
    def from_divisor(d: DivisorClass) -> "GradedClass":
        _check_ring(d.geometry)
        return GradedClass(d.geometry, 0, d.coords, (0, 0), 0)

    @staticmethod
    def from_curve(c: CurveClass) -> "GradedClass":
        _check_ring(c.geometry)
        return GradedClass(c.geometry, 0, (0, 0), c.coords, 0)

    @staticmethod
    def point(geom: Geometry, n: int = 1) -> "GradedClass":
        _check_ring(geom)
        return GradedClass(geom, 0, (0, 0), (0, 0), n)

    def divisor_part(self) -> DivisorClass:
        return DivisorClass(self.geometry, self.deg1)

    def curve_part(self) -> CurveClass:
        return CurveClass(self.geometry, self.deg2)

    def __add__(self, other: "GradedClass") -> "GradedClass":
        _check_same(self.geometry, other.geometry)
        return GradedClass(
            self.geometry,
            self.deg0 + other.deg0,
            (self.deg1[0] + other.deg1[0], self.deg1[1] + other.deg1[1]),
            (self.deg2[0] + other.deg2[0], self.deg2[1] + other.deg2[1]),
            self.deg3 + other.deg3,
        )

    def __sub__(self, other: "GradedClass") -> "GradedClass":
        return self + (-other)

    def __neg__(self) -> "GradedClass":
        return -1 * self

    def __rmul__(self, n: int) -> "GradedClass":
        return GradedClass(
            self.geometry, n * self.deg0,
            (n * self.deg1[0], n * self.deg1[1]),
            (n * self.deg2[0], n * self.deg2[1]),
            n * self.deg3,
        )

    def __mul__(self, other: "GradedClass") -> "GradedClass":
        if isinstance(other, int):
            return other * self
        geom = _check_same(self.geometry, other.geometry)
        _check_ring(geom)
        dmul, cdiv = _DIV_MUL[geom], _CURVE_DIV[geom]
        x0, x1, x2, x3 = self.deg0, self.deg1, self.deg2, self.deg3
        y0, y1, y2, y3 = other.deg0, other.deg1, other.deg2, other.deg3
        d11 = dmul(x1, y1)
        deg1 = (x0 * y1[0] + y0 * x1[0], x0 * y1[1] + y0 * x1[1])
        deg2 = (x0 * y2[0] + y0 * x2[0] + d11[0],
                x0 * y2[1] + y0 * x2[1] + d11[1])
        deg3 = x0 * y3 + y0 * x3 + cdiv(y2, x1) + cdiv(x2, y1)
        return GradedClass(geom, x0 * y0, deg1, deg2, deg3)

    def is_zero(self) -> bool:
        return (self.deg0 == 0 and self.deg1 == (0, 0)
                and self.deg2 == (0, 0) and self.deg3 == 0)


def mul(x: GradedClass, y: GradedClass) -> GradedClass:
    return x * y


def degree(x: GradedClass) -> int:
    """Coefficient of the point class of a degree-3 concentrated class."""
    if x.deg0 != 0 or x.deg1 != (0, 0) or x.deg2 != (0, 0):
        raise ValueError("class has nonzero parts below degree 3")
    return x.deg3


@dataclass(frozen=True)
class GeometryDescriptor:
    """Scalar and intersection data attached to a supported geometry.

    ``c2_cotangent`` is the curve class of c2 of the cotangent bundle, which
    is exactly the data needed to evaluate c2(Omega_X).D for divisors D in
    the Riemann-Roch formula.  For P3 only the scalar fields are meaningful.
    """

    geometry: Geometry
    index: int
    half_index: int
    degree: int
    canonical: DivisorClass | None
    c2_cotangent: CurveClass | None
    chi_structure_sheaf: int = 1

    def fundamental_divisor(self) -> DivisorClass:
        if self.canonical is None:
            raise GeometryError("no divisor arithmetic on this geometry")
        # canonical = -index * h for the fundamental polarization h
        a, b = self.canonical.coords
        return DivisorClass(self.geometry, (-a // self.index, -b // self.index))


BLOWUP_P3 = GeometryDescriptor(
    geometry=Geometry.BLOWUP_P3,
    index=2,
    half_index=1,
    degree=7,
    canonical=div_f(-2, -2),
    c2_cotangent=curve_f(6, 0),
)

FLAG_THREEFOLD = GeometryDescriptor(
    geometry=Geometry.FLAG,
    index=2,
    half_index=1,
    degree=6,
    canonical=div_flag(-2, -2),
    c2_cotangent=curve_flag(6, 6),
)

P3 = GeometryDescriptor(
    geometry=Geometry.P3,
    index=4,
    half_index=2,
    degree=1,
    canonical=None,
    c2_cotangent=None,
)

DESCRIPTORS: dict[Geometry, GeometryDescriptor] = {
    Geometry.BLOWUP_P3: BLOWUP_P3,
    Geometry.FLAG: FLAG_THREEFOLD,
    Geometry.P3: P3,
}


def descriptor(geom: Geometry) -> GeometryDescriptor:
    return DESCRIPTORS[geom]
