"""Exact scalar rings used throughout the engine.

Three rings appear in the pipeline:

* plain rationals (``fractions.Fraction``) for real-mode multivector
  coefficients and real matrix entries,
* Gaussian rationals (:class:`GaussianRational`) for complex-mode
  coefficients and complex matrix entries,
* rational quaternions (:class:`RationalQuaternion`) for matrix entries of
  algebras whose two-sided ideal is a quaternion ring.

All arithmetic is exact; no floating point is used anywhere.  In practice
every coefficient produced by the pipeline is a dyadic rational (an integer
over a power of two); this is asserted at serialization time rather than
being baked into the arithmetic, since ``Fraction`` already provides exact
normalized rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "Rational",
    "GaussianRational",
    "RationalQuaternion",
    "Scalar",
    "conjugate",
    "is_zero",
    "as_gaussian",
    "scalar_to_fraction",
]

Rational = Fraction


def _frac(x: Union[int, Fraction]) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0) -> "GaussianRational":
        return GaussianRational(_frac(re), _frac(im))

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other: object) -> "GaussianRational | None":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(_frac(other), Fraction(0))
        return None

    def __add__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- structure --------------------------------------------------------
    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


GAUSSIAN_ONE = GaussianRational.of(1)
GAUSSIAN_I = GaussianRational.of(0, 1)


@dataclass(frozen=True)
class RationalQuaternion:
    """A quaternion ``w + x q1 + y q2 + z q3`` with exact rational parts.

    Multiplication is noncommutative and follows ``q1 q2 = q3``,
    ``q2 q3 = q1``, ``q3 q1 = q2`` and ``q1^2 = q2^2 = q3^2 = -1``.
    """

    w: Fraction = Fraction(0)
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    z: Fraction = Fraction(0)

    @staticmethod
    def of(w=0, x=0, y=0, z=0) -> "RationalQuaternion":
        return RationalQuaternion(_frac(w), _frac(x), _frac(y), _frac(z))

    def _coerce(self, other: object) -> "RationalQuaternion | None":
        if isinstance(other, RationalQuaternion):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalQuaternion(_frac(other))
        return None

    def __add__(self, other: object) -> "RationalQuaternion":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalQuaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __sub__(self, other: object) -> "RationalQuaternion":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalQuaternion(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)

    def __rsub__(self, other: object) -> "RationalQuaternion":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __mul__(self, other: object) -> "RationalQuaternion":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.w, self.x, self.y, self.z
        e, f, g, h = o.w, o.x, o.y, o.z
        return RationalQuaternion(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )

    def __rmul__(self, other: object) -> "RationalQuaternion":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__mul__(self)

    def __neg__(self) -> "RationalQuaternion":
        return RationalQuaternion(-self.w, -self.x, -self.y, -self.z)

    def __bool__(self) -> bool:
        return bool(self.w) or bool(self.x) or bool(self.y) or bool(self.z)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.w, self.x, self.y, self.z) == (o.w, o.x, o.y, o.z)

    def __hash__(self) -> int:
        if self.x == 0 and self.y == 0 and self.z == 0:
            return hash(self.w)
        return hash((self.w, self.x, self.y, self.z))

    def conjugate(self) -> "RationalQuaternion":
        return RationalQuaternion(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self) -> Fraction:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def __str__(self) -> str:
        parts = []
        for value, unit in ((self.w, ""), (self.x, "q1"), (self.y, "q2"), (self.z, "q3")):
            if value:
                parts.append(f"{value}{unit}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


QUATERNION_UNITS = (
    RationalQuaternion.of(1),
    RationalQuaternion.of(0, 1),
    RationalQuaternion.of(0, 0, 1),
    RationalQuaternion.of(0, 0, 0, 1),
)

Scalar = Union[Fraction, GaussianRational, RationalQuaternion]


def conjugate(x: Scalar) -> Scalar:
    """Complex (or quaternion) conjugation; the identity on rationals."""
    if isinstance(x, (GaussianRational, RationalQuaternion)):
        return x.conjugate()
    return x


def is_zero(x: Scalar) -> bool:
    return not bool(x)


def as_gaussian(x: Union[int, Fraction, GaussianRational]) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(_frac(x), Fraction(0))


def scalar_to_fraction(x: Scalar) -> Fraction:
    """Extract the rational value of a scalar known to be real."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, GaussianRational):
        if x.im != 0:
            raise ValueError(f"scalar {x} is not real")
        return x.re
    if isinstance(x, RationalQuaternion):
        if x.x or x.y or x.z:
            raise ValueError(f"scalar {x} is not real")
        return x.w
    raise TypeError(f"unsupported scalar type {type(x)!r}")
