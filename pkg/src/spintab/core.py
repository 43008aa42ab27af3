"""Exact blade and multivector arithmetic for Cl(p,q).

Blades are basis elements ``e_{i1 i2 ...}`` with strictly increasing
generator indices, encoded as an n-bit mask (bit ``i-1`` set when generator
``i`` participates; the empty mask is the scalar blade ``1``).  Multivectors
are finite maps from blades to exact scalars.

The geometric product of two blades is computed by counting the adjacent
transpositions needed to merge the two sorted index lists, then contracting
repeated generators against the metric (``e_i^2 = +1`` for ``i <= p``,
``-1`` for ``i > p``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from .scalars import GaussianRational, RationalQuaternion, Scalar, conjugate

__all__ = [
    "Signature",
    "Blade",
    "SCALAR_BLADE",
    "Multivector",
    "blade_product",
    "blade_square_sign",
    "basis_blades",
    "geometric_product",
    "reverse",
    "grade_involution",
    "clifford_conjugate",
    "sharp",
    "scalar_part",
    "scalar_product",
    "hermitian_adjoint",
    "commutes",
]


@dataclass(frozen=True)
class Signature:
    """The metric signature (p, q) of Cl(p,q)."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError(f"invalid signature ({self.p},{self.q})")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def negative_mask(self) -> int:
        """Bitmask of the generators squaring to -1 (indices p+1..n)."""
        return ((1 << self.n) - 1) & ~((1 << self.p) - 1)

    def generator_square(self, index: int) -> int:
        """The metric square (+1 or -1) of generator ``e_index``."""
        if not 1 <= index <= self.n:
            raise ValueError(f"generator index {index} out of range for {self}")
        return 1 if index <= self.p else -1

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q})"


@dataclass(frozen=True, order=False)
class Blade:
    """A basis blade, stored as a bitmask over generator indices."""

    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0:
            raise ValueError("blade bitmask must be non-negative")

    @staticmethod
    def from_indices(indices: Iterable[int]) -> "Blade":
        bits = 0
        for i in indices:
            if i < 1:
                raise ValueError(f"generator index {i} must be >= 1")
            bit = 1 << (i - 1)
            if bits & bit:
                raise ValueError(f"repeated generator index {i}")
            bits |= bit
        return Blade(bits)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i in range(self.bits.bit_length()) if self.bits >> i & 1)

    @property
    def grade(self) -> int:
        return self.bits.bit_count()

    @property
    def is_scalar(self) -> bool:
        return self.bits == 0

    def __str__(self) -> str:
        if self.bits == 0:
            return "1"
        return "e" + "".join(str(i) for i in self.indices)

    __repr__ = __str__


SCALAR_BLADE = Blade(0)


def _reorder_sign(a_bits: int, b_bits: int) -> int:
    """Sign from moving each generator of ``b`` past the higher-index
    generators of ``a`` when merging the two sorted index lists."""
    swaps = 0
    a = a_bits >> 1
    while a:
        swaps += (a & b_bits).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_product(a: Blade, b: Blade, sig: Signature) -> Tuple[Blade, int]:
    """The geometric product of two blades: result blade and its sign."""
    sign = _reorder_sign(a.bits, b.bits)
    common = a.bits & b.bits
    if (common & sig.negative_mask).bit_count() & 1:
        sign = -sign
    return Blade(a.bits ^ b.bits), sign


def blade_square_sign(b: Blade, sig: Signature) -> int:
    """The sign of ``e_T`` squared (always +1 or -1)."""
    _, sign = blade_product(b, b, sig)
    return sign


def commutes(a: Blade, b: Blade, sig: Signature) -> bool:
    """Whether two blades commute under the geometric product."""
    ab, sab = blade_product(a, b, sig)
    ba, sba = blade_product(b, a, sig)
    return ab == ba and sab == sba


def basis_blades(sig: Signature) -> Tuple[Blade, ...]:
    """All ``2^n`` basis blades, in bitmask order."""
    return tuple(Blade(bits) for bits in range(1 << sig.n))


CoefficientLike = Union[int, Fraction, GaussianRational, RationalQuaternion]


@dataclass(frozen=True)
class Multivector:
    """An immutable multivector: a map from blades to exact scalars."""

    sig: Signature
    terms: Mapping[Blade, Scalar] = field(default_factory=dict)

    @staticmethod
    def from_terms(sig: Signature, terms: Mapping[Blade, CoefficientLike]) -> "Multivector":
        clean: Dict[Blade, Scalar] = {}
        for blade, coeff in terms.items():
            if blade.bits >> sig.n:
                raise ValueError(f"blade {blade} not valid for {sig}")
            if isinstance(coeff, int):
                coeff = Fraction(coeff)
            if coeff:
                clean[blade] = coeff
        return Multivector(sig, clean)

    @staticmethod
    def zero(sig: Signature) -> "Multivector":
        return Multivector(sig, {})

    @staticmethod
    def scalar(sig: Signature, value: CoefficientLike) -> "Multivector":
        return Multivector.from_terms(sig, {SCALAR_BLADE: value})

    @staticmethod
    def blade(sig: Signature, blade: Blade, coeff: CoefficientLike = 1) -> "Multivector":
        return Multivector.from_terms(sig, {blade: coeff})

    @staticmethod
    def generator(sig: Signature, index: int) -> "Multivector":
        return Multivector.blade(sig, Blade.from_indices([index]))

    # -- inspection -------------------------------------------------------
    def coefficient(self, blade: Blade) -> Scalar:
        return self.terms.get(blade, Fraction(0))

    def blades(self) -> Tuple[Blade, ...]:
        return tuple(self.terms.keys())

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator[Tuple[Blade, Scalar]]:
        return iter(self.terms.items())

    def key(self) -> Tuple[Tuple[int, Scalar], ...]:
        """A hashable canonical key (for dedup dictionaries)."""
        return tuple(sorted((b.bits, c) for b, c in self.terms.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.sig, self.key()))

    # -- linear structure -------------------------------------------------
    def __add__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        acc: Dict[Blade, Scalar] = dict(self.terms)
        for blade, coeff in other.terms.items():
            new = acc.get(blade, 0) + coeff
            if new:
                acc[blade] = new
            else:
                acc.pop(blade, None)
        return Multivector(self.sig, acc)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __neg__(self) -> "Multivector":
        return Multivector(self.sig, {b: -c for b, c in self.terms.items()})

    def scale(self, factor: CoefficientLike) -> "Multivector":
        """Left-multiply every coefficient by ``factor``."""
        if isinstance(factor, int):
            factor = Fraction(factor)
        if not factor:
            return Multivector.zero(self.sig)
        return Multivector(self.sig, {b: factor * c for b, c in self.terms.items()})

    def map_coefficients(self, f) -> "Multivector":
        acc = {b: f(c) for b, c in self.terms.items()}
        return Multivector(self.sig, {b: c for b, c in acc.items() if c})

    # -- products ---------------------------------------------------------
    def __mul__(self, other: "Multivector") -> "Multivector":
        return geometric_product(self, other)

    def _check(self, other: "Multivector") -> None:
        if self.sig != other.sig:
            raise ValueError(f"signature mismatch: {self.sig} vs {other.sig}")

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for blade in sorted(self.terms, key=lambda b: (b.grade, b.bits)):
            coeff = self.terms[blade]
            if blade.is_scalar:
                parts.append(f"{coeff}")
            else:
                parts.append(f"{coeff}*{blade}")
        return " + ".join(parts)

    __repr__ = __str__


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """The bilinear extension of the blade product.

    Coefficient multiplication is applied with ``a``'s coefficient on the
    left, which matters for noncommutative (quaternion) coefficients.
    """
    a._check(b)
    sig = a.sig
    acc: Dict[Blade, Scalar] = {}
    for ba, ca in a.terms.items():
        for bb, cb in b.terms.items():
            blade, sign = blade_product(ba, bb, sig)
            contrib = ca * cb
            if sign < 0:
                contrib = -contrib
            new = acc.get(blade, 0) + contrib
            if new:
                acc[blade] = new
            else:
                acc.pop(blade, None)
    return Multivector(sig, acc)


def _grade_sign_map(a: Multivector, sign_of_grade) -> Multivector:
    return Multivector(
        a.sig,
        {
            b: (c if sign_of_grade(b.grade) > 0 else -c)
            for b, c in a.terms.items()
        },
    )


def reverse(a: Multivector) -> Multivector:
    """Reversion: a grade-g blade picks up ``(-1)^(g(g-1)/2)``."""
    return _grade_sign_map(a, lambda g: -1 if (g * (g - 1) // 2) & 1 else 1)


def grade_involution(a: Multivector) -> Multivector:
    """Grade involution: a grade-g blade picks up ``(-1)^g``."""
    return _grade_sign_map(a, lambda g: -1 if g & 1 else 1)


def clifford_conjugate(a: Multivector) -> Multivector:
    """Clifford conjugation: reversion composed with grade involution."""
    return reverse(grade_involution(a))


def sharp(a: Multivector) -> Multivector:
    """Index raising: each blade picks up ``(-1)^(#negative-metric indices)``."""
    neg = a.sig.negative_mask
    return Multivector(
        a.sig,
        {
            b: (c if (b.bits & neg).bit_count() % 2 == 0 else -c)
            for b, c in a.terms.items()
        },
    )


def scalar_part(a: Multivector) -> Scalar:
    """The coefficient of the scalar blade (0 if absent)."""
    return a.terms.get(SCALAR_BLADE, Fraction(0))


def scalar_product(a: Multivector, b: Multivector) -> Scalar:
    """``scalar_part(a * b)`` computed without forming the full product.

    Only matching blades contribute a scalar term, so this is linear in the
    number of stored terms.
    """
    a._check(b)
    total: Scalar = Fraction(0)
    small, large = (a, b) if len(a.terms) <= len(b.terms) else (b, a)
    for blade, _ in small.terms.items():
        cb = large.terms.get(blade)
        if cb is None:
            continue
        ca = a.terms[blade]
        cb = b.terms[blade]
        contrib = ca * cb
        if blade_square_sign(blade, a.sig) < 0:
            contrib = -contrib
        total = total + contrib
    return total


def hermitian_adjoint(a: Multivector) -> Multivector:
    """Maps each term ``c e_T`` to ``c* e_T^{-1}``.

    The blade inverse is ``e_T`` scaled by the sign of its square, and ``*``
    conjugates the coefficient (the identity for rationals).
    """
    acc: Dict[Blade, Scalar] = {}
    for blade, coeff in a.terms.items():
        c = conjugate(coeff)
        if blade_square_sign(blade, a.sig) < 0:
            c = -c
        acc[blade] = c
    return Multivector(a.sig, acc)
