"""Left ideals, two-sided ideals (division rings) and spinor bases.

Given a primitive idempotent P:

* the minimal left ideal is {Cl(p,q)} P, deduplicated up to sign,
* the two-sided ideal K = P {Cl(p,q)} P contains 1, 2 or 4 elements and is
  isomorphic to R, C or H,
* the spinor basis keeps the ideal elements that are not division-ring
  right-multiples of earlier ones; for semisimple algebras a second block
  of grade-inverted generators is appended.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .core import (
    Blade,
    Multivector,
    SCALAR_BLADE,
    basis_blades,
    grade_involution,
    Signature,
)
from .ordering import INVLEX, REVLEX, OrderingKind, sort_blades
from .scalars import GaussianRational, RationalQuaternion, Scalar

__all__ = [
    "leading_blade",
    "canonicalize_sign",
    "LeftIdeal",
    "left_ideal",
    "DivisionRing",
    "two_sided_ideal",
    "SpinorBasis",
    "spinor_basis",
    "is_semisimple",
]


def leading_blade(mv: Multivector, kind: OrderingKind = REVLEX) -> Blade:
    """The greatest blade of a nonzero multivector under ``kind`` (the one
    printed first when terms are listed in descending order)."""
    if mv.is_zero():
        raise ValueError("zero multivector has no leading blade")
    return sort_blades(kind, mv.blades(), descending=True)[0]


def _phase_units(complex_mode: bool) -> Tuple:
    if complex_mode:
        return (
            GaussianRational.of(1),
            GaussianRational.of(-1),
            GaussianRational.of(0, 1),
            GaussianRational.of(0, -1),
        )
    return (Fraction(1), Fraction(-1))


def canonicalize_sign(
    mv: Multivector, complex_mode: bool = False, kind: OrderingKind = REVLEX
) -> Tuple[Multivector, Scalar]:
    """The canonical representative of ``mv`` up to a unit factor.

    The representative's leading-blade coefficient is positive real (real
    mode: positive; complex mode: multiplied by a power of i and a sign to
    become positive real when the coefficient is purely real or purely
    imaginary, otherwise only the sign of the real part is fixed).  Returns
    the representative and the unit u with ``representative = u * mv``.
    """
    if mv.is_zero():
        return mv, Fraction(1)
    coeff = mv.coefficient(leading_blade(mv, kind))
    if isinstance(coeff, GaussianRational):
        if coeff.im == 0:
            unit = GaussianRational.of(1 if coeff.re > 0 else -1)
        elif coeff.re == 0:
            unit = GaussianRational.of(0, -1 if coeff.im > 0 else 1)
        else:
            unit = GaussianRational.of(1 if coeff.re > 0 else -1)
    else:
        unit = Fraction(1 if coeff > 0 else -1)
    if unit == 1:
        return mv, unit
    return mv.scale(unit), unit


@dataclass(frozen=True)
class LeftIdeal:
    """The minimal left ideal {Cl(p,q)} P, deduplicated up to a unit."""

    idempotent: Multivector
    elements: Tuple[Multivector, ...]
    generating_blades: Tuple[Blade, ...]
    complex_mode: bool

    @property
    def sig(self) -> Signature:
        return self.idempotent.sig


def left_ideal(P: Multivector, complex_mode: bool = False) -> LeftIdeal:
    """All products ``e_T P``, deduplicated up to a unit factor and listed
    in descending RevLex order of the first generating blade."""
    if P * P != P:
        raise ValueError("left_ideal requires an idempotent")
    sig = P.sig
    seen: Dict[tuple, None] = {}
    elements: List[Multivector] = []
    generators: List[Blade] = []
    for blade in sort_blades(REVLEX, basis_blades(sig), descending=True):
        x = Multivector.blade(sig, blade) * P
        if x.is_zero():
            continue
        rep, _ = canonicalize_sign(x, complex_mode)
        key = rep.key()
        if key in seen:
            continue
        seen[key] = None
        elements.append(rep)
        generators.append(blade)
    return LeftIdeal(P, tuple(elements), tuple(generators), complex_mode)


@dataclass(frozen=True)
class DivisionRing:
    """The two-sided ideal K = P {Cl(p,q)} P as a division ring.

    ``elements`` lists the ring basis with the idempotent (the ring unit)
    first; ``kind`` is "R", "C" or "H".  In complex mode the imaginary unit
    is carried by the Gaussian scalars themselves, so ``kind`` is always
    "C"; for odd n the scan finds a second, central element (it squares to
    +P), reflecting the C(m)+C(m) block structure.
    """

    idempotent: Multivector
    kind: str
    elements: Tuple[Multivector, ...]
    generating_blades: Tuple[Blade, ...]
    complex_mode: bool

    @property
    def sig(self) -> Signature:
        return self.idempotent.sig

    @property
    def real_dimension(self) -> int:
        if self.complex_mode:
            return len(self.elements)  # complex dimension
        return {"R": 1, "C": 2, "H": 4}[self.kind]

    def unit_label(self, index: int) -> str:
        if index == 0:
            return "1"
        if self.complex_mode:
            return "w"
        if self.kind == "C":
            return "i"
        return f"q{index}"

    def scalar_from_coefficients(self, coeffs: Sequence) -> Scalar:
        """Map span coefficients over ``elements`` to one ring scalar."""
        from .scalars import scalar_to_fraction

        if self.complex_mode:
            (c,) = coeffs
            return c if isinstance(c, GaussianRational) else GaussianRational.of(c)
        reals = [scalar_to_fraction(c) for c in coeffs]
        if self.kind == "R":
            return reals[0]
        if self.kind == "C":
            return GaussianRational(reals[0], reals[1])
        return RationalQuaternion(reals[0], reals[1], reals[2], reals[3])


def two_sided_ideal(P: Multivector, complex_mode: bool = False) -> DivisionRing:
    """Computes and classifies K = P {Cl(p,q)} P."""
    if P * P != P:
        raise ValueError("two_sided_ideal requires an idempotent")
    sig = P.sig
    seen: Dict[tuple, None] = {}
    elements: List[Multivector] = []
    generators: List[Blade] = []
    for blade in sort_blades(REVLEX, basis_blades(sig), descending=True):
        x = P * Multivector.blade(sig, blade) * P
        if x.is_zero():
            continue
        rep, _ = canonicalize_sign(x, complex_mode)
        key = rep.key()
        if key in seen:
            continue
        seen[key] = None
        elements.append(rep)
        generators.append(blade)
    count = len(elements)
    # The unit (the idempotent itself) always comes first; the scan starts
    # at the scalar blade, so elements[0] == P already.
    if elements[0] != P:
        raise AssertionError("ring unit is not the idempotent")
    if complex_mode:
        if count not in (1, 2):
            raise AssertionError(
                f"complex two-sided ideal of {sig} has {count} elements"
            )
        if count == 2:
            # The second element is central in P Cl P; normalize it to
            # square to -P (the two blocks are its ±i eigenspaces).
            w = elements[1]
            square = w * w
            if square == P:
                w = w.scale(GaussianRational.of(0, 1))
                elements[1] = w
            elif square != -P:
                raise AssertionError("central element does not square to ±P")
        return DivisionRing(P, "C", tuple(elements), tuple(generators), True)
    if count not in (1, 2, 4):
        raise AssertionError(
            f"two-sided ideal of {sig} has {count} elements; "
            "the idempotent is not primitive"
        )
    kind = {1: "R", 2: "C", 4: "H"}[count]
    if kind == "C":
        if (elements[1] * elements[1]) != -P:
            raise AssertionError("complex ring element does not square to -P")
    if kind == "H":
        # q3 := q1 q2, flipping the stored representative sign if needed.
        q1, q2, q3 = elements[1], elements[2], elements[3]
        prod = q1 * q2
        if prod == -q3:
            q3 = -q3
            elements[3] = q3
        elif prod != q3:
            raise AssertionError("quaternion units fail q1 q2 = q3")
        for u in (q1, q2, q3):
            if u * u != -P:
                raise AssertionError("quaternion unit does not square to -P")
    return DivisionRing(P, kind, tuple(elements), tuple(generators), False)


def is_semisimple(sig: Signature, complex_mode: bool = False) -> bool:
    """Whether the algebra splits into two diagonal blocks."""
    if complex_mode:
        return sig.n % 2 == 1
    return (sig.p - sig.q) % 4 == 1


@dataclass(frozen=True)
class SpinorBasis:
    """The spinor generators (and the second block when semisimple)."""

    generators: Tuple[Multivector, ...]
    generating_blades: Tuple[Blade, ...]
    second_block: Tuple[Multivector, ...]
    semisimple: bool
    complex_mode: bool

    @property
    def m(self) -> int:
        """Matrix dimension of one block."""
        return len(self.generators)

    @property
    def combined(self) -> Tuple[Multivector, ...]:
        return self.generators + self.second_block

    @property
    def dimension(self) -> int:
        """Full matrix dimension (2m for semisimple algebras)."""
        return len(self.combined)


def spinor_basis(ideal: LeftIdeal, ring: DivisionRing) -> SpinorBasis:
    """Drops ideal elements that are unit multiples of a kept element by a
    division-ring element; appends the grade-inverted second block for
    semisimple algebras."""
    complex_mode = ideal.complex_mode
    units = _phase_units(complex_mode)
    reachable: Dict[tuple, None] = {}
    kept: List[Multivector] = []
    kept_blades: List[Blade] = []
    for element, gen in zip(ideal.elements, ideal.generating_blades):
        if element.key() in reachable:
            continue
        kept.append(element)
        kept_blades.append(gen)
        for K in ring.elements:
            product = element * K
            for unit in units:
                mv = product.scale(unit)
                if not mv.is_zero():
                    reachable[mv.key()] = None
    semisimple = is_semisimple(ideal.sig, complex_mode)
    second: List[Multivector] = []
    if semisimple and not complex_mode:
        # Grade-inverted generators, ordered by InvLex on the generating
        # blade (ascending: the scalar-generated element stays first, so the
        # second spinor column lands in the middle of the matrix).
        order = sort_blades(INVLEX, kept_blades, descending=False)
        by_blade = {g: grade_involution(e) for g, e in zip(kept_blades, kept)}
        second = [by_blade[g] for g in order]
    return SpinorBasis(
        tuple(kept), tuple(kept_blades), tuple(second), semisimple, complex_mode
    )
