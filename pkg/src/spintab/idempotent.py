"""Primitive idempotent construction.

A primitive idempotent of real Cl(p,q) is a product
``P = (1/2)(1 + e_T1) ... (1/2)(1 + e_Tk)`` over ``k = q - r_{q-p}``
pairwise-commuting blades squaring to +1, where ``r_i`` is the
Radon-Hurwitz number.  Flipping the sign of each factor independently
yields ``2^k`` mutually annihilating idempotents that sum to one.

In complex mode ``k = floor(n/2)`` and a factor blade squaring to -1 is
premultiplied by the imaginary unit so that every factor still squares to
itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .core import (
    Blade,
    Multivector,
    SCALAR_BLADE,
    basis_blades,
    blade_square_sign,
    commutes,
    Signature,
)
from .ordering import INVDEG_LEX, sort_blades
from .scalars import GaussianRational

__all__ = [
    "radon_hurwitz",
    "idempotent_factor_count",
    "candidate_blades",
    "find_commuting_tuples",
    "default_tuple",
    "IdempotentFamily",
    "build_family",
]

# r_0 .. r_7; everything else follows from r_{i+8} = r_i + 4 and the
# reflection r_{-i} = 1 - i + r_{i-2} (i > 0), r_{-1} = -1.
_RH_BASE = (0, 1, 2, 2, 3, 3, 3, 3)


def radon_hurwitz(i: int) -> int:
    """The Radon-Hurwitz number ``r_i`` for any integer ``i``."""
    if i >= 0:
        return _RH_BASE[i % 8] + 4 * (i // 8)
    if i == -1:
        return -1
    # r_{-m} = 1 - m + r_{m-2} for m > 0
    m = -i
    return 1 - m + radon_hurwitz(m - 2)


def idempotent_factor_count(sig: Signature, complex_mode: bool = False) -> int:
    """The number k of commuting blade factors in a primitive idempotent."""
    if complex_mode:
        return sig.n // 2
    return sig.q - radon_hurwitz(sig.q - sig.p)


def candidate_blades(sig: Signature, complex_mode: bool = False) -> List[Blade]:
    """Non-scalar factor-candidate blades, scanned in InvDeg[Lex] order.

    Real mode admits blades squaring to +1; for anti-Euclidean Cl(0,q) the
    candidates are further restricted to grades congruent to 3 mod 4, which
    reproduces the published idempotents for those algebras.  Complex mode
    admits every blade (a -1 square is compensated by an imaginary-unit
    prefix).
    """
    blades = [b for b in basis_blades(sig) if not b.is_scalar]
    if not complex_mode:
        blades = [b for b in blades if blade_square_sign(b, sig) == 1]
        if sig.p == 0:
            blades = [b for b in blades if b.grade % 4 == 3]
    return sort_blades(INVDEG_LEX, blades, descending=True)


def _independent(bits: int, chosen_bits: Sequence[int]) -> bool:
    """Whether a blade is outside the xor-span of the chosen blades, so the
    ``2^k`` sign-pattern members stay distinct."""
    span = {0}
    for c in chosen_bits:
        span |= {s ^ c for s in span}
    return bits not in span

def find_commuting_tuples(
    sig: Signature, k: int, complex_mode: bool = False
) -> Iterator[Tuple[Blade, ...]]:
    """All k-tuples of pairwise-commuting candidate blades, in the greedy
    lexicographic order induced by the InvDeg[Lex] candidate scan."""
    candidates = candidate_blades(sig, complex_mode)

    def extend(chosen: List[Blade], start: int) -> Iterator[Tuple[Blade, ...]]:
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for idx in range(start, len(candidates)):
            blade = candidates[idx]
            if not all(commutes(blade, c, sig) for c in chosen):
                continue
            if not _independent(blade.bits, [c.bits for c in chosen]):
                continue
            chosen.append(blade)
            yield from extend(chosen, idx + 1)
            chosen.pop()

    if k == 0:
        yield ()
        return
    yield from extend([], 0)


def default_tuple(sig: Signature, complex_mode: bool = False) -> Tuple[Blade, ...]:
    """The conventional factor-blade tuple for an algebra.

    Real mode takes the first tuple of the greedy InvDeg[Lex] enumeration
    (with the anti-Euclidean restriction built into the candidate list).
    Complex mode fixes the quantization pattern e1, e23, e45, e67, ...
    """
    k = idempotent_factor_count(sig, complex_mode)
    if complex_mode:
        blades = [Blade.from_indices([1])]
        lo = 2
        while len(blades) < k:
            blades.append(Blade.from_indices([lo, lo + 1]))
            lo += 2
        return tuple(blades[:k])
    try:
        return next(find_commuting_tuples(sig, k, complex_mode))
    except StopIteration:
        raise AssertionError(f"no commuting {k}-tuple exists for {sig}")


@dataclass(frozen=True)
class IdempotentFamily:
    """The ``2^k`` idempotents generated by one commuting blade tuple."""

    sig: Signature
    blades: Tuple[Blade, ...]
    imaginary: Tuple[bool, ...]  # per-factor imaginary-unit prefix flag
    members: Tuple[Multivector, ...]
    complex_mode: bool

    @property
    def k(self) -> int:
        return len(self.blades)

    @property
    def primitive(self) -> Multivector:
        """The all-plus member P1."""
        return self.members[0]

    def factor(self, index: int, sign: int = 1) -> Multivector:
        """The single factor ``(1/2)(1 +- u)`` with ``u = e_T`` or ``i e_T``."""
        return _factor(self.sig, self.blades[index], self.imaginary[index], sign)

    def sign_pattern(self, member_index: int) -> Tuple[int, ...]:
        """Big-endian sign pattern of a member: (+,+,...) is index 0."""
        return tuple(
            -1 if member_index >> (self.k - 1 - i) & 1 else 1 for i in range(self.k)
        )


def _factor(sig: Signature, blade: Blade, imaginary: bool, sign: int) -> Multivector:
    half = Fraction(1, 2)
    coeff = GaussianRational.of(0, sign * half) if imaginary else sign * half
    return Multivector.from_terms(sig, {SCALAR_BLADE: half, blade: coeff})


def build_family(
    sig: Signature, blades: Sequence[Blade], complex_mode: bool = False
) -> IdempotentFamily:
    """Builds the ``2^k`` sign-pattern idempotents for a factor tuple."""
    blades = tuple(blades)
    for a, b in itertools.combinations(blades, 2):
        if not commutes(a, b, sig):
            raise ValueError(f"factor blades {a} and {b} do not commute in {sig}")
    imaginary: List[bool] = []
    for b in blades:
        square = blade_square_sign(b, sig)
        if square == 1:
            imaginary.append(False)
        elif complex_mode:
            imaginary.append(True)
        else:
            raise ValueError(f"factor blade {b} squares to -1 in real mode for {sig}")

    one_value: object = (
        GaussianRational.of(1) if complex_mode else Fraction(1)
    )
    one = Multivector.scalar(sig, one_value)
    members: List[Multivector] = []
    k = len(blades)
    for member_index in range(1 << k):
        acc = one
        for i in range(k):
            sign = -1 if member_index >> (k - 1 - i) & 1 else 1
            acc = acc * _factor(sig, blades[i], imaginary[i], sign)
        if complex_mode:
            acc = acc.map_coefficients(
                lambda c: c if isinstance(c, GaussianRational) else GaussianRational.of(c)
            )
        members.append(acc)
    return IdempotentFamily(sig, blades, tuple(imaginary), tuple(members), complex_mode)
