"""Exact linear algebra helpers: decomposition of a multivector in the
span of a list of multivectors, over the rational or Gaussian-rational
field."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

from .core import Blade, Multivector
from .scalars import GaussianRational

__all__ = ["decompose_in_span"]


def decompose_in_span(
    basis: Sequence[Multivector], target: Multivector
) -> Optional[List]:
    """Solve ``target = sum_i c_i basis[i]`` exactly.

    Returns the coefficient list, or ``None`` when the target is outside the
    span.  Coefficients live in the field generated by the inputs (rationals
    or Gaussian rationals).
    """
    blades: List[Blade] = sorted(
        {b for mv in basis for b in mv.blades()} | set(target.blades()),
        key=lambda b: b.bits,
    )
    if not basis:
        return [] if target.is_zero() else None
    gaussian = any(
        isinstance(c, GaussianRational)
        for mv in list(basis) + [target]
        for _, c in mv
    )

    def lift(c):
        if gaussian and not isinstance(c, GaussianRational):
            return GaussianRational.of(c)
        return c

    zero = GaussianRational.of(0) if gaussian else Fraction(0)
    one = GaussianRational.of(1) if gaussian else Fraction(1)

    # Augmented matrix: rows indexed by blades, columns by basis elements
    # plus the target.
    rows = [
        [lift(mv.coefficient(b)) for mv in basis] + [lift(target.coefficient(b))]
        for b in blades
    ]
    ncols = len(basis)
    pivot_cols: List[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = one / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [v - factor * w for v, w in zip(rows[i], rows[r])]
        pivot_cols.append(col)
        r += 1
    # Inconsistent rows mean the target is outside the span.
    for i in range(r, len(rows)):
        if rows[i][ncols]:
            return None
    coeffs = [zero] * ncols
    for row_index, col in enumerate(pivot_cols):
        coeffs[col] = rows[row_index][ncols]
    return coeffs
