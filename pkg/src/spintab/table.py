"""Building the seven-item spinor data table for one algebra."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .core import Multivector, Signature
from .ideal import (
    DivisionRing,
    LeftIdeal,
    SpinorBasis,
    left_ideal,
    spinor_basis,
    two_sided_ideal,
)
from .idempotent import (
    IdempotentFamily,
    build_family,
    default_tuple,
    idempotent_factor_count,
)
from .rep import (
    NormFormula,
    RepMatrix,
    SpinorSpace,
    find_norm_formula,
    rep_matrix,
    spinor_space,
)

__all__ = ["SpinorTable", "build_table", "classification_label", "REAL", "COMPLEX"]

REAL = "real"
COMPLEX = "complex"


@dataclass(frozen=True)
class SpinorTable:
    """The seven items of one algebra's spinor data table.

    * item 1: the idempotent family,
    * item 2: the two-sided ideal (division ring),
    * item 3: the spinor basis,
    * item 4: matrix reps of the basis vectors e_1..e_n,
    * item 5: the general spinor (one multivector per coefficient),
    * item 6: the spinor matrix (one column matrix per coefficient),
    * item 7: the norm formula, normalized as 2^-k sum |s_i|^2.
    """

    sig: Signature
    mode: str
    family: IdempotentFamily
    ideal: LeftIdeal
    ring: DivisionRing
    basis: SpinorBasis
    space: SpinorSpace
    generator_matrices: Tuple[RepMatrix, ...]
    basis_matrices: Tuple[RepMatrix, ...]
    component_matrices: Tuple[RepMatrix, ...]
    norm_formula: NormFormula

    @property
    def k(self) -> int:
        return self.family.k

    @property
    def complex_mode(self) -> bool:
        return self.mode == COMPLEX

    @property
    def classification(self) -> str:
        return classification_label(self)


def classification_label(table: SpinorTable) -> str:
    m = table.basis.m
    if table.complex_mode:
        if table.basis.semisimple:
            return f"C({m})⊕C({m})"
        return f"C({m})"
    prefix = "^2" if table.basis.semisimple else ""
    return f"{prefix}{table.ring.kind}({m})"


def build_table(sig: Signature, mode: str = REAL) -> SpinorTable:
    """Runs the whole pipeline for one algebra; deterministic and pure."""
    if mode not in (REAL, COMPLEX):
        raise ValueError(f"unknown mode {mode!r}")
    if sig.n < 1:
        raise ValueError("spinor tables require n >= 1")
    complex_mode = mode == COMPLEX
    family = build_family(sig, default_tuple(sig, complex_mode), complex_mode)
    P = family.primitive
    ideal = left_ideal(P, complex_mode)
    ring = two_sided_ideal(P, complex_mode)
    basis = spinor_basis(ideal, ring)
    k = idempotent_factor_count(sig, complex_mode)
    space = spinor_space(basis, ring, k)
    generator_matrices = tuple(
        rep_matrix(Multivector.generator(sig, i), basis, ring)
        for i in range(1, sig.n + 1)
    )
    basis_matrices = tuple(rep_matrix(S, basis, ring) for S in basis.combined)
    component_matrices = tuple(
        rep_matrix(v, basis, ring) for v in space.component_values
    )
    norm_formula = find_norm_formula(space)
    return SpinorTable(
        sig,
        mode,
        family,
        ideal,
        ring,
        basis,
        space,
        generator_matrices,
        basis_matrices,
        component_matrices,
        norm_formula,
    )
