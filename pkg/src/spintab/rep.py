"""Matrix representations, spinors and spinor norms.

The representation of a multivector x in a spinor basis S is the matrix
with entries ``E_ij(x) = reverse(sharp(S_i)) x S_j`` decomposed over the
division-ring elements.  An ideal element (a spinor) is supported on the
first column only (plus the middle column of the second block for
semisimple algebras).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from .core import (
    Blade,
    Multivector,
    SCALAR_BLADE,
    basis_blades,
    clifford_conjugate,
    grade_involution,
    hermitian_adjoint,
    reverse,
    scalar_part,
    scalar_product,
    sharp,
    Signature,
)
from .ideal import DivisionRing, SpinorBasis
from .idempotent import IdempotentFamily
from .linalg import decompose_in_span
from .ordering import INVDEG_LEX, INVLEX, sort_blades
from .scalars import (
    GaussianRational,
    RationalQuaternion,
    Scalar,
    conjugate,
    scalar_to_fraction,
)

__all__ = [
    "RepMatrix",
    "rep_matrix",
    "generator_rep",
    "basis_unit_matrices",
    "SpinorSpace",
    "Spinor",
    "spinor_matrix",
    "hermitian_norm_sq",
    "trace_norm_sq",
    "NormFormula",
    "find_norm_formula",
    "INVOLUTIONS",
]


def _zero_like(x: Scalar) -> Scalar:
    if isinstance(x, GaussianRational):
        return GaussianRational.of(0)
    if isinstance(x, RationalQuaternion):
        return RationalQuaternion.of(0)
    return Fraction(0)


def _scalar_norm_sq(x: Scalar) -> Fraction:
    if isinstance(x, GaussianRational):
        return x.re * x.re + x.im * x.im
    if isinstance(x, RationalQuaternion):
        return x.norm_sq()
    return x * x


@dataclass(frozen=True)
class RepMatrix:
    """A square matrix with exact division-ring entries."""

    entries: Tuple[Tuple[Scalar, ...], ...]
    block_dim: Optional[int] = None  # m for block-diagonal matrices

    @property
    def dim(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> Scalar:
        """1-based entry access (matching the E_ij notation)."""
        return self.entries[i - 1][j - 1]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Scalar]], block_dim: Optional[int] = None) -> "RepMatrix":
        return RepMatrix(tuple(tuple(row) for row in rows), block_dim)

    def __add__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
            self.block_dim,
        )

    def __neg__(self) -> "RepMatrix":
        return RepMatrix(
            tuple(tuple(-a for a in row) for row in self.entries), self.block_dim
        )

    def __sub__(self, other: "RepMatrix") -> "RepMatrix":
        return self + (-other)

    def scale(self, factor: Scalar) -> "RepMatrix":
        """Left-multiply every entry by ``factor``."""
        return RepMatrix(
            tuple(tuple(factor * a for a in row) for row in self.entries),
            self.block_dim,
        )

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = None
                for l in range(n):
                    term = self.entries[i][l] * other.entries[l][j]
                    acc = term if acc is None else acc + term
                row.append(acc)
            rows.append(tuple(row))
        return RepMatrix(tuple(rows), self.block_dim)

    def dagger(self) -> "RepMatrix":
        """Conjugate transpose (quaternion conjugation for H entries)."""
        n = self.dim
        return RepMatrix(
            tuple(
                tuple(conjugate(self.entries[j][i]) for j in range(n))
                for i in range(n)
            ),
            self.block_dim,
        )

    def trace(self) -> Scalar:
        acc = None
        for i in range(self.dim):
            term = self.entries[i][i]
            acc = term if acc is None else acc + term
        return acc

    def is_zero(self) -> bool:
        return all(not a for row in self.entries for a in row)

    def nonzero_entries(self) -> List[Tuple[int, int, Scalar]]:
        """1-based (row, column, value) triples of the nonzero entries."""
        return [
            (i + 1, j + 1, a)
            for i, row in enumerate(self.entries)
            for j, a in enumerate(row)
            if a
        ]

    @staticmethod
    def identity(dim: int, one: Scalar, block_dim: Optional[int] = None) -> "RepMatrix":
        zero = _zero_like(one)
        return RepMatrix(
            tuple(
                tuple(one if i == j else zero for j in range(dim))
                for i in range(dim)
            ),
            block_dim,
        )


def _block_of(index: int, m: int) -> int:
    return 0 if index < m else 1


def rep_matrix(x: Multivector, basis: SpinorBasis, ring: DivisionRing) -> RepMatrix:
    """The matrix of ``x`` in the spinor basis, over the division ring."""
    if ring.complex_mode and basis.semisimple:
        return _complex_semisimple_rep(x, basis, ring)
    combined = basis.combined
    m = basis.m
    # hermitian_adjoint is reverse∘sharp plus coefficient conjugation; the
    # conjugation matters only in complex mode (real coefficients are fixed).
    lefts = [hermitian_adjoint(S) for S in combined]
    # In complex mode each entry is a single complex number, so the span is
    # just the idempotent even when the ring carries a central second
    # element (odd n).
    ring_basis = [ring.idempotent] if ring.complex_mode else list(ring.elements)
    spans = [ring_basis]
    if basis.semisimple:
        spans.append([grade_involution(K) for K in ring_basis])
    columns = [x * S for S in combined]
    rows: List[List[Scalar]] = []
    for i, L in enumerate(lefts):
        row: List[Scalar] = []
        for j, S in enumerate(combined):
            t = L * columns[j]
            bi, bj = _block_of(i, m), _block_of(j, m)
            if bi != bj:
                if not t.is_zero():
                    raise AssertionError(
                        f"cross-block entry ({i + 1},{j + 1}) nonzero for {x.sig}"
                    )
                row.append(_ring_zero(ring))
                continue
            coeffs = decompose_in_span(spans[bi], t)
            if coeffs is None:
                raise AssertionError(
                    f"entry ({i + 1},{j + 1}) of {x.sig} is outside the ring span"
                )
            row.append(ring.scalar_from_coefficients(coeffs))
        rows.append(row)
    return RepMatrix.from_rows(rows, m if basis.semisimple else None)


def _complex_semisimple_rep(
    x: Multivector, basis: SpinorBasis, ring: DivisionRing
) -> RepMatrix:
    """The 2m-dimensional block-diagonal matrix for odd-n complex algebras.

    Here K = P Cl P = span{P, W} with the central element W squaring to
    -P, and ``hadj(S_i) x S_j = a P + b W``.  The first block holds
    ``a + i b`` (the +i eigenspace of W); the second holds
    ``eps_i eps_j (a - i b)`` with eps the grade-involution sign of the
    generating blade, its rows and columns reordered by InvLex on the
    generating blades.
    """
    gens = basis.generators
    blades = basis.generating_blades
    m = basis.m
    lefts = [hermitian_adjoint(S) for S in gens]
    span = list(ring.elements)
    imag = GaussianRational.of(0, 1)
    eps = [Fraction(-1 if b.grade & 1 else 1) for b in blades]
    order = sort_blades(INVLEX, blades, descending=False)
    slot = {b: j for j, b in enumerate(order)}  # block-2 position of each gen
    zero = GaussianRational.of(0)
    entries = [[zero] * (2 * m) for _ in range(2 * m)]
    columns = [x * S for S in gens]
    for i, L in enumerate(lefts):
        for j, S in enumerate(gens):
            t = L * columns[j]
            coeffs = decompose_in_span(span, t)
            if coeffs is None:
                raise AssertionError(
                    f"entry ({i + 1},{j + 1}) of {x.sig} is outside K"
                )
            a, b = (
                c if isinstance(c, GaussianRational) else GaussianRational.of(c)
                for c in coeffs
            )
            entries[i][j] = a + imag * b
            si, sj = slot[blades[i]], slot[blades[j]]
            entries[m + si][m + sj] = (a - imag * b) * (eps[i] * eps[j])
    return RepMatrix.from_rows(entries, m)


def _ring_zero(ring: DivisionRing) -> Scalar:
    if ring.complex_mode or ring.kind == "C":
        return GaussianRational.of(0)
    if ring.kind == "H":
        return RationalQuaternion.of(0)
    return Fraction(0)


def generator_rep(index: int, basis: SpinorBasis, ring: DivisionRing) -> RepMatrix:
    """The matrix of the basis vector ``e_index``."""
    sig = ring.sig
    return rep_matrix(Multivector.generator(sig, index), basis, ring)


def basis_unit_matrices(basis: SpinorBasis, ring: DivisionRing) -> List[RepMatrix]:
    """The matrices of the spinor generators themselves (single-entry
    matrices in the first column of their block)."""
    return [rep_matrix(S, basis, ring) for S in basis.combined]


@dataclass(frozen=True)
class SpinorSpace:
    """The coefficient layout of a general spinor.

    ``component_values[i]`` is the multivector multiplying coefficient
    ``s_{i+1}``; a spinor is the linear combination of these with real
    (or complex, in complex mode) coefficients.
    """

    basis: SpinorBasis
    ring: DivisionRing
    k: int
    component_values: Tuple[Multivector, ...]
    component_labels: Tuple[str, ...]

    @property
    def sig(self) -> Signature:
        return self.ring.sig

    @property
    def complex_mode(self) -> bool:
        return self.ring.complex_mode

    @property
    def size(self) -> int:
        return len(self.component_values)

    def assemble(self, coeffs: Sequence) -> "Spinor":
        if len(coeffs) != self.size:
            raise ValueError(
                f"expected {self.size} coefficients, got {len(coeffs)}"
            )
        value = Multivector.zero(self.sig)
        clean: List[Scalar] = []
        for c, term in zip(coeffs, self.component_values):
            if isinstance(c, int):
                c = Fraction(c)
            if self.complex_mode and not isinstance(c, GaussianRational):
                c = GaussianRational.of(c)
            clean.append(c)
            value = value + term.scale(c)
        return Spinor(tuple(clean), value, self)


def spinor_space(
    basis: SpinorBasis, ring: DivisionRing, k: int
) -> SpinorSpace:
    """Builds the coefficient layout.

    Real mode: ring units cycle fastest within each generator; the
    semisimple second block appends the grade-inverted terms.  Complex
    mode: one complex coefficient per generator (both blocks).
    """
    values: List[Multivector] = []
    labels: List[str] = []
    if ring.complex_mode:
        for j, g in enumerate(basis.generators):
            for u, K in enumerate(ring.elements):
                values.append(g * K)
                labels.append(
                    f"S{j + 1}" if u == 0 else f"S{j + 1}*{ring.unit_label(u)}"
                )
    else:
        for j, g in enumerate(basis.generators):
            for u, K in enumerate(ring.elements):
                values.append(g * K)
                labels.append(f"S{j + 1}*{ring.unit_label(u)}")
        if basis.semisimple:
            for j, h in enumerate(basis.second_block):
                for u, K in enumerate(ring.elements):
                    values.append(h * grade_involution(K))
                    labels.append(f"inv(S){j + 1}*{ring.unit_label(u)}")
    return SpinorSpace(basis, ring, k, tuple(values), tuple(labels))


@dataclass(frozen=True)
class Spinor:
    """A general spinor: coefficients plus the assembled ideal element."""

    coefficients: Tuple[Scalar, ...]
    value: Multivector
    space: SpinorSpace


def spinor_matrix(psi: Spinor) -> RepMatrix:
    """The (column-supported) matrix representation of a spinor."""
    return rep_matrix(psi.value, psi.space.basis, psi.space.ring)


def hermitian_norm_sq(psi: Spinor) -> Fraction:
    """``<adjoint(psi) psi>``; equals ``2^-k sum |s_i|^2``."""
    from .core import hermitian_adjoint

    value = psi.value
    result = scalar_product(hermitian_adjoint(value), value)
    return scalar_to_fraction(result)


def trace_norm_sq(psi_hat: RepMatrix, k: int) -> Fraction:
    """``2^-k Tr(M^dagger M)`` for a spinor matrix M."""
    product = psi_hat.dagger() @ psi_hat
    return scalar_to_fraction(product.trace()) / (1 << k)


INVOLUTIONS: Tuple[Tuple[str, Callable[[Multivector], Multivector]], ...] = (
    ("identity", lambda a: a),
    ("reverse", reverse),
    ("grade_involution", grade_involution),
    ("clifford_conjugate", clifford_conjugate),
)

_INVOLUTION_MAP = dict(INVOLUTIONS)


@dataclass(frozen=True)
class NormFormula:
    """An algebra-specific norm expression
    ``sign * <u inv(psi)[*] u psi> = scale * sum |s_i|^2``.

    The scale is usually ``2^-k`` for the algebra's idempotent factor
    count k, but not always: the two sides are independently determined
    quadratic forms and the ratio is whatever the algebra produces.
    """

    sign: int
    involution: str
    conjugated: bool
    sandwich: Optional[Blade]
    scale: Fraction

    @property
    def log2scale(self) -> int:
        """The exponent j with ``scale == 2^-j`` (scales are always
        reciprocal powers of two in practice)."""
        den = self.scale.denominator
        if self.scale.numerator != 1 or den & (den - 1):
            raise ValueError(f"scale {self.scale} is not a power of two")
        return den.bit_length() - 1

    def evaluate(self, value: Multivector) -> Fraction:
        inv = _INVOLUTION_MAP[self.involution](value)
        if self.conjugated:
            inv = inv.map_coefficients(conjugate)
        if self.sandwich is not None and not self.sandwich.is_scalar:
            u = Multivector.blade(value.sig, self.sandwich)
            inv = u * inv * u
        result = scalar_to_fraction(scalar_product(inv, value))
        return -result if self.sign < 0 else result

    def describe(self) -> str:
        inv_symbol = {
            "identity": "Psi",
            "reverse": "rev(Psi)",
            "grade_involution": "inv(Psi)",
            "clifford_conjugate": "conj(Psi)",
        }[self.involution]
        if self.conjugated:
            inv_symbol += "*"
        body = inv_symbol
        if self.sandwich is not None and not self.sandwich.is_scalar:
            body = f"{self.sandwich} {inv_symbol} {self.sandwich}"
        prefix = "-" if self.sign < 0 else ""
        return f"{prefix}<{body} Psi>"


def _coefficient_samples(size: int, complex_mode: bool) -> List[List[Scalar]]:
    """Sample coefficient vectors that determine a quadratic form.

    Both sides of a norm identity are quadratic forms in the real
    coordinates of the coefficients, and a quadratic form over the
    rationals is determined by its values on all basis vectors and all
    pairwise sums of basis vectors.
    """
    one: Scalar = GaussianRational.of(1) if complex_mode else Fraction(1)
    basis_vectors: List[List[Scalar]] = []
    zero: Scalar = GaussianRational.of(0) if complex_mode else Fraction(0)
    units: List[Scalar] = [one]
    if complex_mode:
        units.append(GaussianRational.of(0, 1))
    for a in range(size):
        for u in units:
            vec = [zero] * size
            vec[a] = u
            basis_vectors.append(vec)
    samples = list(basis_vectors)
    for x, y in itertools.combinations(basis_vectors, 2):
        samples.append([cx + cy for cx, cy in zip(x, y)])
    return samples


def _coefficient_norm_sq(coeffs: Sequence[Scalar]) -> Fraction:
    total = Fraction(0)
    for c in coeffs:
        total += _scalar_norm_sq(c)
    return total


def norm_identity_holds(
    space: SpinorSpace,
    evaluate: Callable[[Multivector], Fraction],
    scale: Optional[Fraction] = None,
) -> bool:
    """Checks ``evaluate(psi) == scale * sum |s_i|^2`` as a polynomial
    identity in the coefficients, by quadratic-form sampling.  The
    default scale is ``2^-k``."""
    if scale is None:
        scale = Fraction(1, 1 << space.k)
    for coeffs in _coefficient_samples(space.size, space.complex_mode):
        psi = space.assemble(coeffs)
        try:
            lhs = evaluate(psi.value)
        except ValueError:
            return False
        if lhs != scale * _coefficient_norm_sq(coeffs):
            return False
    return True


def find_norm_formula(space: SpinorSpace) -> NormFormula:
    """Searches for the simplest valid involution-based norm formula.

    Preference order: lowest sandwich grade first (no sandwich, then
    vector sandwiches, then bivector sandwiches, ...); within one grade,
    involutions in the order identity, reverse, grade involution,
    Clifford conjugation, then sandwich blades in Lex order, unconjugated
    before conjugated.  The sign and scale are forced by the value on the
    first coefficient basis vector.
    """
    sig = space.sig
    # InvDeg[Lex] already sorts by ascending grade with Lex inside a grade.
    by_grade = sort_blades(
        INVDEG_LEX, [b for b in basis_blades(sig) if not b.is_scalar], descending=True
    )
    grade_groups: List[List[Optional[Blade]]] = [[None]]
    for blade in by_grade:
        if grade_groups[-1] == [None] or grade_groups[-1][-1].grade != blade.grade:
            grade_groups.append([blade])
        else:
            grade_groups[-1].append(blade)
    conj_options = (False, True) if space.complex_mode else (False,)
    one: Scalar = GaussianRational.of(1) if space.complex_mode else Fraction(1)
    zero: Scalar = GaussianRational.of(0) if space.complex_mode else Fraction(0)
    delta = [one] + [zero] * (space.size - 1)
    first = space.assemble(delta).value
    for group in grade_groups:
        for name, _ in INVOLUTIONS:
            candidates = [
                (sandwich, conjugated)
                for sandwich in group
                for conjugated in conj_options
            ]
            for sandwich, conjugated in candidates:
                probe = NormFormula(1, name, conjugated, sandwich, Fraction(1))
                try:
                    value = probe.evaluate(first)
                except ValueError:
                    continue
                if not value:
                    continue
                sign = 1 if value > 0 else -1
                formula = NormFormula(
                    sign, name, conjugated, sandwich, abs(value)
                )
                if norm_identity_holds(space, formula.evaluate, formula.scale):
                    return formula
    raise AssertionError(f"no involution norm formula found for {sig}")
