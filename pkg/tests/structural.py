"""Structural property checks that are independent of the golden fixtures.

The homomorphism check needs the matrix of arbitrary multivectors; calling
``rep_matrix`` on dense elements is too slow for large algebras, so a
per-algebra table of single-blade matrices is built first (one ideal-basis
product and a dictionary lookup per column) and extended by linearity.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from spintab.core import (
    Multivector,
    Signature,
    basis_blades,
    grade_involution,
    hermitian_adjoint,
    scalar_product,
)
from spintab.ideal import canonicalize_sign
from spintab.ordering import INVLEX, sort_blades
from spintab.rep import RepMatrix
from spintab.scalars import GaussianRational, RationalQuaternion, Scalar, conjugate
from spintab.table import SpinorTable


def _ring_one(table: SpinorTable) -> Scalar:
    if table.complex_mode or table.ring.kind == "C":
        return GaussianRational.of(1)
    if table.ring.kind == "H":
        return RationalQuaternion.of(1)
    return Fraction(1)


def _ring_units(table: SpinorTable) -> List[Scalar]:
    """Ring scalars matching the order of ``ring.elements``."""
    if table.complex_mode:
        return [GaussianRational.of(1), GaussianRational.of(0, 1)][
            : len(table.ring.elements)
        ]
    kind = table.ring.kind
    if kind == "R":
        return [Fraction(1)]
    if kind == "C":
        return [GaussianRational.of(1), GaussianRational.of(0, 1)]
    return [
        RationalQuaternion.of(1),
        RationalQuaternion(0, 1, 0, 0),
        RationalQuaternion(0, 0, 1, 0),
        RationalQuaternion(0, 0, 0, 1),
    ]


def _canonical(mv: Multivector, complex_mode: bool) -> Multivector:
    rep, _ = canonicalize_sign(mv, complex_mode)
    return rep


class BladeRep:
    """Single-blade representation matrices for one algebra, computed by
    matching blade-times-basis products against the spinor components."""

    def __init__(self, table: SpinorTable):
        self.table = table
        complex_mode = table.complex_mode
        self.zero = (
            GaussianRational.of(0) if complex_mode or table.ring.kind == "C"
            else RationalQuaternion.of(0) if table.ring.kind == "H"
            else Fraction(0)
        )
        self.units = _ring_units(table)
        self.lookup: Dict[tuple, int] = {}
        self.components = list(table.space.component_values)
        for index, value in enumerate(self.components):
            self.lookup[_canonical(value, complex_mode).key()] = index
        self.dim = table.generator_matrices[0].dim
        basis = table.basis
        if complex_mode and basis.semisimple:
            order = sort_blades(INVLEX, basis.generating_blades, descending=False)
            self.slot = {b: j for j, b in enumerate(order)}
            self.eps = {
                b: Fraction(-1 if b.grade & 1 else 1)
                for b in basis.generating_blades
            }
        self.matrices: Dict[int, RepMatrix] = {}
        for blade in basis_blades(table.sig):
            self.matrices[blade.bits] = self._blade_matrix(blade)

    def _unit_ratio(self, y: Multivector, component: Multivector) -> Scalar:
        blade = component.blades()[0]
        num, den = y.coefficient(blade), component.coefficient(blade)
        if isinstance(num, Fraction) and isinstance(den, Fraction):
            return num / den
        num = num if isinstance(num, GaussianRational) else GaussianRational.of(num)
        den = den if isinstance(den, GaussianRational) else GaussianRational.of(den)
        return num / den

    def _blade_matrix(self, blade) -> RepMatrix:
        table = self.table
        complex_mode = table.complex_mode
        x = Multivector.blade(table.sig, blade)
        dim, m = self.dim, table.basis.m
        ring_size = len(self.units)
        rows = [[self.zero] * dim for _ in range(dim)]
        if complex_mode and table.basis.semisimple:
            gens = table.basis.generators
            blades = table.basis.generating_blades
            imag = GaussianRational.of(0, 1)
            ring_size = len(table.ring.elements)
            for j, S in enumerate(gens):
                y = x * S
                index = self.lookup[_canonical(y, complex_mode).key()]
                i, u = divmod(index, ring_size)
                z = self._unit_ratio(y, self.components[index])
                # y = z * S_i * K_u, i.e. (a, b) = (z, 0) or (0, z); the two
                # blocks carry a + ib and a - ib respectively.
                rows[i][j] = rows[i][j] + z * (imag if u else GaussianRational.of(1))
                si, sj = self.slot[blades[i]], self.slot[blades[j]]
                rows[m + si][m + sj] = rows[m + si][m + sj] + z * (
                    -imag if u else GaussianRational.of(1)
                ) * (self.eps[blades[i]] * self.eps[blades[j]])
            return RepMatrix.from_rows(rows, m)
        for j, S in enumerate(table.basis.combined):
            y = x * S
            index = self.lookup[_canonical(y, complex_mode).key()]
            block, inner = divmod(index, m * ring_size)
            i, u = divmod(inner, ring_size)
            z = self._unit_ratio(y, self.components[index])
            rows[block * m + i][j] = z * self.units[u]
        return RepMatrix.from_rows(
            rows, m if table.basis.semisimple else None
        )

    def rep(self, mv: Multivector) -> RepMatrix:
        total = None
        for blade, coeff in mv:
            scaled = self.matrices[blade.bits].scale(coeff)
            total = scaled if total is None else total + scaled
        if total is None:
            one = _ring_one(self.table)
            return RepMatrix.identity(self.dim, one).scale(self.zero)
        return total


# ---------------------------------------------------------------------------
# Individual checks


def check_idempotent_family(table: SpinorTable) -> None:
    sig = table.sig
    one = Multivector.scalar(
        sig, GaussianRational.of(1) if table.complex_mode else Fraction(1)
    )
    members = table.family.members
    total = None
    for P in members:
        assert P * P == P, f"{sig}: member is not idempotent"
        total = P if total is None else total + P
    assert total == one, f"{sig}: family does not sum to one"
    for a in range(len(members)):
        for b in range(len(members)):
            if a != b:
                assert (members[a] * members[b]).is_zero(), (
                    f"{sig}: members {a} and {b} do not annihilate"
                )


def check_clifford_relations(table: SpinorTable) -> None:
    sig = table.sig
    mats = table.generator_matrices
    dim = mats[0].dim
    one = _ring_one(table)
    identity = RepMatrix.identity(dim, one)
    zero = identity.scale(one - one)
    for i in range(sig.n):
        for j in range(i, sig.n):
            anti = (mats[i] @ mats[j]) + (mats[j] @ mats[i])
            if i != j:
                assert anti.entries == zero.entries, (
                    f"{sig}: e{i + 1} and e{j + 1} do not anticommute"
                )
            else:
                eta = sig.generator_square(i + 1)
                expected = identity.scale(one * eta)
                assert anti.entries == (expected + expected).entries, (
                    f"{sig}: e{i + 1} squares incorrectly"
                )


def _random_multivector(
    table: SpinorTable, rng: random.Random, terms: int = 3
) -> Multivector:
    blades = basis_blades(table.sig)
    chosen = rng.sample(blades, min(terms, len(blades)))
    coeffs = {}
    for b in chosen:
        if table.complex_mode:
            coeffs[b] = GaussianRational.of(rng.randint(-3, 3), rng.randint(-3, 3))
        else:
            coeffs[b] = Fraction(rng.randint(-3, 3))
    return Multivector.from_terms(table.sig, coeffs)


def check_homomorphism(
    table: SpinorTable, rng: random.Random, pairs: int = 100,
    blade_rep: BladeRep = None,
) -> None:
    blade_rep = blade_rep or BladeRep(table)
    # The blade table must agree with the directly computed generator reps.
    for i, direct in enumerate(table.generator_matrices, start=1):
        fast = blade_rep.rep(Multivector.generator(table.sig, i))
        assert fast.entries == direct.entries, (
            f"{table.sig}: blade-matrix table disagrees with rep of e{i}"
        )
    for _ in range(pairs):
        a = _random_multivector(table, rng)
        b = _random_multivector(table, rng)
        product = blade_rep.rep(a) @ blade_rep.rep(b)
        assert product.entries == blade_rep.rep(a * b).entries, (
            f"{table.sig}: rep is not a homomorphism"
        )


def check_bott_dimension(table: SpinorTable) -> None:
    sig = table.sig
    m = table.basis.m
    double = 2 if table.basis.semisimple else 1
    if table.complex_mode:
        total = m * m * double
    else:
        total = m * m * {"R": 1, "C": 2, "H": 4}[table.ring.kind] * double
    assert total == 1 << sig.n, (
        f"{sig}: dimension identity fails: {total} != 2^{sig.n}"
    )


def _gram_hermitian(table: SpinorTable) -> List[List[Scalar]]:
    values = table.space.component_values
    adjoints = [hermitian_adjoint(v) for v in values]
    return [
        [scalar_product(a, v) for v in values] for a in adjoints
    ]


def _gram_trace(table: SpinorTable) -> List[List[Scalar]]:
    mats = table.component_matrices
    scale = Fraction(1, 1 << table.k)
    if table.complex_mode and table.basis.semisimple:
        # The two diagonal blocks carry the same spinor (conjugated), so
        # the trace form is taken over a single block.
        scale = scale / 2
    out = []
    for Mi in mats:
        row = []
        for Mj in mats:
            acc: Scalar = None
            for i, j, v in Mi.nonzero_entries():
                w = Mj.entry(i, j)
                if w:
                    term = conjugate(v) * w
                    acc = term if acc is None else acc + term
            if acc is None:
                acc = Fraction(0)
            if isinstance(acc, RationalQuaternion):
                acc = acc.w  # the trace form is real for quaternion entries
            row.append(acc * scale)
        out.append(row)
    return out


def _form_matrix(gram: Sequence[Sequence[Scalar]], symmetrize: bool):
    n = len(gram)
    return [
        [(gram[i][j] + gram[j][i]) if symmetrize else gram[i][j] for j in range(n)]
        for i in range(n)
    ]


def check_norms(table: SpinorTable) -> None:
    """Hermitian norm == 2^-k sum |s_i|^2 and == trace norm, as exact
    quadratic/sesquilinear form identities (via Gram matrices)."""
    size = table.space.size
    scale = Fraction(1, 1 << table.k)
    hermitian = _gram_hermitian(table)
    trace = _gram_trace(table)
    symmetrize = not table.complex_mode  # real coefficients: quadratic form
    H = _form_matrix(hermitian, symmetrize)
    T = _form_matrix(trace, symmetrize)
    expected_diag = scale * 2 if symmetrize else scale
    for i in range(size):
        for j in range(size):
            want = expected_diag if i == j else Fraction(0)
            assert H[i][j] == want, (
                f"{table.sig}: hermitian Gram entry ({i},{j}) is {H[i][j]}"
            )
            assert T[i][j] == H[i][j], (
                f"{table.sig}: trace norm differs from hermitian norm at ({i},{j})"
            )


def run_structural_suite(
    table: SpinorTable, rng: random.Random, pairs: int = 100
) -> None:
    check_idempotent_family(table)
    check_clifford_relations(table)
    check_bott_dimension(table)
    check_homomorphism(table, rng, pairs)
    check_norms(table)
