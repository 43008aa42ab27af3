"""Verification of computed spinor tables against golden fixtures.

A fixture is one JSON file per algebra.  Blades are index strings (""
for the scalar, "134" for e134); division-ring units are the strings
1, -1, i, -i, q1..q3, -q1..-q3.  Schema:

    {
      "signature": [p, q],
      "mode": "real" | "complex",
      "classification": "R(4)", ...
      "item1": [["1", false], ["23", true]],         # factor blades + i flag
      "item2": ["", "23"],                           # K generating blades
      "item3": {"block1": [[unit, blade], ...],      # basis as printed
                "block2": [[unit, blade], ...]},     # grade-inverted block
      "item4": [[[i, j, unit], ...], ...],           # one matrix per e_i
      "item5": [[unit, blade, ginv], ...],           # one term per coefficient
      "item6": [[[i, j, unit], ...], ...],           # one matrix per coefficient
      "item7": {"sign": -1, "involution": "reverse",
                "conjugated": false, "sandwich": "34", "k": 2},
      "equivalences": ["item6_transposed", ...]
    }

Comparison is bit-exact up to the inherent presentation freedoms of a
spinor table, plus any declared equivalence flags:

* every basis element (and hence every matrix row/column) is only
  defined up to a unit: a sign in real mode, a Gaussian phase in complex
  mode.  Items 4 and 6 are therefore compared under a diagonal unit
  similarity ``printed_ij = d_i^-1 phi(computed_ij) d_j`` whose diagonal
  ``d`` is solved for, not guessed; ``phi`` is a division-ring
  automorphism (quaternion relabeling or complex conjugation), since the
  ring unit labels q1, q2, q3 / i are themselves conventional;
* without the "item3_ring_multiple" flag the diagonal is restricted to
  signs and the basis order must match exactly; with it, each printed
  basis element may be any right division-ring-unit multiple of a
  computed one, in any order (the permutation is recovered from item 3
  and applied to items 4 and 6);
* coefficient relabelings s_i -> ±s_i (complex: unit phases) leave a
  table equally valid, so items 5 and 6 allow one unit per coefficient;
* "item6_transposed": the printed matrix entries are transposed;
* "item7_equivalent": the printed formula differs from the computed one
  but both are valid norm expressions.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .core import Blade, Multivector, grade_involution
from .rep import NormFormula, RepMatrix, norm_identity_holds, rep_matrix
from .scalars import GaussianRational, RationalQuaternion, Scalar, conjugate
from .table import SpinorTable

__all__ = [
    "GoldenFixture",
    "load_fixture",
    "fixtures_dir",
    "available_fixtures",
    "fixture_path",
    "ItemResult",
    "VerificationReport",
    "verify_against_golden",
]


def fixtures_dir() -> Path:
    return Path(__file__).resolve().parent / "fixtures"


def parse_blade(text: str) -> Blade:
    if text == "":
        return Blade(0)
    return Blade.from_indices(int(ch) for ch in text)


_UNIT_STRINGS: Dict[str, Callable[[], Scalar]] = {
    "1": lambda: Fraction(1),
    "-1": lambda: Fraction(-1),
    "i": lambda: GaussianRational.of(0, 1),
    "-i": lambda: GaussianRational.of(0, -1),
    "q1": lambda: RationalQuaternion(0, 1, 0, 0),
    "-q1": lambda: RationalQuaternion(0, -1, 0, 0),
    "q2": lambda: RationalQuaternion(0, 0, 1, 0),
    "-q2": lambda: RationalQuaternion(0, 0, -1, 0),
    "q3": lambda: RationalQuaternion(0, 0, 0, 1),
    "-q3": lambda: RationalQuaternion(0, 0, 0, -1),
}


def _coerce(x: Scalar, kind: str, complex_mode: bool) -> Scalar:
    """Lift a unit into the entry type used by the computed matrices."""
    if complex_mode or kind == "C":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, RationalQuaternion):
            raise ValueError("quaternion unit in a complex entry")
        return GaussianRational.of(x)
    if kind == "H":
        if isinstance(x, RationalQuaternion):
            return x
        if isinstance(x, GaussianRational):
            raise ValueError("complex unit in a quaternion entry")
        return RationalQuaternion.of(x)
    if not isinstance(x, Fraction):
        raise ValueError(f"non-real unit {x!r} in a real entry")
    return x


def parse_unit(text: str, kind: str, complex_mode: bool) -> Scalar:
    try:
        raw = _UNIT_STRINGS[text]()
    except KeyError:
        raise ValueError(f"unknown unit string {text!r}") from None
    return _coerce(raw, kind, complex_mode)


@dataclass(frozen=True)
class GoldenFixture:
    signature: Tuple[int, int]
    mode: str
    classification: str
    item1: Tuple[Tuple[str, bool], ...]
    item2: Tuple[str, ...]
    item3_block1: Tuple[Tuple[str, str], ...]
    item3_block2: Tuple[Tuple[str, str], ...]
    item4: Tuple[Tuple[Tuple[int, int, str], ...], ...]
    item5: Tuple[Tuple[str, str, bool], ...]
    item6: Tuple[Tuple[Tuple[int, int, str], ...], ...]
    item7: Dict
    equivalences: Tuple[str, ...]
    path: Optional[Path] = None


def load_fixture(path: Path) -> GoldenFixture:
    data = json.loads(Path(path).read_text())
    item3 = data["item3"]
    return GoldenFixture(
        signature=tuple(data["signature"]),
        mode=data["mode"],
        classification=data["classification"],
        item1=tuple((b, bool(im)) for b, im in data["item1"]),
        item2=tuple(data["item2"]),
        item3_block1=tuple((u, b) for u, b in item3["block1"]),
        item3_block2=tuple((u, b) for u, b in item3.get("block2", [])),
        item4=tuple(
            tuple((i, j, unit) for i, j, unit in matrix) for matrix in data["item4"]
        ),
        item5=tuple(
            (unit, blade, bool(ginv)) for unit, blade, ginv in data["item5"]
        ),
        item6=tuple(
            tuple((i, j, unit) for i, j, unit in matrix) for matrix in data["item6"]
        ),
        item7=data["item7"],
        equivalences=tuple(data.get("equivalences", [])),
        path=Path(path),
    )


def available_fixtures(directory: Optional[Path] = None) -> List[Path]:
    directory = directory or fixtures_dir()
    return sorted(directory.glob("*.json"))


def fixture_path(p: int, q: int, mode: str, directory: Optional[Path] = None) -> Path:
    directory = directory or fixtures_dir()
    return directory / f"{mode}_{p}_{q}.json"


# ---------------------------------------------------------------------------
# Units and division-ring automorphisms


def _scalar_tuple(x: Scalar) -> Tuple[Fraction, ...]:
    if isinstance(x, GaussianRational):
        return (x.re, x.im)
    if isinstance(x, RationalQuaternion):
        return (x.w, x.x, x.y, x.z)
    return (Fraction(x),)


def _norm_sq(x: Scalar) -> Fraction:
    return sum((c * c for c in _scalar_tuple(x)), Fraction(0))


def _inverse(x: Scalar) -> Scalar:
    n = _norm_sq(x)
    if not n:
        raise ZeroDivisionError("scalar inverse of zero")
    if isinstance(x, Fraction):
        return 1 / x
    return conjugate(x) * (1 / n)


def _phase_variants(mv: Multivector, complex_mode: bool) -> List[Multivector]:
    out = [mv, -mv]
    if complex_mode:
        i = GaussianRational.of(0, 1)
        out += [mv.scale(i), mv.scale(-i)]
    return out


def _canonical_key(mv: Multivector, complex_mode: bool) -> tuple:
    """A representative key invariant under unit rescaling."""
    keys = [
        tuple((bits, _scalar_tuple(c)) for bits, c in v.key())
        for v in _phase_variants(mv, complex_mode)
    ]
    return min(keys)


def _diagonal_units(kind: str, complex_mode: bool, ring_multiple: bool) -> List[Scalar]:
    """The units a basis element may be rescaled by."""
    if complex_mode:
        return [
            GaussianRational.of(1),
            GaussianRational.of(-1),
            GaussianRational.of(0, 1),
            GaussianRational.of(0, -1),
        ]
    if not ring_multiple or kind == "R":
        one = _coerce(Fraction(1), kind, False)
        return [one, -one]
    if kind == "C":
        return [
            GaussianRational.of(1),
            GaussianRational.of(-1),
            GaussianRational.of(0, 1),
            GaussianRational.of(0, -1),
        ]
    units = []
    for base in (
        RationalQuaternion.of(1),
        RationalQuaternion(0, 1, 0, 0),
        RationalQuaternion(0, 0, 1, 0),
        RationalQuaternion(0, 0, 0, 1),
    ):
        units += [base, -base]
    return units


def _quaternion_rotations() -> List[Callable[[Scalar], Scalar]]:
    """The 24 automorphisms of H fixing the reals (signed permutations of
    (q1, q2, q3) that preserve q1 q2 = q3)."""
    units = (
        RationalQuaternion(0, 1, 0, 0),
        RationalQuaternion(0, 0, 1, 0),
        RationalQuaternion(0, 0, 0, 1),
    )
    maps: List[Callable[[Scalar], Scalar]] = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            images = [units[perm[a]] * signs[a] for a in range(3)]
            if images[0] * images[1] != images[2]:
                continue

            def automorphism(x: Scalar, images=tuple(images)) -> Scalar:
                assert isinstance(x, RationalQuaternion)
                out = RationalQuaternion.of(x.w)
                for coeff, image in zip((x.x, x.y, x.z), images):
                    out = out + image * coeff
                return out

            maps.append(automorphism)
    assert len(maps) == 24
    return maps


def _ring_automorphisms(kind: str, complex_entries: bool) -> List[Callable]:
    identity = lambda x: x  # noqa: E731
    if kind == "H" and not complex_entries:
        return _quaternion_rotations()
    if kind == "C" or complex_entries:
        def conj(x: Scalar) -> Scalar:
            assert isinstance(x, GaussianRational)
            return x.conjugate()

        return [identity, conj]
    return [identity]


# ---------------------------------------------------------------------------
# Reports


@dataclass(frozen=True)
class ItemResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    signature: Tuple[int, int]
    mode: str
    results: List[ItemResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.results.append(ItemResult(name, passed, detail))

    def summary(self) -> str:
        p, q = self.signature
        status = "PASS" if self.passed else "FAIL"
        lines = [f"Cl({p},{q}) [{self.mode}]: {status}"]
        for r in self.results:
            mark = "ok" if r.passed else "FAIL"
            suffix = f"  ({r.detail})" if r.detail and not r.passed else ""
            lines.append(f"  {r.name}: {mark}{suffix}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Printed elements


def _printed_element(
    table: SpinorTable, unit: str, blade_text: str, ginv: bool = False
) -> Multivector:
    """The basis/spinor term exactly as printed: unit * e_T P1, grade
    inverted when flagged."""
    P = table.family.primitive
    value = Multivector.blade(table.sig, parse_blade(blade_text)) * P
    coeff = parse_unit(unit, "C" if table.complex_mode else "R", table.complex_mode)
    value = value.scale(coeff)
    if ginv:
        value = grade_involution(value)
    return value


# ---------------------------------------------------------------------------
# Items 1-3


def _verify_item1(table: SpinorTable, fixture: GoldenFixture, report) -> None:
    expected = tuple(
        (parse_blade(b), imaginary) for b, imaginary in fixture.item1
    )
    computed = tuple(zip(table.family.blades, table.family.imaginary))
    report.add(
        "item1 idempotent",
        computed == expected,
        f"computed factors {computed}, fixture {expected}",
    )


def _verify_item2(table: SpinorTable, fixture: GoldenFixture, report) -> None:
    complex_mode = table.complex_mode
    P = table.family.primitive
    expected_keys = set()
    for blade_text in fixture.item2:
        x = P * Multivector.blade(table.sig, parse_blade(blade_text)) * P
        if x.is_zero():
            report.add("item2 ring", False, f"P e_{blade_text} P vanishes")
            return
        expected_keys.add(_canonical_key(x, complex_mode))
    computed_keys = {
        _canonical_key(e, complex_mode) for e in table.ring.elements
    }
    report.add(
        "item2 ring",
        expected_keys == computed_keys
        and len(fixture.item2) == len(table.ring.elements),
        "ring elements differ from the printed generators (up to a unit)",
    )


def _match_slot(
    printed: Multivector,
    candidates: Sequence[Multivector],
    right_units: Sequence[Multivector],
    phases: Sequence[Scalar],
) -> Optional[int]:
    """The unique candidate index whose right-unit multiples reach the
    printed element up to a phase, or None."""
    target = printed.key()
    for index, candidate in enumerate(candidates):
        for K in right_units:
            product = candidate * K
            for phase in phases:
                if product.scale(phase).key() == target:
                    return index
    return None


def _verify_item3(
    table: SpinorTable, fixture: GoldenFixture, report
) -> Optional[List[int]]:
    """Checks the printed basis and returns the slot map tau: printed
    position -> computed position (identity unless reordering is allowed
    by the ring-multiple flag)."""
    complex_mode = table.complex_mode
    ring_multiple = "item3_ring_multiple" in fixture.equivalences
    sig_phases: Sequence[Scalar] = (
        (
            GaussianRational.of(1),
            GaussianRational.of(-1),
            GaussianRational.of(0, 1),
            GaussianRational.of(0, -1),
        )
        if complex_mode
        else (Fraction(1), Fraction(-1))
    )
    identity_unit = [table.family.primitive]
    right_units = list(table.ring.elements) if ring_multiple else identity_unit
    blocks = [
        (fixture.item3_block1, list(table.basis.generators), False, right_units),
        (
            fixture.item3_block2,
            list(table.basis.second_block),
            True,
            [grade_involution(K) for K in right_units],
        ),
    ]
    tau: List[int] = []
    offset = 0
    for printed_block, computed, ginv, units in blocks:
        if len(printed_block) != len(computed):
            report.add(
                "item3 basis",
                False,
                f"block size {len(computed)} != printed {len(printed_block)}",
            )
            return None
        used = set()
        for position, (unit, blade_text) in enumerate(printed_block):
            printed = _printed_element(table, unit, blade_text, ginv)
            if ring_multiple:
                slot = _match_slot(printed, computed, units, sig_phases)
                if slot is None or slot in used:
                    report.add(
                        "item3 basis",
                        False,
                        f"printed element {unit}*e{blade_text or '0'} matches "
                        "no unused computed element",
                    )
                    return None
            else:
                slot = position
                if _match_slot(
                    printed, [computed[slot]], units[:1], sig_phases
                ) is None:
                    report.add(
                        "item3 basis",
                        False,
                        f"printed element #{offset + position + 1} differs "
                        "from the computed one",
                    )
                    return None
            used.add(slot)
            tau.append(offset + slot)
        offset += len(computed)
    report.add("item3 basis", True)
    return tau


# ---------------------------------------------------------------------------
# Items 4 and 6: diagonal unit similarity


def _expected_matrix(
    entries: Sequence[Tuple[int, int, str]],
    dim: int,
    kind: str,
    complex_mode: bool,
    transposed: bool,
) -> List[List[Scalar]]:
    zero = _coerce(Fraction(0), kind, complex_mode)
    rows = [[zero] * dim for _ in range(dim)]
    for i, j, unit in entries:
        if transposed:
            i, j = j, i
        rows[i - 1][j - 1] = rows[i - 1][j - 1] + parse_unit(unit, kind, complex_mode)
    return rows


def _permuted(matrix: RepMatrix, tau: Sequence[int]) -> List[List[Scalar]]:
    return [[matrix.entries[tau[p]][tau[q]] for q in range(len(tau))] for p in range(len(tau))]


def _components(dim: int, edge_sets: Sequence[Sequence[Tuple[int, int]]]) -> List[List[int]]:
    parent = list(range(dim))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for edges in edge_sets:
        for p, q in edges:
            ra, rb = find(p), find(q)
            if ra != rb:
                parent[ra] = rb
    groups: Dict[int, List[int]] = {}
    for node in range(dim):
        groups.setdefault(find(node), []).append(node)
    return list(groups.values())


@dataclass(frozen=True)
class _Similarity:
    automorphism: Callable
    tau: Tuple[int, ...]
    diagonal: Tuple[Scalar, ...]

    def transform(self, computed: RepMatrix) -> List[List[Scalar]]:
        dim = len(self.tau)
        rows = []
        for p in range(dim):
            dp_inv = _inverse(self.diagonal[p])
            row = []
            for q in range(dim):
                entry = self.automorphism(computed.entries[self.tau[p]][self.tau[q]])
                row.append(dp_inv * entry * self.diagonal[q])
            rows.append(row)
        return rows


def _solve_similarities(
    computed: Sequence[RepMatrix],
    expected: Sequence[Sequence[Sequence[Scalar]]],
    tau: Sequence[int],
    units: Sequence[Scalar],
    automorphisms: Sequence[Callable],
    abelian: bool,
) -> List[_Similarity]:
    """All (phi, d) with expected_pq == d_p^-1 phi(computed_tau(p)tau(q)) d_q
    for every matrix pair, d drawn from ``units``."""
    dim = len(tau)
    unit_keys = {_scalar_tuple(u) for u in units}
    solutions: List[_Similarity] = []
    for phi in automorphisms:
        mapped = [
            [[phi(entry) for entry in row] for row in _permuted(c, tau)]
            for c in computed
        ]
        # The zero patterns must agree regardless of the diagonal.
        if any(
            bool(m[p][q]) != bool(e[p][q])
            for m, e in zip(mapped, expected)
            for p in range(dim)
            for q in range(dim)
        ):
            continue
        edge_sets = [
            [(p, q) for p in range(dim) for q in range(dim) if p != q and m[p][q]]
            for m in mapped
        ]
        components = _components(dim, edge_sets)
        # Within one component the diagonal is fixed by any root choice;
        # for commutative entries the root cancels entirely.
        roots = [units[0]] if abelian else units
        per_component: List[List[Dict[int, Scalar]]] = []
        feasible = True
        for component in components:
            assignments: List[Dict[int, Scalar]] = []
            for root in roots:
                diag = {component[0]: root}
                frontier = [component[0]]
                consistent = True
                while frontier and consistent:
                    node = frontier.pop()
                    for m, e in zip(mapped, expected):
                        for other in component:
                            if other in diag:
                                continue
                            if m[node][other]:
                                # e = d_node^-1 c d_other
                                diag[other] = (
                                    _inverse(m[node][other]) * diag[node] * e[node][other]
                                )
                                frontier.append(other)
                            elif m[other][node]:
                                # e = d_other^-1 c d_node
                                diag[other] = (
                                    m[other][node] * diag[node] * _inverse(e[other][node])
                                )
                                frontier.append(other)
                if len(diag) != len(component):
                    continue  # disconnected within a component: cannot happen
                if any(_scalar_tuple(v) not in unit_keys for v in diag.values()):
                    continue
                if all(
                    _inverse(diag[p]) * m[p][q] * diag[q] == e[p][q]
                    for m, e in zip(mapped, expected)
                    for p in component
                    for q in component
                ):
                    assignments.append(diag)
            if not assignments:
                feasible = False
                break
            per_component.append(assignments)
        if not feasible:
            continue
        for combo in itertools.product(*per_component):
            diagonal: List[Scalar] = [None] * dim  # type: ignore[list-item]
            for diag in combo:
                for node, value in diag.items():
                    diagonal[node] = value
            solutions.append(_Similarity(phi, tuple(tau), tuple(diagonal)))
    return solutions


def _verify_item4(
    table: SpinorTable, fixture: GoldenFixture, tau: Optional[List[int]], report
) -> List[_Similarity]:
    if tau is None:
        report.add("item4 generator reps", False, "skipped: item3 failed")
        return []
    kind = table.ring.kind
    complex_entries = table.complex_mode
    computed = list(table.generator_matrices)
    dim = computed[0].dim
    if len(fixture.item4) != len(computed):
        report.add("item4 generator reps", False, "matrix count differs")
        return []
    full_tau = list(tau) + list(range(len(tau), dim))  # implicit block slots
    transposed = "item4_transposed" in fixture.equivalences
    try:
        expected = [
            _expected_matrix(entries, dim, kind, complex_entries, transposed)
            for entries in fixture.item4
        ]
    except ValueError as error:
        report.add("item4 generator reps", False, str(error))
        return []
    ring_multiple = "item3_ring_multiple" in fixture.equivalences
    units = _diagonal_units(kind, complex_entries, ring_multiple)
    abelian = complex_entries or kind != "H"
    solutions = _solve_similarities(
        computed,
        expected,
        full_tau,
        units,
        _ring_automorphisms(kind, complex_entries),
        abelian,
    )
    report.add(
        "item4 generator reps",
        bool(solutions),
        "no unit rescaling of the basis matches the printed matrices",
    )
    return solutions


def _verify_item5(table: SpinorTable, fixture: GoldenFixture, report) -> None:
    if len(fixture.item5) != table.space.size:
        report.add("item5 spinor", False, "coefficient count differs")
        return
    complex_mode = table.complex_mode
    ring_multiple = "item3_ring_multiple" in fixture.equivalences
    printed = [
        _printed_element(table, unit, blade_text, ginv)
        for unit, blade_text, ginv in fixture.item5
    ]
    computed = list(table.space.component_values)
    if ring_multiple:
        printed_keys = sorted(_canonical_key(v, complex_mode) for v in printed)
        computed_keys = sorted(_canonical_key(v, complex_mode) for v in computed)
        ok = printed_keys == computed_keys
        detail = "printed terms are not the computed ones (up to units and order)"
    else:
        ok = all(
            _canonical_key(a, complex_mode) == _canonical_key(b, complex_mode)
            for a, b in zip(printed, computed)
        )
        detail = "a printed term differs from the computed one"
    report.add("item5 spinor", ok, detail)


def _verify_item6(
    table: SpinorTable,
    fixture: GoldenFixture,
    solutions: List[_Similarity],
    report,
) -> None:
    if not solutions:
        report.add("item6 spinor matrix", False, "skipped: item4 failed")
        return
    if len(fixture.item6) != len(fixture.item5):
        report.add("item6 spinor matrix", False, "coefficient count differs")
        return
    kind = table.ring.kind
    complex_entries = table.complex_mode
    dim = table.generator_matrices[0].dim
    transposed = "item6_transposed" in fixture.equivalences
    try:
        expected = [
            _expected_matrix(entries, dim, kind, complex_entries, transposed)
            for entries in fixture.item6
        ]
    except ValueError as error:
        report.add("item6 spinor matrix", False, str(error))
        return
    printed_terms = [
        _printed_element(table, unit, blade_text, ginv)
        for unit, blade_text, ginv in fixture.item5
    ]
    reps = [
        rep_matrix(term, table.basis, table.ring) for term in printed_terms
    ]
    coefficient_units = _diagonal_units("R" if kind == "H" else kind, complex_entries, True)
    failure = ""
    for similarity in solutions:
        ok = True
        for index, (rep, exp) in enumerate(zip(reps, expected)):
            transformed = similarity.transform(rep)
            if not any(
                all(
                    z * transformed[p][q] == exp[p][q]
                    for p in range(dim)
                    for q in range(dim)
                )
                for z in coefficient_units
            ):
                ok = False
                failure = f"coefficient s{index + 1} matrix differs"
                break
        if ok:
            report.add("item6 spinor matrix", True)
            return
    report.add("item6 spinor matrix", False, failure or "no similarity matches")


def _verify_item7(table: SpinorTable, fixture: GoldenFixture, report) -> None:
    printed = fixture.item7
    sandwich_text = printed.get("sandwich")
    fixture_formula = NormFormula(
        sign=printed["sign"],
        involution=printed["involution"],
        conjugated=bool(printed.get("conjugated", False)),
        sandwich=parse_blade(sandwich_text) if sandwich_text else None,
        scale=Fraction(1, 1 << printed["k"]),
    )
    computed = table.norm_formula
    if computed == fixture_formula:
        report.add("item7 norm formula", True)
        return
    if "item7_equivalent" in fixture.equivalences and norm_identity_holds(
        table.space, fixture_formula.evaluate, fixture_formula.scale
    ):
        report.add("item7 norm formula", True)
        return
    report.add(
        "item7 norm formula",
        False,
        f"computed {computed.describe()}, printed {fixture_formula.describe()}",
    )


def verify_against_golden(
    table: SpinorTable, fixture: GoldenFixture
) -> VerificationReport:
    report = VerificationReport((table.sig.p, table.sig.q), table.mode)
    report.add(
        "signature/mode",
        (table.sig.p, table.sig.q) == tuple(fixture.signature)
        and table.mode == fixture.mode,
    )
    report.add(
        "classification",
        table.classification == fixture.classification,
        f"computed {table.classification}, fixture {fixture.classification}",
    )
    _verify_item1(table, fixture, report)
    _verify_item2(table, fixture, report)
    tau = _verify_item3(table, fixture, report)
    solutions = _verify_item4(table, fixture, tau, report)
    _verify_item5(table, fixture, report)
    _verify_item6(table, fixture, solutions, report)
    _verify_item7(table, fixture, report)
    return report
