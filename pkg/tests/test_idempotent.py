"""Radon-Hurwitz numbers, commuting-tuple candidate search, and the
idempotent family construction."""

from __future__ import annotations

from fractions import Fraction

import pytest

from spintab.core import Blade, Multivector, Signature, commutes
from spintab.idempotent import (
    build_family,
    candidate_blades,
    default_tuple,
    find_commuting_tuples,
    idempotent_factor_count,
    radon_hurwitz,
)

# r_i for i = -8 .. 8.
RH_TABLE = [-4, -3, -2, -2, -1, -1, -1, -1, 0, 1, 2, 2, 3, 3, 3, 3, 4]


def blade(text: str) -> Blade:
    return Blade.from_indices(int(ch) for ch in text.lstrip("e"))


def test_radon_hurwitz_printed_values():
    assert [radon_hurwitz(i) for i in range(-8, 9)] == RH_TABLE


def test_radon_hurwitz_recursion():
    for i in range(-8, 33):
        assert radon_hurwitz(i + 8) == radon_hurwitz(i) + 4


@pytest.mark.parametrize("p,q", [(2, 2), (3, 1), (0, 4), (4, 4), (0, 6)])
def test_factor_count_matches_family(p, q):
    sig = Signature(p, q)
    fam = build_family(sig, default_tuple(sig))
    assert fam.k == idempotent_factor_count(sig)
    assert len(fam.blades) == fam.k


CL22_TUPLES = [
    ("e1", "e23"), ("e1", "e24"), ("e1", "e123"), ("e1", "e124"),
    ("e2", "e13"), ("e2", "e14"), ("e2", "e123"), ("e2", "e124"),
    ("e13", "e24"), ("e13", "e123"), ("e13", "e1234"),
    ("e14", "e23"), ("e14", "e124"), ("e14", "e1234"),
    ("e23", "e123"), ("e23", "e1234"),
    ("e24", "e124"), ("e24", "e1234"),
]


def test_cl22_candidate_tuples():
    sig = Signature(2, 2)
    found = list(find_commuting_tuples(sig, 2))
    expected = [tuple(blade(t) for t in pair) for pair in CL22_TUPLES]
    assert found == expected


def test_cl22_default_tuple_is_first():
    sig = Signature(2, 2)
    assert default_tuple(sig) == (blade("e1"), blade("e23"))


def test_candidates_square_to_plus_one():
    for p, q in [(2, 2), (3, 0), (1, 3), (4, 1)]:
        sig = Signature(p, q)
        for b in candidate_blades(sig):
            mv = Multivector.blade(sig, b)
            assert mv * mv == Multivector.scalar(sig, Fraction(1))


def test_tuples_commute_pairwise():
    sig = Signature(3, 3)
    k = idempotent_factor_count(sig)
    for tup in find_commuting_tuples(sig, k):
        for i in range(len(tup)):
            for j in range(i + 1, len(tup)):
                assert commutes(tup[i], tup[j], sig)


@pytest.mark.parametrize(
    "mode,max_n", [("real", 5), ("complex", 5)]
)
def test_family_axioms(mode, max_n):
    from conftest import all_signatures

    complex_mode = mode == "complex"
    for p, q in all_signatures(max_n):
        if complex_mode and q:
            continue
        sig = Signature(p, q)
        fam = build_family(sig, default_tuple(sig, complex_mode), complex_mode)
        assert len(fam.members) == 1 << fam.k
        primitive = fam.primitive
        assert primitive * primitive == primitive
