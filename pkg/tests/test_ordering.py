"""The twelve blade orderings for n = 4, element for element, plus the
pairwise e12 / e134 comparisons in every ordering."""

from __future__ import annotations

import pytest

from spintab.core import Blade, Signature, basis_blades
from spintab.ordering import OrderingKind, compare, sort_blades


def blade(text: str) -> Blade:
    if text == "1":
        return Blade(0)
    return Blade.from_indices(int(ch) for ch in text.lstrip("e"))


EXPECTED = {
    "Lex": "e1234 e123 e124 e12 e134 e13 e14 e1 e234 e23 e24 e2 e34 e3 e4 1",
    "InvLex": "e1234 e234 e134 e34 e124 e24 e14 e4 e123 e23 e13 e3 e12 e2 e1 1",
    "RevLex": "1 e1 e2 e12 e3 e13 e23 e123 e4 e14 e24 e124 e34 e134 e234 e1234",
    "InvRevLex": "1 e4 e3 e34 e2 e24 e23 e234 e1 e14 e13 e134 e12 e124 e123 e1234",
    "Deg[Lex]": "e1234 e123 e124 e134 e234 e12 e13 e14 e23 e24 e34 e1 e2 e3 e4 1",
    "Deg[InvLex]": "e1234 e234 e134 e124 e123 e34 e24 e14 e23 e13 e12 e4 e3 e2 e1 1",
    "Deg[RevLex]": "e1234 e123 e124 e134 e234 e12 e13 e23 e14 e24 e34 e1 e2 e3 e4 1",
    "Deg[InvRevLex]": "e1234 e234 e134 e124 e123 e34 e24 e23 e14 e13 e12 e4 e3 e2 e1 1",
    "InvDeg[Lex]": "1 e1 e2 e3 e4 e12 e13 e14 e23 e24 e34 e123 e124 e134 e234 e1234",
    "InvDeg[InvLex]": "1 e4 e3 e2 e1 e34 e24 e14 e23 e13 e12 e234 e134 e124 e123 e1234",
    "InvDeg[RevLex]": "1 e1 e2 e3 e4 e12 e13 e23 e14 e24 e34 e123 e124 e134 e234 e1234",
    "InvDeg[InvRevLex]": "1 e4 e3 e2 e1 e34 e24 e23 e14 e13 e12 e234 e134 e124 e123 e1234",
}

# Whether e12 > e134 in each ordering.
E12_GREATER = {
    "Lex": True,
    "InvLex": False,
    "RevLex": True,
    "InvRevLex": False,
    "Deg[Lex]": False,
    "Deg[InvLex]": False,
    "Deg[RevLex]": False,
    "Deg[InvRevLex]": False,
    "InvDeg[Lex]": True,
    "InvDeg[InvLex]": True,
    "InvDeg[RevLex]": True,
    "InvDeg[InvRevLex]": True,
}


def test_twelve_orderings_exist():
    kinds = OrderingKind.all_kinds()
    assert len(kinds) == 12
    assert sorted(str(k) for k in kinds) == sorted(EXPECTED)


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_descending_list_n4(name):
    kind = OrderingKind.parse(name)
    blades = basis_blades(Signature(4, 0))
    ordered = sort_blades(kind, blades, descending=True)
    expected = [blade(t) for t in EXPECTED[name].split()]
    assert ordered == expected, f"{name} ordering differs"


@pytest.mark.parametrize("name", sorted(E12_GREATER))
def test_e12_vs_e134(name):
    kind = OrderingKind.parse(name)
    a, b = blade("e12"), blade("e134")
    result = compare(kind, a, b)
    if E12_GREATER[name]:
        assert result > 0, f"{name}: expected e12 > e134"
    else:
        assert result < 0, f"{name}: expected e12 < e134"


def test_parse_round_trip():
    for kind in OrderingKind.all_kinds():
        assert OrderingKind.parse(str(kind)) == kind


def test_sort_is_total_and_stable():
    blades = basis_blades(Signature(4, 0))
    for kind in OrderingKind.all_kinds():
        ordered = sort_blades(kind, blades, descending=True)
        assert len(ordered) == len(blades)
        assert set(ordered) == set(blades)
        for a, b in zip(ordered, ordered[1:]):
            assert compare(kind, a, b) > 0
