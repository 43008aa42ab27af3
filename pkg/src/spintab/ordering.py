"""The twelve blade orderings used to sort basis elements.

Four base orderings (Lex, InvLex, RevLex, InvRevLex) optionally preceded by
a degree correction (Deg: higher degree first; InvDeg: higher degree last)
give 4 x 3 = 12 total orders.

Two blades are compared through their padded index vectors: position ``i``
of the vector holds ``i`` when generator ``i`` is present and ``0``
otherwise, so ``e12 -> {1,2,0,0}`` and ``e134 -> {1,0,3,4}`` for n = 4.
The base orderings inspect the leftmost/rightmost nonzero entry of the
vector difference.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Iterable, List, Sequence

from .core import Blade

__all__ = ["BaseOrder", "DegreeMode", "OrderingKind", "compare", "sort_blades", "blade_key"]


class BaseOrder(enum.Enum):
    LEX = "Lex"
    INVLEX = "InvLex"
    REVLEX = "RevLex"
    INVREVLEX = "InvRevLex"


class DegreeMode(enum.Enum):
    NONE = ""
    DEG = "Deg"
    INVDEG = "InvDeg"


@dataclass(frozen=True)
class OrderingKind:
    """One of the 12 blade orderings."""

    base: BaseOrder
    degree_mode: DegreeMode = DegreeMode.NONE

    @staticmethod
    def parse(name: str) -> "OrderingKind":
        """Parse names like ``"Lex"``, ``"Deg[RevLex]"`` or ``"InvDeg[Lex]"``."""
        text = name.strip()
        mode = DegreeMode.NONE
        for candidate in (DegreeMode.INVDEG, DegreeMode.DEG):
            prefix = candidate.value + "["
            if text.startswith(prefix) and text.endswith("]"):
                mode = candidate
                text = text[len(prefix):-1]
                break
        for base in BaseOrder:
            if base.value.lower() == text.lower():
                return OrderingKind(base, mode)
        raise ValueError(f"unknown ordering {name!r}")

    def __str__(self) -> str:
        if self.degree_mode is DegreeMode.NONE:
            return self.base.value
        return f"{self.degree_mode.value}[{self.base.value}]"

    @staticmethod
    def all_kinds() -> List["OrderingKind"]:
        return [OrderingKind(b, m) for m in DegreeMode for b in BaseOrder]


LEX = OrderingKind(BaseOrder.LEX)
INVLEX = OrderingKind(BaseOrder.INVLEX)
REVLEX = OrderingKind(BaseOrder.REVLEX)
INVREVLEX = OrderingKind(BaseOrder.INVREVLEX)
INVDEG_LEX = OrderingKind(BaseOrder.LEX, DegreeMode.INVDEG)


def _index_vector(blade: Blade, length: int) -> List[int]:
    """Padded index vector: entry i-1 is i when present, else 0."""
    return [i if blade.bits >> (i - 1) & 1 else 0 for i in range(1, length + 1)]


def _base_compare(base: BaseOrder, a: Blade, b: Blade) -> int:
    """Returns +1 when a > b, -1 when a < b, 0 when equal."""
    if a.bits == b.bits:
        return 0
    length = max(a.bits.bit_length(), b.bits.bit_length())
    diff = [
        x - y
        for x, y in zip(_index_vector(a, length), _index_vector(b, length))
    ]
    nonzero = [d for d in diff if d != 0]
    if base is BaseOrder.LEX:
        return 1 if nonzero[0] > 0 else -1
    if base is BaseOrder.INVLEX:
        return 1 if nonzero[-1] > 0 else -1
    if base is BaseOrder.REVLEX:
        return 1 if nonzero[-1] < 0 else -1
    if base is BaseOrder.INVREVLEX:
        return 1 if nonzero[0] < 0 else -1
    raise AssertionError(base)


def compare(kind: OrderingKind, a: Blade, b: Blade) -> int:
    """Three-way comparison: +1 when ``a > b`` under ``kind``."""
    if a.bits == b.bits:
        return 0
    if kind.degree_mode is DegreeMode.DEG and a.grade != b.grade:
        return 1 if a.grade > b.grade else -1
    if kind.degree_mode is DegreeMode.INVDEG and a.grade != b.grade:
        return 1 if a.grade < b.grade else -1
    return _base_compare(kind.base, a, b)


def sort_blades(
    kind: OrderingKind, blades: Iterable[Blade], descending: bool = True
) -> List[Blade]:
    """Stable sort under ``compare``; descending reproduces the printed
    example lists (greatest element first)."""
    cmp = functools.cmp_to_key(lambda x, y: compare(kind, x, y))
    return sorted(blades, key=cmp, reverse=descending)


def blade_key(kind: OrderingKind, descending: bool = True):
    """A sort key for arbitrary objects carrying a blade, for reuse with
    ``max``/``sorted`` at call sites that sort by a leading blade."""
    cmp = functools.cmp_to_key(lambda x, y: compare(kind, x, y))
    if descending:
        class _Rev:
            __slots__ = ("k",)

            def __init__(self, blade):
                self.k = cmp(blade)

            def __lt__(self, other):
                return other.k < self.k

        return _Rev
    return cmp
