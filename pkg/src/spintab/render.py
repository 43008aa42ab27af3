"""Plain-text formatting of scalars, multivectors and matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

from .core import Blade, Multivector
from .ordering import REVLEX, OrderingKind, sort_blades
from .scalars import GaussianRational, RationalQuaternion, Scalar

__all__ = [
    "fraction_str",
    "scalar_str",
    "multivector_str",
    "matrix_str",
    "blade_str",
]


def blade_str(blade: Blade) -> str:
    return str(blade)


def fraction_str(x: Fraction) -> str:
    return str(x)


def _part_str(value: Fraction, symbol: str) -> Optional[str]:
    """Format ``value * symbol`` or ``None`` when the value is zero."""
    if not value:
        return None
    if symbol == "1":
        return str(value)
    if value == 1:
        return symbol
    if value == -1:
        return f"-{symbol}"
    return f"{value}{symbol}"


def scalar_str(x: Scalar) -> str:
    if isinstance(x, GaussianRational):
        parts = [_part_str(x.re, "1"), _part_str(x.im, "i")]
    elif isinstance(x, RationalQuaternion):
        parts = [
            _part_str(x.w, "1"),
            _part_str(x.x, "q1"),
            _part_str(x.y, "q2"),
            _part_str(x.z, "q3"),
        ]
    else:
        return str(x)
    kept = [p for p in parts if p is not None]
    if not kept:
        return "0"
    out = kept[0]
    for p in kept[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def _needs_parens(s: str) -> bool:
    return " + " in s or " - " in s


def multivector_str(
    mv: Multivector, kind: OrderingKind = REVLEX, descending: bool = True
) -> str:
    if mv.is_zero():
        return "0"
    parts: List[str] = []
    for blade in sort_blades(kind, mv.blades(), descending=descending):
        coeff = mv.coefficient(blade)
        cs = scalar_str(coeff)
        bs = blade_str(blade)
        if bs == "1":
            term = f"({cs})" if _needs_parens(cs) else cs
        elif cs == "1":
            term = bs
        elif cs == "-1":
            term = f"-{bs}"
        elif _needs_parens(cs):
            term = f"({cs}){bs}"
        else:
            term = f"{cs}*{bs}"
        parts.append(term)
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def matrix_str(entries: Sequence[Sequence[Scalar]]) -> str:
    """Sum-of-units form ``E11 - E22`` when every entry is a signed unit,
    otherwise explicit bracketed rows."""
    terms: List[str] = []
    simple = True
    for i, row in enumerate(entries):
        for j, value in enumerate(row):
            if not value:
                continue
            cs = scalar_str(value)
            label = f"E{i + 1}{j + 1}"
            if cs == "1":
                terms.append(label)
            elif cs == "-1":
                terms.append(f"-{label}")
            elif cs in ("i", "-i", "q1", "-q1", "q2", "-q2", "q3", "-q3"):
                terms.append(f"{cs}*{label}")
            else:
                simple = False
    if simple and terms:
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out
    rows = [
        "[" + ", ".join(scalar_str(v) for v in row) + "]" for row in entries
    ]
    return "[" + ", ".join(rows) + "]"
