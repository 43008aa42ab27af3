"""Serialization of spinor tables to text, JSON and LaTeX.

JSON schema (stable):

    {
      "signature": [p, q],
      "mode": "real" | "complex",
      "classification": "R(4)" | "C(2)⊕C(2)" | ...,
      "items": {
        "1": {"factors": [{"blade": [..], "imaginary": bool}, ..],
              "primitive": [term, ..]},
        "2": {"kind": "R"|"C"|"H", "generators": [[..], ..],
              "elements": [[term, ..], ..]},
        "3": {"generators": [[..], ..], "elements": [[term, ..], ..],
              "semisimple": bool, "second_block": [[term, ..], ..]},
        "4": [matrix, ..],
        "5": [{"label": str, "terms": [term, ..]}, ..],
        "6": [matrix, ..],
        "7": {"formula": {"sign": ±1, "involution": str,
                          "conjugated": bool, "sandwich": [..] | null},
              "rhs_normalization": "2^-k", "k": int}
      }
    }

Blades are sorted index arrays; a term is {"blade": [..], "coef": scalar};
a matrix is {"dim": d, "entries": [[i, j, scalar], ..]} (nonzero entries,
1-based).  Scalars are {"num": int, "log2den": int} with optional "im",
"jm", "km" parts (i, q2, q3 components) of the same shape.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List, Sequence

from .core import Blade, Multivector
from .ordering import REVLEX, sort_blades
from .render import matrix_str, multivector_str, scalar_str
from .rep import RepMatrix
from .scalars import GaussianRational, RationalQuaternion, Scalar
from .table import SpinorTable

__all__ = ["emit", "table_to_json", "scalar_to_json", "scalar_from_json"]


def _fraction_to_json(x: Fraction) -> Dict[str, int]:
    den = x.denominator
    log2den = den.bit_length() - 1
    if 1 << log2den != den:
        raise ValueError(f"denominator of {x} is not a power of two")
    return {"num": x.numerator, "log2den": log2den}


def _fraction_from_json(obj: Dict[str, int]) -> Fraction:
    return Fraction(obj["num"], 1 << obj["log2den"])


def scalar_to_json(x: Scalar) -> Dict:
    if isinstance(x, GaussianRational):
        out = _fraction_to_json(x.re)
        if x.im:
            out["im"] = _fraction_to_json(x.im)
        return out
    if isinstance(x, RationalQuaternion):
        out = _fraction_to_json(x.w)
        if x.x:
            out["im"] = _fraction_to_json(x.x)
        if x.y:
            out["jm"] = _fraction_to_json(x.y)
        if x.z:
            out["km"] = _fraction_to_json(x.z)
        return out
    return _fraction_to_json(Fraction(x))


def scalar_from_json(obj: Dict) -> Scalar:
    real = _fraction_from_json(obj)
    if "jm" in obj or "km" in obj:
        zero = Fraction(0)
        return RationalQuaternion(
            real,
            _fraction_from_json(obj["im"]) if "im" in obj else zero,
            _fraction_from_json(obj["jm"]) if "jm" in obj else zero,
            _fraction_from_json(obj["km"]) if "km" in obj else zero,
        )
    if "im" in obj:
        return GaussianRational(real, _fraction_from_json(obj["im"]))
    return real


def _blade_to_json(blade: Blade) -> List[int]:
    return list(blade.indices)


def _mv_to_json(mv: Multivector) -> List[Dict]:
    return [
        {"blade": _blade_to_json(b), "coef": scalar_to_json(mv.coefficient(b))}
        for b in sort_blades(REVLEX, mv.blades(), descending=True)
    ]


def _matrix_to_json(matrix: RepMatrix) -> Dict:
    return {
        "dim": matrix.dim,
        "entries": [
            [i, j, scalar_to_json(v)] for i, j, v in matrix.nonzero_entries()
        ],
    }


def table_to_json(table: SpinorTable) -> Dict:
    family = table.family
    formula = table.norm_formula
    items = {
        "1": {
            "factors": [
                {"blade": _blade_to_json(b), "imaginary": im}
                for b, im in zip(family.blades, family.imaginary)
            ],
            "primitive": _mv_to_json(family.primitive),
        },
        "2": {
            "kind": table.ring.kind,
            "generators": [_blade_to_json(b) for b in table.ring.generating_blades],
            "elements": [_mv_to_json(e) for e in table.ring.elements],
        },
        "3": {
            "generators": [
                _blade_to_json(b) for b in table.basis.generating_blades
            ],
            "elements": [_mv_to_json(e) for e in table.basis.generators],
            "semisimple": table.basis.semisimple,
            "second_block": [_mv_to_json(e) for e in table.basis.second_block],
        },
        "4": [_matrix_to_json(m) for m in table.generator_matrices],
        "5": [
            {"label": label, "terms": _mv_to_json(value)}
            for label, value in zip(
                table.space.component_labels, table.space.component_values
            )
        ],
        "6": [_matrix_to_json(m) for m in table.component_matrices],
        "7": {
            "formula": {
                "sign": formula.sign,
                "involution": formula.involution,
                "conjugated": formula.conjugated,
                "sandwich": (
                    _blade_to_json(formula.sandwich)
                    if formula.sandwich is not None
                    else None
                ),
            },
            "rhs_normalization": "2^-k",
            "k": formula.log2scale,
        },
    }
    return {
        "signature": [table.sig.p, table.sig.q],
        "mode": table.mode,
        "classification": table.classification,
        "items": items,
    }


def _emit_text(table: SpinorTable) -> str:
    lines: List[str] = []
    sig = table.sig
    lines.append(f"Cl({sig.p},{sig.q})  mode={table.mode}  [{table.classification}]")
    factors = []
    for blade, imaginary in zip(table.family.blades, table.family.imaginary):
        unit = "i*" if imaginary else ""
        factors.append(f"(1 + {unit}{blade})/2")
    product = " ".join(factors) if factors else "1"
    lines.append(f"1. P1 = {product} = {multivector_str(table.family.primitive)}")
    ring_parts = ", ".join(
        f"{table.ring.unit_label(u)} = {multivector_str(e)}"
        for u, e in enumerate(table.ring.elements)
    )
    lines.append(f"2. K ~ {table.ring.kind}: {ring_parts}")
    basis_parts = [multivector_str(e) for e in table.basis.generators]
    if table.basis.second_block:
        basis_parts += [
            f"inv({multivector_str(e)})" for e in table.basis.second_block
        ]
    lines.append("3. S = { " + " ; ".join(basis_parts) + " }")
    for index, matrix in enumerate(table.generator_matrices, start=1):
        lines.append(f"4. rep(e{index}) = {matrix_str(matrix.entries)}")
    psi_terms = [
        f"s{i + 1}*({multivector_str(v)})"
        for i, v in enumerate(table.space.component_values)
    ]
    lines.append("5. Psi = " + " + ".join(psi_terms))
    hat_terms = [
        f"s{i + 1}*({matrix_str(m.entries)})"
        for i, m in enumerate(table.component_matrices)
    ]
    lines.append("6. mat(Psi) = " + " + ".join(hat_terms))
    size = table.space.size
    rhs = f"(1/2^{table.norm_formula.log2scale}) (|s1|^2 + ... + |s{size}|^2)"
    lines.append(f"7. {table.norm_formula.describe()} = {rhs}")
    return "\n".join(lines) + "\n"


def _latex_scalar(x: Scalar) -> str:
    s = scalar_str(x)
    return s.replace("q1", "\\mathbf{i}").replace("q2", "\\mathbf{j}").replace(
        "q3", "\\mathbf{k}"
    )


def _latex_mv(mv: Multivector) -> str:
    s = multivector_str(mv)
    out = []
    token = ""
    for ch in s:
        if ch == "e" :
            token = "e"
            out.append("e_{")
        elif token == "e" and ch.isdigit():
            out.append(ch)
        elif token == "e":
            out.append("}" + ch)
            token = ""
        else:
            out.append(ch)
    if token == "e":
        out.append("}")
    return "".join(out).replace("*", "\\,")


def _emit_latex(table: SpinorTable) -> str:
    sig = table.sig
    rows: List[str] = []
    rows.append("\\begin{tabular}{l}")
    rows.append(
        f"$Cl({sig.p},{sig.q})$ [{table.classification}] ({table.mode}) \\\\"
    )
    rows.append(f"$P_1 = {_latex_mv(table.family.primitive)}$ \\\\")
    ring = ",\\; ".join(
        f"{table.ring.unit_label(u)} = {_latex_mv(e)}"
        for u, e in enumerate(table.ring.elements)
    )
    rows.append(f"$K: {ring}$ \\\\")
    basis = ",\\; ".join(_latex_mv(e) for e in table.basis.combined)
    rows.append(f"$S: \\{{{basis}\\}}$ \\\\")
    for index, matrix in enumerate(table.generator_matrices, start=1):
        rows.append(
            f"$\\hat{{e}}_{{{index}}} = {matrix_str(matrix.entries)}$ \\\\"
        )
    psi = " + ".join(
        f"s_{{{i + 1}}}({_latex_mv(v)})"
        for i, v in enumerate(table.space.component_values)
    )
    rows.append(f"$\\Psi = {psi}$ \\\\")
    hat = " + ".join(
        f"s_{{{i + 1}}}({matrix_str(m.entries)})"
        for i, m in enumerate(table.component_matrices)
    )
    rows.append(f"$\\hat{{\\Psi}} = {hat}$ \\\\")
    rows.append(
        f"${table.norm_formula.describe()} = "
        f"2^{{-{table.norm_formula.log2scale}}}\\sum_i |s_i|^2$ \\\\"
    )
    rows.append("\\end{tabular}")
    return "\n".join(rows) + "\n"


def emit(table: SpinorTable, fmt: str) -> str:
    """Render a spinor table as "text", "json" or "latex"."""
    if fmt == "json":
        return json.dumps(table_to_json(table), ensure_ascii=False, indent=2) + "\n"
    if fmt == "text":
        return _emit_text(table)
    if fmt == "latex":
        return _emit_latex(table)
    raise ValueError(f"unknown format {fmt!r}; expected text, json or latex")
