"""Independent brute-force oracle for blade products.

Deliberately naive: represents a blade as its list of generator indices,
concatenates the two lists, bubble-sorts the concatenation while counting
adjacent transpositions, and contracts equal adjacent indices against the
metric.  Used to cross-check the optimized bitmask sign computation.
"""

from __future__ import annotations

from typing import List, Tuple


def oracle_blade_product(
    a_indices: Tuple[int, ...], b_indices: Tuple[int, ...], p: int
) -> Tuple[Tuple[int, ...], int]:
    """Returns (sorted surviving indices, sign) of ``e_a e_b`` in Cl(p,q)."""
    symbols: List[int] = list(a_indices) + list(b_indices)
    sign = 1

    # Bubble sort, counting transpositions of distinct neighbours.
    changed = True
    while changed:
        changed = False
        for i in range(len(symbols) - 1):
            if symbols[i] > symbols[i + 1]:
                symbols[i], symbols[i + 1] = symbols[i + 1], symbols[i]
                sign = -sign
                changed = True

    # Contract equal adjacent generators against the metric.
    out: List[int] = []
    i = 0
    while i < len(symbols):
        if i + 1 < len(symbols) and symbols[i] == symbols[i + 1]:
            if symbols[i] > p:
                sign = -sign
            i += 2
        else:
            out.append(symbols[i])
            i += 1
    return tuple(out), sign
