"""Shared fixtures: cached table builds (build_table is pure, so one
build per (p, q, mode) serves the whole session)."""

from __future__ import annotations

import functools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from spintab.core import Signature
from spintab.table import build_table


@functools.lru_cache(maxsize=None)
def get_table(p: int, q: int, mode: str):
    return build_table(Signature(p, q), mode)


def all_signatures(max_n: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        for p in range(n + 1):
            yield p, n - p
