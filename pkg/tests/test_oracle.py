"""The optimized blade-product sign against a brute-force transposition
counting oracle: exhaustive for n <= 6, randomized for n = 8."""

from __future__ import annotations

import itertools
import random

import pytest

from spintab.core import Blade, Signature, basis_blades, blade_product

from oracle import oracle_blade_product


def assert_matches(a: Blade, b: Blade, sig: Signature) -> None:
    result, sign = blade_product(a, b, sig)
    oracle_indices, oracle_sign = oracle_blade_product(a.indices, b.indices, sig.p)
    assert result.indices == oracle_indices, f"{sig}: {a} * {b} blade mismatch"
    assert sign == oracle_sign, f"{sig}: {a} * {b} sign mismatch"


@pytest.mark.parametrize("n", range(1, 7))
def test_exhaustive_up_to_n6(n):
    for p in range(n + 1):
        sig = Signature(p, n - p)
        blades = basis_blades(sig)
        for a, b in itertools.product(blades, blades):
            assert_matches(a, b, sig)


def test_random_pairs_n8():
    rng = random.Random(20240)
    for _ in range(10_000):
        p = rng.randint(0, 8)
        sig = Signature(p, 8 - p)
        a = Blade(rng.randrange(1 << 8))
        b = Blade(rng.randrange(1 << 8))
        assert_matches(a, b, sig)
