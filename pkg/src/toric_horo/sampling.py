"""Seeded random rational data for checks and reports."""

from __future__ import annotations

import random
from fractions import Fraction


def random_rational(rng: random.Random, bound: int = 20, max_den: int = 10) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_qvec(rng: random.Random, n: int, bound: int = 20, max_den: int = 10, nonzero: bool = False) -> tuple:
    while True:
        v = tuple(random_rational(rng, bound, max_den) for _ in range(n))
        if not nonzero or any(v):
            return v


def random_qvecs(seed: int, count: int, n: int, **kw) -> list:
    rng = random.Random(seed)
    return [random_qvec(rng, n, **kw) for _ in range(count)]
