"""Seeded random rational points for separation experiments."""

from __future__ import annotations

import random
from fractions import Fraction

from .matroid import Matroid, bits


def random_nonneg_point(n: int, rng: random.Random, max_denominator: int = 8,
                        max_value: int = 2) -> tuple[Fraction, ...]:
    """Independent coordinates p/q with 1 <= q <= max_denominator, 0 <= p/q <= max_value."""
    out = []
    for _ in range(n):
        q = rng.randint(1, max_denominator)
        out.append(Fraction(rng.randint(0, max_value * q), q))
    return tuple(out)


def random_independent_set(m: Matroid, rng: random.Random, size: int | None = None) -> int:
    """Mask of a random independent set; a random-order greedy run stopped at ``size``."""
    order = list(range(m.n))
    rng.shuffle(order)
    if size is None:
        size = rng.randint(0, m.rank())
    mask = 0
    for e in order:
        if mask.bit_count() >= size:
            break
        if m._independent(mask | 1 << e):
            mask |= 1 << e
    return mask


def random_polytope_point(m: Matroid, rng: random.Random, members: int = 4,
                          max_weight: int = 6) -> tuple[Fraction, ...]:
    """A random convex combination of independent sets, so every rank inequality holds."""
    sets = [random_independent_set(m, rng) for _ in range(members)]
    weights = [rng.randint(1, max_weight) for _ in sets]
    total = sum(weights)
    x = [Fraction(0)] * m.n
    for s, w in zip(sets, weights):
        for e in bits(s):
            x[e] += Fraction(w, total)
    return tuple(x)
