"""Cardinality sequences, greedy optimization per cardinality, vertex enumeration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import Infeasible, InvalidSequence, SizeLimitExceeded
from .limits import ENUMERATION_LIMIT, size_limit
from .matroid import Matroid, from_mask
from .rational import as_point


@dataclass(frozen=True)
class CardinalitySequence:
    """Strictly increasing feasible cardinalities c_1 < ... < c_m, with m >= 2."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) < 2:
            raise InvalidSequence("a cardinality sequence needs at least two members")
        if vals[0] < 0:
            raise InvalidSequence("cardinalities must be nonnegative")
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise InvalidSequence(f"{list(vals)} is not strictly increasing")

    @classmethod
    def parse(cls, text: str) -> "CardinalitySequence":
        try:
            return cls(tuple(int(tok) for tok in text.strip().strip("[]").split(",")))
        except ValueError as exc:
            raise InvalidSequence(f"cannot parse cardinality sequence {text!r}") from exc

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @property
    def first(self) -> int:
        return self.values[0]

    @property
    def last(self) -> int:
        return self.values[-1]

    def check_bound(self, m: Matroid) -> None:
        r = m.rank()
        if self.last > r:
            raise InvalidSequence(f"c_m = {self.last} exceeds r(E) = {r}")

    def gap(self, value) -> int | None:
        """1-based p with c_p < value < c_{p+1}, or None."""
        for p in range(1, len(self.values)):
            if self.values[p - 1] < value < self.values[p]:
                return p
        return None

    def extended(self) -> "CardinalitySequence":
        """Sequence with c_0 := 0 prepended (only meaningful when c_1 > 0)."""
        if self.first == 0:
            return self
        return CardinalitySequence((0,) + self.values)


def sizes_of(c) -> tuple[int, ...]:
    """Cardinalities of a sequence, or the single cardinality ``k`` when given an int."""
    if isinstance(c, int):
        if c < 0:
            raise InvalidSequence("cardinality must be nonnegative")
        return (c,)
    return tuple(c)


def weight(w: Sequence[Fraction], subset: Iterable[int]) -> Fraction:
    return sum((w[e] for e in subset), Fraction(0))


def greedy_fixed_cardinality(m: Matroid, w: Sequence, k: int) -> frozenset[int] | None:
    """Maximum-weight independent set of size exactly ``k``; None when k > r(E).

    Elements are scanned by weight descending, index ascending. Negative weights
    are still taken until the set reaches size ``k``.
    """
    w = as_point(w)
    if len(w) != m.n:
        raise ValueError("weight vector length must equal the ground set size")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > m.rank():
        return None
    order = sorted(range(m.n), key=lambda e: (-w[e], e))
    chosen = 0
    size = 0
    for e in order:
        if size == k:
            break
        if m._independent(chosen | (1 << e)):
            chosen |= 1 << e
            size += 1
    return frozenset(e for e in range(m.n) if chosen >> e & 1)


def optimize_chs(m: Matroid, w: Sequence, c: CardinalitySequence, strict: bool = True):
    """Best independent set whose size lies in ``c``; returns (subset, value).

    One greedy run per member of ``c``. Ties across cardinalities go to the
    smaller one. In non-strict mode members above r(E) are skipped.
    """
    w = as_point(w)
    if strict:
        c.check_bound(m)
    best = None
    for k in c:
        found = greedy_fixed_cardinality(m, w, k)
        if found is None:
            continue
        value = weight(w, found)
        if best is None or value > best[1]:
            best = (found, value)
    if best is None:
        raise Infeasible("no member of the cardinality sequence is attainable")
    return best


def enumerate_feasible_masks(m: Matroid, c, limit=None) -> list[int]:
    cap = size_limit(ENUMERATION_LIMIT, limit)
    if m.n > cap:
        raise SizeLimitExceeded(m.n, cap, "ground set")
    out = []
    for k in sizes_of(c):
        for combo in itertools.combinations(range(m.n), k):
            mask = sum(1 << e for e in combo)
            if m._independent(mask):
                out.append(mask)
    return out


def enumerate_feasible(m: Matroid, c, limit=None) -> list[frozenset[int]]:
    """Independent sets whose size lies in ``c`` (the vertices of P^c).

    Ordered by size, then lexicographically. ``c`` may be a single int.
    """
    return [from_mask(mask) for mask in enumerate_feasible_masks(m, c, limit)]
