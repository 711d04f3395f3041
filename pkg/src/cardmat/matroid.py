"""Matroids on ground sets {0, ..., n-1} given by independence oracles.

Subsets are accepted as any iterable of element indices and returned as
frozensets. Internally every subset is an int bitmask; the rank cache of an
instance is keyed by that mask.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Sequence

from .errors import AxiomViolation, LoopFound, NotDownwardClosed, SizeLimitExceeded
from .limits import BIPARTITION_LIMIT, EXHAUSTIVE_AXIOM_LIMIT, size_limit

MAX_GROUND = 64


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def submasks(mask: int):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def bipartitions(mask: int):
    """Unordered proper splits (F1, F2) of ``mask``; F1 holds the lowest element."""
    low = mask & -mask
    rest = mask ^ low
    for sub in submasks(rest):
        part = low | sub
        if part != mask:
            yield part, mask ^ part


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, v):
        parent = self.parent
        parent.setdefault(v, v)
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(self, u, v) -> bool:
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        self.parent[ru] = rv
        return True


class Matroid:
    """Base class. Subclasses implement ``_independent(mask)``."""

    kind = "abstract"

    def __init__(self, n: int, labels: Sequence[str] | None = None):
        if n < 1:
            raise ValueError("ground set must have at least one element")
        if n > MAX_GROUND:
            raise ValueError(f"ground sets are capped at {MAX_GROUND} elements")
        if labels is not None:
            labels = tuple(str(lab) for lab in labels)
            if len(labels) != n or len(set(labels)) != n:
                raise ValueError("labels must be distinct and one per element")
        self.n = n
        self.labels = labels
        self.full = (1 << n) - 1
        self._rank_cache: dict[int, int] = {}

    # -- mask level -------------------------------------------------------

    def mask(self, subset: Iterable[int]) -> int:
        if isinstance(subset, int):
            raise TypeError("subsets are iterables of element indices")
        m = 0
        for e in subset:
            if not 0 <= e < self.n:
                raise ValueError(f"element {e} is not in the ground set of size {self.n}")
            m |= 1 << e
        return m

    def _independent(self, mask: int) -> bool:
        raise NotImplementedError

    def _compute_rank(self, mask: int) -> int:
        basis = 0
        size = 0
        for e in bits(mask):
            if self._independent(basis | (1 << e)):
                basis |= 1 << e
                size += 1
        return size

    def _rank(self, mask: int) -> int:
        # a racing writer stores the same value, so no lock is needed
        r = self._rank_cache.get(mask)
        if r is None:
            r = self._compute_rank(mask)
            self._rank_cache[mask] = r
        return r

    def _closure(self, mask: int) -> int:
        r = self._rank(mask)
        out = mask
        for e in range(self.n):
            bit = 1 << e
            if not mask & bit and self._rank(mask | bit) == r:
                out |= bit
        return out

    def _is_inseparable(self, mask: int, limit=None) -> bool:
        size = mask.bit_count()
        cap = size_limit(BIPARTITION_LIMIT, limit)
        if size > cap:
            raise SizeLimitExceeded(size, cap, "bipartition set")
        r = self._rank(mask)
        return all(self._rank(a) + self._rank(b) > r for a, b in bipartitions(mask))

    def _k_rank(self, mask: int, k: int) -> int:
        return k - self._rank(self.full ^ mask)

    def _is_k_inseparable(self, mask: int, k: int, limit=None) -> bool:
        size = mask.bit_count()
        cap = size_limit(BIPARTITION_LIMIT, limit)
        if size > cap:
            raise SizeLimitExceeded(size, cap, "bipartition set")
        total = self._k_rank(mask, k)
        return all(self._k_rank(a, k) + self._k_rank(b, k) != total for a, b in bipartitions(mask))

    # -- public API -------------------------------------------------------

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def is_independent(self, subset: Iterable[int]) -> bool:
        return self._independent(self.mask(subset))

    def rank(self, subset: Iterable[int] | None = None) -> int:
        """Rank of ``subset``; the whole ground set when omitted."""
        return self._rank(self.full if subset is None else self.mask(subset))

    def closure(self, subset: Iterable[int]) -> frozenset[int]:
        return from_mask(self._closure(self.mask(subset)))

    def is_closed(self, subset: Iterable[int]) -> bool:
        m = self.mask(subset)
        return self._closure(m) == m

    def is_inseparable(self, subset: Iterable[int], limit=None) -> bool:
        """No proper split F1, F2 of the set has r(F1) + r(F2) <= r(F)."""
        m = self.mask(subset)
        if not m:
            raise ValueError("inseparability is defined for nonempty sets")
        return self._is_inseparable(m, limit)

    def k_rank(self, subset: Iterable[int], k: int) -> int:
        """k - r(E \\ F). May be negative."""
        return self._k_rank(self.mask(subset), k)

    def is_k_inseparable(self, subset: Iterable[int], k: int, limit=None) -> bool:
        m = self.mask(subset)
        if not m:
            raise ValueError("k-inseparability is defined for nonempty sets")
        return self._is_k_inseparable(m, k, limit)

    def truncate(self, k: int) -> "Truncation":
        return Truncation(self, k)

    def restrict(self, subset: Iterable[int]) -> "Restriction":
        return Restriction(self, subset)

    def validate(self) -> None:
        """Raise LoopFound / AxiomViolation / NotDownwardClosed, else return None."""
        for e in range(self.n):
            if not self._independent(1 << e):
                raise LoopFound(e)

    def to_json(self) -> dict:
        raise NotImplementedError(f"{self.kind} matroids have no JSON form")

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n})"


class Free(Matroid):
    """Every subset is independent."""

    kind = "free"

    def _independent(self, mask):
        return True

    def _compute_rank(self, mask):
        return mask.bit_count()

    def to_json(self):
        return {"kind": "free", "n": self.n}


class Uniform(Matroid):
    kind = "uniform"

    def __init__(self, n: int, k: int, labels=None):
        super().__init__(n, labels)
        if k < 1:
            raise LoopFound(0)
        self.k = k

    def _independent(self, mask):
        return mask.bit_count() <= self.k

    def _compute_rank(self, mask):
        return min(mask.bit_count(), self.k)

    def to_json(self):
        return {"kind": "uniform", "n": self.n, "k": self.k}

    def __repr__(self):
        return f"Uniform({self.n}, {self.k})"


class Graphic(Matroid):
    """Cycle matroid of a multigraph; elements are edges, independent sets are forests."""

    kind = "graphic"

    def __init__(self, vertices: int, edges: Sequence[Sequence[int]], labels=None):
        edges = [tuple(e) for e in edges]
        for u, v in edges:
            if not (0 <= u < vertices and 0 <= v < vertices):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{vertices - 1}")
        if labels is None:
            labels = [f"{u}{v}" if vertices <= 10 else f"{u}-{v}" for u, v in edges]
            if len(set(labels)) != len(labels):
                labels = None
        super().__init__(len(edges), labels)
        self.vertices = vertices
        self.edges = edges
        self.validate()

    def _forest_size(self, mask, stop_on_cycle):
        uf = _UnionFind()
        size = 0
        for e in bits(mask):
            u, v = self.edges[e]
            if uf.union(u, v):
                size += 1
            elif stop_on_cycle:
                return -1
        return size

    def _independent(self, mask):
        return self._forest_size(mask, True) >= 0

    def _compute_rank(self, mask):
        return self._forest_size(mask, False)

    def to_json(self):
        return {"kind": "graphic", "vertices": self.vertices, "edges": [list(e) for e in self.edges]}

    def __repr__(self):
        return f"Graphic(vertices={self.vertices}, edges={self.edges})"


class Partition(Matroid):
    """At most ``capacities[i]`` elements from block ``i``. Blocks partition the ground set."""

    kind = "partition"

    def __init__(self, blocks: Sequence[Sequence[int]], capacities: Sequence[int], labels=None):
        blocks = [tuple(b) for b in blocks]
        if len(blocks) != len(capacities):
            raise ValueError("one capacity per block is required")
        elements = sorted(e for b in blocks for e in b)
        if elements != list(range(len(elements))):
            raise ValueError("blocks must partition 0..n-1")
        super().__init__(len(elements), labels)
        self.blocks = blocks
        self.capacities = tuple(int(c) for c in capacities)
        self._block_masks = [sum(1 << e for e in b) for b in blocks]
        self.validate()

    def _independent(self, mask):
        return all((mask & bm).bit_count() <= cap for bm, cap in zip(self._block_masks, self.capacities))

    def _compute_rank(self, mask):
        return sum(min((mask & bm).bit_count(), cap) for bm, cap in zip(self._block_masks, self.capacities))

    def to_json(self):
        return {"kind": "partition", "blocks": [list(b) for b in self.blocks], "capacities": list(self.capacities)}


class LinearGF2(Matroid):
    """Column matroid of a 0/1 matrix over GF(2). Columns are given as bit strings."""

    kind = "linear_gf2"

    def __init__(self, columns: Sequence[str], labels=None):
        self.columns = tuple(columns)
        if len({len(c) for c in self.columns}) > 1:
            raise ValueError("all columns must have the same length")
        self._vectors = [int(c, 2) for c in self.columns]
        super().__init__(len(self.columns), labels)
        self.validate()

    def _span_size(self, mask, stop_on_dependence):
        basis: dict[int, int] = {}
        for e in bits(mask):
            v = self._vectors[e]
            while v:
                top = v.bit_length() - 1
                if top not in basis:
                    basis[top] = v
                    break
                v ^= basis[top]
            else:
                if stop_on_dependence:
                    return -1
        return len(basis)

    def _independent(self, mask):
        return self._span_size(mask, True) >= 0

    def _compute_rank(self, mask):
        return self._span_size(mask, False)

    def to_json(self):
        return {"kind": "linear_gf2", "columns": list(self.columns)}


class Explicit(Matroid):
    """Matroid stored by its maximal independent sets (its bases)."""

    kind = "explicit"

    def __init__(self, n: int, maximal_independent: Iterable[Iterable[int]], labels=None, check=True):
        super().__init__(n, labels)
        masks = {self.mask(s) for s in maximal_independent}
        # keep only inclusion-maximal members
        self._maximal = sorted(m for m in masks if not any(o != m and o & m == m for o in masks))
        if not self._maximal:
            self._maximal = [0]
        if check:
            self.validate()

    @classmethod
    def from_family(cls, n: int, family: Iterable[Iterable[int]], labels=None) -> "Explicit":
        """Build from a full independence family; checks downward closure first."""
        probe = Matroid(n)
        masks = {probe.mask(s) for s in family}
        if 0 not in masks:
            raise NotDownwardClosed(frozenset())
        for m in sorted(masks, key=lambda x: (x.bit_count(), x)):
            for e in bits(m):
                if m ^ (1 << e) not in masks:
                    raise NotDownwardClosed(from_mask(m ^ (1 << e)))
        return cls(n, [bits(m) for m in masks], labels)

    @property
    def maximal_independent(self) -> list[frozenset[int]]:
        return [from_mask(m) for m in self._maximal]

    def _independent(self, mask):
        return any(mask & b == mask for b in self._maximal)

    def _compute_rank(self, mask):
        # valid once the exchange axiom holds: every independent subset of F extends inside some basis
        return max((mask & b).bit_count() for b in self._maximal)

    def _family(self) -> set[int]:
        fam: set[int] = set()
        for b in self._maximal:
            fam.update(submasks(b))
        return fam

    def validate(self, seed: int = 0, samples: int = 2000) -> None:
        super().validate()
        sizes = {b.bit_count() for b in self._maximal}
        if len(sizes) > 1:
            small = min(self._maximal, key=int.bit_count)
            large = max(self._maximal, key=int.bit_count)
            raise AxiomViolation(from_mask(small | large), sorted(sizes))
        if self.n <= EXHAUSTIVE_AXIOM_LIMIT:
            self._check_exchange_exhaustive()
        else:
            self._check_exchange_sampled(seed, samples)

    def _augment_ok(self, fam, small, large):
        return any(small | (1 << e) in fam for e in bits(large & ~small))

    def _check_exchange_exhaustive(self):
        fam = self._family()
        by_size: dict[int, list[int]] = {}
        for m in fam:
            by_size.setdefault(m.bit_count(), []).append(m)
        for s in sorted(by_size):
            for small in sorted(by_size[s]):
                ext = 0
                for e in range(self.n):
                    if not small >> e & 1 and small | (1 << e) in fam:
                        ext |= 1 << e
                for large in sorted(by_size.get(s + 1, ())):
                    if not large & ~small & ext:
                        # small is a basis of small|large, large extends to a bigger one
                        raise AxiomViolation(from_mask(small | large), [s, s + 1])

    def _check_exchange_sampled(self, seed, samples):
        rng = random.Random(seed)
        for _ in range(samples):
            b1, b2 = rng.choice(self._maximal), rng.choice(self._maximal)
            small = sum(1 << e for e in bits(b1) if rng.random() < 0.5)
            pool = bits(b2)
            size = small.bit_count() + 1
            if size > len(pool):
                continue
            large = sum(1 << e for e in rng.sample(pool, size))
            if not any(self._independent(small | (1 << e)) for e in bits(large & ~small)):
                raise AxiomViolation(from_mask(small | large), [size - 1, size])

    def to_json(self):
        return {"kind": "explicit", "n": self.n, "maximal_independent": [bits(m) for m in self._maximal]}


class Truncation(Matroid):
    """Independent sets of ``base`` with at most ``k`` elements."""

    kind = "truncation"

    def __init__(self, base: Matroid, k: int):
        if k < 0:
            raise ValueError("truncation level must be nonnegative")
        super().__init__(base.n, base.labels)
        self.base = base
        self.k = k

    def _independent(self, mask):
        return mask.bit_count() <= self.k and self.base._independent(mask)

    def _compute_rank(self, mask):
        return min(self.base._rank(mask), self.k)

    def to_json(self):
        return {"kind": "truncation", "k": self.k, "base": self.base.to_json()}

    def __repr__(self):
        return f"Truncation({self.base!r}, {self.k})"


class Restriction(Matroid):
    """``base`` restricted to ``subset``, re-indexed as 0..|subset|-1 in ascending order."""

    kind = "restriction"

    def __init__(self, base: Matroid, subset: Iterable[int]):
        elements = sorted(set(subset))
        if not elements:
            raise ValueError("cannot restrict to the empty set")
        base.mask(elements)
        labels = [base.labels[e] for e in elements] if base.labels else None
        super().__init__(len(elements), labels)
        self.base = base
        self.elements = tuple(elements)

    def to_base(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= 1 << self.elements[i]
        return out

    def _independent(self, mask):
        return self.base._independent(self.to_base(mask))

    def _compute_rank(self, mask):
        return self.base._rank(self.to_base(mask))

    def to_json(self):
        return {"kind": "restriction", "subset": list(self.elements), "base": self.base.to_json()}

    def __repr__(self):
        return f"Restriction({self.base!r}, {list(self.elements)})"


def from_json(doc: dict) -> Matroid:
    """Build a matroid from its JSON description (see README for the schema)."""
    kind = doc.get("kind")
    labels = doc.get("labels")
    if kind == "uniform":
        return Uniform(int(doc["n"]), int(doc["k"]), labels)
    if kind == "free":
        return Free(int(doc["n"]), labels)
    if kind == "graphic":
        return Graphic(int(doc["vertices"]), doc["edges"], labels)
    if kind == "partition":
        return Partition(doc["blocks"], doc["capacities"], labels)
    if kind == "linear_gf2":
        return LinearGF2(doc["columns"], labels)
    if kind == "explicit":
        sets = doc["maximal_independent"]
        n = doc.get("n")
        if n is None:
            n = 1 + max((e for s in sets for e in s), default=0)
        return Explicit(int(n), sets, labels)
    if kind == "truncation":
        return Truncation(from_json(doc["base"]), int(doc["k"]))
    if kind == "restriction":
        return Restriction(from_json(doc["base"]), doc["subset"])
    raise ValueError(f"unknown matroid kind {kind!r}")


def complete_graph(v: int) -> Graphic:
    return Graphic(v, list(itertools.combinations(range(v), 2)))
