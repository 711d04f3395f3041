"""Separation of points from the matroid polytope and from P^c.

Two engines compute max_F x(F) - r(F): an exhaustive reference and an
augmenting-path engine that maintains y <= x as a convex combination of
independent sets and returns a min-max certificate

    max {y(E) : y in P_M, y <= x} = min {r(F) + x(E \\ F) : F subset of E}.

Forbidden set separation rescales x by delta = (x(E) - c_p) / (c_{p+1} - c_p)
and runs the rank engine on x / delta.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cardinality import CardinalitySequence
from .errors import NegativeCoordinate, RankInequalityViolated, SizeLimitExceeded
from .limits import BRUTEFORCE_LIMIT, size_limit
from .matroid import Free, Matroid, bits, from_mask
from .polyhedra import (LinearInequality, _fs_from_rank, build_rank_ineq, lower_bound, nonneg,
                        upper_bound)
from .rational import as_point, fmt, fmt_all

INSIDE = "inside"
VIOLATED = "violated"


@dataclass
class MinMaxCertificate:
    y: tuple[Fraction, ...]
    decomposition: list[tuple[Fraction, frozenset[int]]]
    f_star: frozenset[int]
    value: Fraction

    def check(self, m: Matroid, x: Sequence) -> None:
        """Raise ValueError naming the first invariant that fails."""
        x = as_point(x)
        n = m.n
        if sum((lam for lam, _ in self.decomposition), Fraction(0)) != 1:
            raise ValueError("decomposition weights do not sum to 1")
        if any(lam <= 0 for lam, _ in self.decomposition):
            raise ValueError("decomposition weight is not positive")
        if not all(m.is_independent(s) for _, s in self.decomposition):
            raise ValueError("decomposition member is dependent")
        combo = [Fraction(0)] * n
        for lam, s in self.decomposition:
            for e in s:
                combo[e] += lam
        if tuple(combo) != tuple(self.y):
            raise ValueError("y differs from its decomposition")
        if any(a > b for a, b in zip(self.y, x)):
            raise ValueError("y exceeds x")
        if sum(self.y, Fraction(0)) != self.value:
            raise ValueError("value differs from y(E)")
        outside = sum((x[e] for e in range(n) if e not in self.f_star), Fraction(0))
        if m.rank(self.f_star) + outside != self.value:
            raise ValueError("r(F*) + x(E \\ F*) differs from y(E)")
        if sum((self.y[e] for e in self.f_star), Fraction(0)) != m.rank(self.f_star):
            raise ValueError("y(F*) differs from r(F*)")
        if any(self.y[e] != x[e] for e in range(n) if e not in self.f_star):
            raise ValueError("y differs from x outside F*")

    def to_json(self) -> dict:
        return {"y": fmt_all(self.y),
                "decomposition": [[fmt(lam), sorted(s)] for lam, s in self.decomposition],
                "f_star": sorted(self.f_star), "value": fmt(self.value)}


@dataclass
class SeparationOutcome:
    status: str
    cut: LinearInequality | None = None
    witness: frozenset[int] | None = None
    violation: Fraction | None = None
    certificate: MinMaxCertificate | None = field(default=None, repr=False)
    delta: Fraction | None = None

    @property
    def violated(self) -> bool:
        return self.status == VIOLATED

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "cut": self.cut.to_json() if self.cut is not None else None,
            "witness": sorted(self.witness) if self.witness is not None else None,
            "violation": fmt(self.violation) if self.violation is not None else None,
            "delta": fmt(self.delta) if self.delta is not None else None,
        }


def _check_nonneg(x):
    for e, v in enumerate(x):
        if v < 0:
            raise NegativeCoordinate(e)


def _lex_key(mask: int):
    return (mask.bit_count(), bits(mask))


def separate_rank_bruteforce(m: Matroid, x: Sequence, limit=None) -> tuple[frozenset[int], Fraction]:
    """Exhaustive argmax of x(F) - r(F); ties go to the smallest, then lexicographically first F."""
    x = as_point(x)
    _check_nonneg(x)
    cap = size_limit(BRUTEFORCE_LIMIT, limit)
    if m.n > cap:
        raise SizeLimitExceeded(m.n, cap, "ground set")
    best_mask, best = 0, Fraction(0)
    for mask in range(1, m.full + 1):
        value = sum((x[e] for e in bits(mask)), Fraction(0)) - m._rank(mask)
        if value > best or (value == best and _lex_key(mask) < _lex_key(best_mask)):
            best_mask, best = mask, value
    return from_mask(best_mask), best


def separate_rank_augpath(m: Matroid, x: Sequence, max_augmentations: int | None = None) -> MinMaxCertificate:
    """Maximize y(E) over y in P_M with y <= x by shortest augmenting paths.

    Arcs u -> v (label i) mean I_i - v + u is independent; sinks are elements
    that some I_i can absorb outright; sources have y_e < x_e. Breadth-first
    search gives paths without shortcuts, so the swaps along a path keep every
    touched member independent. Without a path, the set reachable from the
    sources is a minimizer F* of r(F) + x(E \\ F).
    """
    x = as_point(x)
    _check_nonneg(x)
    n = m.n
    if len(x) != n:
        raise ValueError("point length must equal the ground set size")
    indep = m._independent
    decomp: list[list] = [[Fraction(1), 0]]
    y = [Fraction(0)] * n
    cap = max_augmentations if max_augmentations is not None else 50 * (n + 1) ** 3
    reached: dict[int, tuple[int, int] | None] = {}
    for _ in range(cap):
        sources = [e for e in range(n) if y[e] < x[e]]
        reached = {s: None for s in sources}
        queue = deque(sources)
        found = None
        while queue:
            u = queue.popleft()
            ubit = 1 << u
            sink = next((i for i, (_, s) in enumerate(decomp) if not s & ubit and indep(s | ubit)), None)
            if sink is not None:
                found = (u, sink)
                break
            for i, (_, s) in enumerate(decomp):
                if s & ubit:
                    continue
                for v in bits(s):
                    if v not in reached and indep((s ^ (1 << v)) | ubit):
                        reached[v] = (u, i)
                        queue.append(v)
        if found is None:
            break
        _augment(decomp, y, x, reached, *found)
        if len(decomp) > 2 * (n + 1):
            _caratheodory(decomp, n)
    else:
        raise RuntimeError("augmenting path engine did not converge")
    f_star = from_mask(sum(1 << e for e in reached))
    decomposition = [(lam, from_mask(s)) for lam, s in sorted(decomp, key=lambda d: _lex_key(d[1]))]
    return MinMaxCertificate(tuple(y), decomposition, f_star, sum(y, Fraction(0)))


def _augment(decomp, y, x, reached, end, sink_label):
    # walk back from the sink: collect per-member insertions and removals
    changes: dict[int, list[int]] = {sink_label: [1 << end, 0]}
    v = end
    while reached[v] is not None:
        u, i = reached[v]
        ins_rem = changes.setdefault(i, [0, 0])
        ins_rem[0] |= 1 << u
        ins_rem[1] |= 1 << v
        v = u
    source = v
    eps = x[source] - y[source]
    for i in changes:
        eps = min(eps, decomp[i][0])
    for i, (ins, rem) in changes.items():
        decomp[i][0] -= eps
        decomp.append([eps, (decomp[i][1] | ins) & ~rem])
    y[source] += eps
    merged: dict[int, Fraction] = {}
    for lam, s in decomp:
        if lam:
            merged[s] = merged.get(s, Fraction(0)) + lam
    decomp[:] = [[lam, s] for s, lam in merged.items()]


def _caratheodory(decomp, n):
    """Drop members until at most n + 1 remain, keeping the combination unchanged."""
    while len(decomp) > n + 1:
        mu = _affine_dependence([s for _, s in decomp], n)
        ratios = [(decomp[i][0] / mu[i], i) for i in range(len(decomp)) if mu[i] > 0]
        t = min(ratios)[0]
        for i in range(len(decomp)):
            decomp[i][0] -= t * mu[i]
        decomp[:] = [d for d in decomp if d[0] > 0]


def _affine_dependence(masks, n):
    """Nonzero mu with sum mu_i = 0 and sum mu_i chi_i = 0 (needs len(masks) > n + 1)."""
    k = len(masks)
    rows = [[Fraction(1)] * k] + [[Fraction(s >> e & 1) for s in masks] for e in range(n)]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = next(col for col in range(k) if col not in pivots)
    mu = [Fraction(0)] * k
    mu[free] = Fraction(1)
    for i, col in enumerate(pivots):
        mu[col] = -rows[i][free]
    return mu


def _rank_excess(m: Matroid, x) -> tuple[frozenset[int], Fraction, MinMaxCertificate]:
    cert = separate_rank_augpath(m, x)
    return cert.f_star, sum(x, Fraction(0)) - cert.value, cert


def separate_fs(m: Matroid, x: Sequence, c: CardinalitySequence, debug: bool = False,
                extended: bool = False, fast_path: bool = True) -> SeparationOutcome:
    """Find a violated forbidden set inequality, assuming x satisfies all rank inequalities.

    Only x(E) strictly inside a gap (c_p, c_{p+1}) can violate one. Free
    matroids use the top-k shortcut; everything else goes through the rank
    engine on x / delta. ``debug`` verifies the rank-inequality precondition.
    """
    x = as_point(x)
    _check_nonneg(x)
    if debug:
        f, excess, _ = _rank_excess(m, x)
        if excess > 0:
            raise RankInequalityViolated(f, excess)
    seq = c.extended() if extended and c.first > 0 else c
    offset = 1 if seq is not c else 0
    total = sum(x, Fraction(0))
    p = seq.gap(total)
    if p is None:
        return SeparationOutcome(INSIDE)
    c_p, c_next = seq[p - 1], seq[p]
    delta = (total - c_p) / (c_next - c_p)
    if fast_path and isinstance(m, Free):
        order = sorted(range(m.n), key=lambda e: (-x[e], e))
        best = None
        for k in range(c_p + 1, c_next):
            mask = sum(1 << e for e in order[:k])
            cut = _fs_from_rank(m.n, mask, k, c_p, c_next, p - offset)
            amount = cut.violation(x)
            if amount > 0 and (best is None or amount > best[1]
                               or (amount == best[1] and _lex_key(mask) < _lex_key(best[0]))):
                best = (mask, amount, cut)
        if best is None:
            return SeparationOutcome(INSIDE, delta=delta)
        mask, amount, cut = best
        return SeparationOutcome(VIOLATED, cut, from_mask(mask), amount, delta=delta)
    scaled = tuple(v / delta for v in x)
    f, excess, _ = _rank_excess(m, scaled)
    # x/delta (F) - r(F) > c_p (1 - delta) / delta  <=>  FS_F violated by x
    if excess > c_p * (1 - delta) / delta:
        mask = m.mask(f)
        cut = _fs_from_rank(m.n, mask, m._rank(mask), c_p, c_next, p - offset)
        return SeparationOutcome(VIOLATED, cut, f, cut.violation(x), delta=delta)
    return SeparationOutcome(INSIDE, delta=delta)


def separate_point(m: Matroid, x: Sequence, c: CardinalitySequence) -> SeparationOutcome:
    """Full separation from P^c: nonnegativity, x(E) >= c_1, x(E) <= c_m, rank, then FS."""
    x = as_point(x)
    n = m.n
    for e, v in enumerate(x):
        if v < 0:
            return SeparationOutcome(VIOLATED, nonneg(n, e), frozenset({e}), -v)
    total = sum(x, Fraction(0))
    if total < c.first:
        return SeparationOutcome(VIOLATED, lower_bound(n, c.first), m.ground, c.first - total)
    if total > c.last:
        return SeparationOutcome(VIOLATED, upper_bound(n, c.last), m.ground, total - c.last)
    f, excess, cert = _rank_excess(m, x)
    if excess > 0:
        return SeparationOutcome(VIOLATED, build_rank_ineq(m, f), f, excess, cert)
    outcome = separate_fs(m, x, c)
    outcome.certificate = cert
    return outcome
