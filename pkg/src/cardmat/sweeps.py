"""Exhaustive comparisons of the facet characterizations against the enumeration oracle.

Each sweep walks every subset F of a small instance and returns the list of
disagreements. An empty list means the characterization and the oracle agree
everywhere on that instance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cardinality import CardinalitySequence, enumerate_feasible_masks
from .errors import FeasibleRank
from .matroid import Matroid, bits
from .polyhedra import (_Echelon, build_fs, build_rank_ineq, facet_oracle, fs_facet_verdict,
                        polytope_dimension, rank_facet_verdict, single_k_predicates)


@dataclass(frozen=True)
class Discrepancy:
    check: str  # which statement disagreed, e.g. "rank-facet" or "lemma-k-rank"
    k: int | None
    subset: tuple[int, ...]
    predicted: bool
    observed: bool

    def to_json(self) -> dict:
        return {"check": self.check, "k": self.k, "subset": list(self.subset),
                "predicted": self.predicted, "observed": self.observed}


def _proper_nonempty(m: Matroid):
    return range(1, m.full)


def rank_and_fs_sweep(m: Matroid, c: CardinalitySequence) -> list[Discrepancy]:
    """rank_facet_verdict and fs_facet_verdict against facet_oracle, for every F."""
    out = []
    for mask in range(1, m.full + 1):
        f = bits(mask)
        predicted = bool(rank_facet_verdict(m, f, c))
        observed = facet_oracle(m, c, build_rank_ineq(m, f)).is_facet
        if predicted != observed:
            out.append(Discrepancy("rank-facet", None, tuple(f), predicted, observed))
        try:
            ineq = build_fs(m, f, c)
        except FeasibleRank:
            continue
        predicted = bool(fs_facet_verdict(m, f, c))
        observed = facet_oracle(m, c, ineq).is_facet
        if predicted != observed:
            out.append(Discrepancy("fs-facet", None, tuple(f), predicted, observed))
    return out


def dimension_check(m: Matroid, c: CardinalitySequence) -> Discrepancy | None:
    """P^c is full-dimensional unless c = (0, r(E)) and E is separable."""
    predicted = not (tuple(c) == (0, m.rank()) and not m._is_inseparable(m.full))
    observed = polytope_dimension(m, c) == m.n
    if predicted != observed:
        return Discrepancy("full-dimension", None, tuple(c), predicted, observed)
    return None


def single_k_sweep(m: Matroid) -> list[Discrepancy]:
    """Dimension and rank-facet predictions for P^(k), every k in 1..r(E) and every F."""
    out = []
    for k in range(1, m.rank() + 1):
        verdict = single_k_predicates(m, None, k)
        observed = polytope_dimension(m, k) == m.n - 1
        if verdict.dim_full != observed:
            out.append(Discrepancy("single-k-dimension", k, (), verdict.dim_full, observed))
        if not verdict.dim_full:
            continue
        for mask in _proper_nonempty(m):
            f = bits(mask)
            predicted = single_k_predicates(m, f, k).facet
            observed = facet_oracle(m, k, build_rank_ineq(m, f)).is_facet
            if predicted != observed:
                out.append(Discrepancy("single-k-rank-facet", k, tuple(f), predicted, observed))
    return out


def lemma_sweep(m: Matroid) -> list[Discrepancy]:
    """The truncation and k-rank lemmas, every k in 1..r(E) and every F.

    lemma-truncation: E is inseparable in the k-truncation for 0 < k < r(E).
    lemma-k-inseparable: E\\F closed with r(E\\F) < k < r(E) makes F
    k-inseparable in the truncation.
    lemma-k-rank: the tight size-k vertices restricted to F have rank |F| iff
    r^k(F) >= 1, E\\F is closed, and F is k-inseparable or k < r(E).
    """
    out = []
    r_e = m.rank()
    for k in range(1, r_e + 1):
        verts = enumerate_feasible_masks(m, k)
        trunc = m.truncate(k) if k < r_e else None
        if trunc is not None and not trunc._is_inseparable(trunc.full):
            out.append(Discrepancy("lemma-truncation", k, tuple(range(m.n)), True, False))
        for mask in range(1, m.full + 1):
            comp = m.full ^ mask
            rk = m._k_rank(mask, k)
            f = bits(mask)
            ech = _Echelon()
            for v in verts:
                if (v & mask).bit_count() == rk:
                    ech.add([v >> e & 1 for e in f])
            observed = ech.rank == len(f)
            predicted = (rk >= 1 and m._closure(comp) == comp
                         and (m._is_k_inseparable(mask, k) or k < r_e))
            if predicted != observed:
                out.append(Discrepancy("lemma-k-rank", k, tuple(f), predicted, observed))
            if (trunc is not None and m._closure(comp) == comp and m._rank(comp) < k
                    and not trunc._is_k_inseparable(mask, k)):
                out.append(Discrepancy("lemma-k-inseparable", k, tuple(f), True, False))
    return out
