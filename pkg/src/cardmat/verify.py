"""Randomized checks of the complete linear description and the intersection probe."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cardinality import CardinalitySequence, enumerate_feasible_masks
from .errors import GroundSetMismatch, NotValid
from .lp import ExactLP, InequalitySystem
from .matroid import Matroid, bits, from_mask
from .polyhedra import full_system
from .rational import fmt, fmt_all

OBJECTIVE_RANGE = (-10, 10)


@dataclass
class Failure:
    objective: tuple[int, ...]
    lp_value: Fraction
    combinatorial_value: Fraction
    point: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {"objective": list(self.objective), "lp_value": fmt(self.lp_value),
                "combinatorial_value": fmt(self.combinatorial_value), "point": fmt_all(self.point)}


@dataclass
class VerificationReport:
    instance: str
    trials: int
    seed: int
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        # elapsed is left out so that identical runs serialize identically
        return {"instance": self.instance, "trials": self.trials, "seed": self.seed,
                "passed": self.passed, "failures": [f.to_json() for f in self.failures]}


def random_objectives(n: int, trials: int, seed: int) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    lo, hi = OBJECTIVE_RANGE
    return [tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(trials)]


def _best_vertex_value(vertices: Sequence[int], w) -> Fraction:
    return max(Fraction(sum(w[e] for e in bits(v))) for v in vertices)


def verify_completeness(m: Matroid, c: CardinalitySequence, trials: int, seed: int,
                        include_fs: bool = True, objectives=None, instance: str | None = None,
                        limit=None) -> VerificationReport:
    """Compare the LP optimum over the full system with the best feasible set.

    Objectives are ``trials`` seeded integer vectors in [-10, 10]^E, or the
    explicit ``objectives`` when given. Every feasible set is also checked
    against every inequality of the system.
    """
    start = time.perf_counter()
    c.check_bound(m)
    vertices = enumerate_feasible_masks(m, c, limit)
    ineqs = full_system(m, c, include_fs=include_fs)
    for v in vertices:
        for q in ineqs:
            value = q.at_mask(v)
            if (value > q.rhs) if q.sense == "<=" else (value < q.rhs):
                raise NotValid(from_mask(v))
    if objectives is None:
        objectives = random_objectives(m.n, trials, seed)
    objectives = [tuple(w) for w in objectives]
    lp = ExactLP.from_system(InequalitySystem(m.n, ineqs))
    report = VerificationReport(instance or repr(m), len(objectives), seed)
    for w in objectives:
        point, lp_value = lp.maximize(w)
        comb = _best_vertex_value(vertices, w)
        if lp_value != comb:
            report.failures.append(Failure(w, lp_value, comb, point))
    report.elapsed = time.perf_counter() - start
    return report


@dataclass
class ConjectureCandidate:
    objective: tuple[int, ...]
    lp_value: Fraction
    combinatorial_value: Fraction
    point: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {"objective": list(self.objective), "lp_value": fmt(self.lp_value),
                "combinatorial_value": fmt(self.combinatorial_value), "point": fmt_all(self.point)}


@dataclass
class ProbeReport:
    trials: int
    seed: int
    vertices: int
    counterexample: ConjectureCandidate | None = None

    def to_json(self) -> dict:
        return {"trials": self.trials, "seed": self.seed, "vertices": self.vertices,
                "counterexample": self.counterexample.to_json() if self.counterexample else None}


def probe_intersection_conjecture(m1: Matroid, m2: Matroid, c: CardinalitySequence, trials: int,
                                  seed: int, limit=None) -> ProbeReport:
    """Look for an objective where P^c(M1) intersected with P^c(M2) beats the common sets.

    No answer is expected either way; the first objective with a strictly
    larger LP value is reported together with its fractional optimum.
    """
    if m1.n != m2.n:
        raise GroundSetMismatch(f"ground sets differ in size: {m1.n} vs {m2.n}")
    c.check_bound(m1)
    c.check_bound(m2)
    common = [v for v in enumerate_feasible_masks(m1, c, limit) if m2._independent(v)]
    report = ProbeReport(trials, seed, len(common))
    if trials == 0 or not common:
        return report
    system = InequalitySystem(m1.n, full_system(m1, c) + full_system(m2, c))
    lp = ExactLP.from_system(system)
    for w in random_objectives(m1.n, trials, seed):
        point, lp_value = lp.maximize(w)
        comb = _best_vertex_value(common, w)
        if lp_value > comb:
            report.counterexample = ConjectureCandidate(w, lp_value, comb, point)
            break
    return report
