"""Acceptance gate: eight criteria, exact arithmetic, one PASS/FAIL line each.

The verdict lines appear in the "acceptance gate" section of the pytest summary.
"""

import random
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from cardmat.cardinality import optimize_chs
from cardmat.catalog import instances, seq, u43
from cardmat.matroid import bits
from cardmat.polyhedra import fs_coefficients, fs_facet_verdict, fs_family, polytope_dimension, rank_facet_verdict
from cardmat.sampling import random_independent_set, random_nonneg_point, random_polytope_point
from cardmat.separation import separate_fs, separate_rank_augpath, separate_rank_bruteforce
from cardmat.lp import cutting_plane_optimize
from cardmat.sweeps import lemma_sweep, rank_and_fs_sweep, single_k_sweep
from cardmat.verify import verify_completeness

SEED = 20240601
CATALOG = instances()
SEPARATION = [row for row in instances(extra=True) if row[1].n <= 12]


@contextmanager
def criterion(log, number, title, target=None):
    start = time.perf_counter()
    detail = []
    try:
        yield detail
    except AssertionError as exc:
        log.append(_line("FAIL", number, title, time.perf_counter() - start, target,
                         str(exc).splitlines()[0]))
        raise
    elapsed = time.perf_counter() - start
    if target is not None and elapsed >= target:
        log.append(_line("FAIL", number, title, elapsed, target, "runtime target missed"))
        raise AssertionError(f"criterion {number} took {elapsed:.1f}s, target {target}s")
    log.append(_line("PASS", number, title, elapsed, target, "; ".join(detail)))


def _line(status, number, title, elapsed, target, note):
    budget = f" (target < {target}s)" if target else ""
    text = f"[{status}] criterion {number}: {title} - {elapsed:.2f}s{budget}"
    return f"{text} - {note}" if note else text


def test_criterion_1_fs_coefficients(gate_log):
    with criterion(gate_log, 1, "FS coefficients (5, 12, 9) -> (3, -4, 15)"):
        assert fs_coefficients(5, 12, 9) == (3, -4, 15)


def test_criterion_2_completeness(gate_log):
    with criterion(gate_log, 2, "completeness, 200 seeded objectives per catalog instance", 60) as detail:
        for name, m, c in CATALOG:
            report = verify_completeness(m, c, 200, SEED, instance=name)
            assert report.passed, f"{name} c={c.values}: {len(report.failures)} failures"
        detail.append(f"{len(CATALOG)} instances")


def test_criterion_3_ablation(gate_log):
    with criterion(gate_log, 3, "dropping FS on U(4,3) c=(1,3) fails at (1,1,-1,-1)", 1):
        report = verify_completeness(u43(), seq(1, 3), 0, 0, include_fs=False,
                                     objectives=[(1, 1, -1, -1)])
        assert not report.passed, "no failure without FS inequalities"
        f = report.failures[0]
        assert (f.lp_value, f.combinatorial_value) == (2, 1), f"got {f.lp_value} vs {f.combinatorial_value}"


def test_criterion_4_min_max(gate_log):
    with criterion(gate_log, 4, "min-max: augmenting paths vs brute force, 500 points", 120) as detail:
        rng = random.Random(SEED)
        for i in range(500):
            name, m, _ = SEPARATION[i % len(SEPARATION)]
            x = random_nonneg_point(m.n, rng)
            cert = separate_rank_augpath(m, x)
            cert.check(m, x)
            _, best = separate_rank_bruteforce(m, x)
            assert cert.value == sum(x) - best, f"{name} x={x}: {cert.value} vs {sum(x) - best}"
        detail.append(f"{len(SEPARATION)} instances")


def _on_cardinality(m, c, rng):
    """Convex combination of independent sets of one listed size, so x(E) = c_p."""
    sizes = [k for k in c if k <= m.rank()]
    k = rng.choice(sizes)
    sets = [random_independent_set(m, rng, k) for _ in range(3)]
    weights = [rng.randint(1, 5) for _ in sets]
    x = [Fraction(0)] * m.n
    for s, w in zip(sets, weights):
        for e in bits(s):
            x[e] += Fraction(w, sum(weights))
    return tuple(x)


def test_criterion_5_fs_separation(gate_log):
    with criterion(gate_log, 5, "FS separation vs exhaustive evaluation, 500 points", 120) as detail:
        rng = random.Random(SEED)
        families = {i: fs_family(m, c) for i, (_, m, c) in enumerate(SEPARATION)}
        violated_count = on_c = 0
        for i in range(500):
            idx = i % len(SEPARATION)
            name, m, c = SEPARATION[idx]
            x = _on_cardinality(m, c, rng) if i % 5 == 4 else random_polytope_point(m, rng)
            assert separate_rank_bruteforce(m, x)[1] == 0, "sample violates a rank inequality"
            out = separate_fs(m, x, c)
            exhaustive = any(not q.is_satisfied(x) for q in families[idx])
            assert out.violated == exhaustive, f"{name} x={x}: {out.status} vs exhaustive {exhaustive}"
            if out.violated:
                violated_count += 1
                rho = m.rank(out.witness)
                p = c.gap(rho)
                assert p is not None and c[p - 1] < rho < c[p], f"witness rank {rho} outside every gap"
            if sum(x) in c.values:
                on_c += 1
                assert not exhaustive, f"{name}: violated FS with x(E) = {sum(x)}"
        detail.append(f"{violated_count} violated, {on_c} with x(E) in c")


def test_criterion_6_facet_theorems(gate_log):
    with criterion(gate_log, 6, "facet characterizations and lemmas vs enumeration oracle", 300) as detail:
        c13 = seq(1, 3)
        worked = [
            rank_facet_verdict(u43(), [0], c13).condition == "iii",
            not rank_facet_verdict(u43(), [0, 1], c13),
            rank_facet_verdict(u43(), range(4), c13).condition == "iv",
            fs_facet_verdict(u43(), [0, 1], c13).condition == "b-i",
            fs_facet_verdict(u43(), [0], seq(0, 2)).condition == "a",
        ]
        assert all(worked), f"U(4,3) worked verdicts: {worked}"
        found = []
        seen = set()
        for name, m, c in CATALOG:
            if m.n > 8:
                continue
            found += [(name, d) for d in rank_and_fs_sweep(m, c)]
            key = repr(m)
            if key not in seen:
                seen.add(key)
                found += [(name, d) for d in single_k_sweep(m) + lemma_sweep(m)]
        summary = sorted({f"{name} {d.check} k={d.k}" for name, d in found})
        detail.append("zero discrepancies")
        assert not found, (f"{len(found)} discrepancies ({', '.join(summary)}), first: "
                           f"{found[0][0]} F={list(found[0][1].subset)} predicted {found[0][1].predicted} "
                           f"oracle {found[0][1].observed}")


def test_criterion_7_optimization(gate_log):
    with criterion(gate_log, 7, "cutting planes equal greedy, 100 objectives per catalog instance", 120):
        rng = random.Random(SEED)
        for name, m, c in CATALOG:
            for _ in range(100):
                w = [rng.randint(-10, 10) for _ in range(m.n)]
                _, value, _ = cutting_plane_optimize(m, c, w)
                expected = optimize_chs(m, w, c)[1]
                assert value == expected, f"{name} w={w}: {value} vs {expected}"


def test_criterion_8_dimension(gate_log):
    with criterion(gate_log, 8, "dim P^c = |E| except partition c=(0,2)", 5):
        for name, m, c in CATALOG:
            expected = m.n - 1 if name == "partition" and c.values == (0, 2) else m.n
            got = polytope_dimension(m, c)
            assert got == expected, f"{name} c={c.values}: dim {got}, expected {expected}"


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
