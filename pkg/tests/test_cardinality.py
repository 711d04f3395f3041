import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cardmat.cardinality import (CardinalitySequence, enumerate_feasible, greedy_fixed_cardinality,
                                 optimize_chs, sizes_of)
from cardmat.catalog import instances, k4, triangle, u43
from cardmat.errors import Infeasible, InvalidSequence
from cardmat.matroid import Free, Partition, Uniform

MEDIUM = [m for _, m, _ in instances(extra=True)] + [Partition([[0, 1, 2, 3], [4, 5], [6, 7, 8]], [2, 1, 2])]


def brute_best(m, w, k):
    best = None
    for s in itertools.combinations(range(m.n), k):
        if m.is_independent(s):
            value = sum((w[e] for e in s), Fraction(0))
            best = value if best is None else max(best, value)
    return best


class TestSequence:
    def test_parse(self):
        assert CardinalitySequence.parse("1,3").values == (1, 3)
        assert CardinalitySequence.parse("[0, 2, 4]").values == (0, 2, 4)

    @pytest.mark.parametrize("values", [(3, 1), (2, 2), (1,), (-1, 2)])
    def test_invalid(self, values):
        with pytest.raises(InvalidSequence):
            CardinalitySequence(values)

    def test_gap_and_extended(self):
        c = CardinalitySequence((1, 3, 6))
        assert c.gap(2) == 1
        assert c.gap(Fraction(5, 2)) == 1
        assert c.gap(4) == 2
        assert c.gap(3) is None
        assert c.gap(0) is None
        assert c.extended().values == (0, 1, 3, 6)

    def test_bound(self):
        with pytest.raises(InvalidSequence):
            CardinalitySequence((1, 4)).check_bound(u43())

    def test_single_cardinality(self):
        assert sizes_of(3) == (3,)


class TestExamples:
    def test_greedy_fixed(self):
        assert greedy_fixed_cardinality(u43(), (5, 4, -1, -2), 3) == {0, 1, 2}
        assert greedy_fixed_cardinality(u43(), (5, 4, -1, -2), 4) is None
        assert greedy_fixed_cardinality(triangle(), (1, 1, 1), 2) == {0, 1}

    def test_optimize(self):
        c = CardinalitySequence((1, 3))
        assert optimize_chs(u43(), (5, 4, -1, -2), c) == ({0, 1, 2}, 8)
        assert optimize_chs(u43(), (5, -4, -4, -4), c) == ({0}, 5)
        for _, m, seq in instances():
            assert optimize_chs(m, [0] * m.n, seq)[1] == 0

    def test_optimize_non_strict_skips_unreachable(self):
        c = CardinalitySequence((1, 5))
        assert optimize_chs(u43(), (1, 1, 1, 1), c, strict=False) == ({0}, 1)
        with pytest.raises(InvalidSequence):
            optimize_chs(u43(), (1, 1, 1, 1), c)
        with pytest.raises(Infeasible):
            optimize_chs(u43(), (1, 1, 1, 1), CardinalitySequence((4, 5)), strict=False)

    def test_negative_weights_fill_to_size(self):
        found = greedy_fixed_cardinality(k4(), (-1, -2, -3, -4, -5, -6), 3)
        assert len(found) == 3 and k4().is_independent(found)

    def test_enumerate(self):
        assert len(enumerate_feasible(u43(), CardinalitySequence((1, 3)))) == 8
        assert len(enumerate_feasible(triangle(), CardinalitySequence((1, 2)))) == 6
        assert frozenset() in enumerate_feasible(u43(), CardinalitySequence((0, 2)))


@pytest.mark.parametrize("m", MEDIUM, ids=repr)
def test_greedy_matches_brute_force(m):
    rng = random.Random(11)
    for _ in range(15):
        w = [Fraction(rng.randint(-10, 10), rng.randint(1, 3)) for _ in range(m.n)]
        for k in range(0, m.rank() + 2):
            found = greedy_fixed_cardinality(m, w, k)
            best = brute_best(m, w, k)
            if best is None:
                assert found is None
            else:
                assert len(found) == k and m.is_independent(found)
                assert sum((w[e] for e in found), Fraction(0)) == best


@pytest.mark.parametrize("name,m,c", instances(extra=True), ids=lambda v: str(v))
def test_optimize_matches_enumeration(name, m, c):
    rng = random.Random(5)
    feasible = enumerate_feasible(m, c)
    for _ in range(20):
        w = [rng.randint(-10, 10) for _ in range(m.n)]
        _, value = optimize_chs(m, w, c)
        assert value == max(sum(w[e] for e in s) for s in feasible)


def test_one_greedy_run_per_member(monkeypatch):
    import cardmat.cardinality as mod
    calls = []
    real = mod.greedy_fixed_cardinality
    monkeypatch.setattr(mod, "greedy_fixed_cardinality", lambda *a: calls.append(a[2]) or real(*a))
    optimize_chs(Uniform(6, 5), [1] * 6, CardinalitySequence((0, 2, 3, 5)))
    assert calls == [0, 2, 3, 5]


@given(st.integers(1, 7), st.data())
def test_enumeration_counts_free(n, data):
    values = sorted(data.draw(st.sets(st.integers(0, n), min_size=2, max_size=n + 1)))
    sets = enumerate_feasible(Free(n), CardinalitySequence(values))
    from math import comb
    assert len(sets) == sum(comb(n, k) for k in values)
    assert len(set(sets)) == len(sets)
