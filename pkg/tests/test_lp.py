import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from cardmat.cardinality import enumerate_feasible_masks, optimize_chs
from cardmat.catalog import instances, seq, u43
from cardmat.errors import Infeasible, IterationLimit, Unbounded
from cardmat.lp import (ExactLP, InequalitySystem, cutting_plane_optimize, in_convex_hull,
                        initial_system, simplex_max)
from cardmat.polyhedra import LinearInequality, full_system


def box_system(rows, d, upper=3):
    system = InequalitySystem(d)
    for e in range(d):
        unit = [int(i == e) for i in range(d)]
        system.add(LinearInequality(unit, ">=", 0))
        system.add(LinearInequality(unit, "<=", upper))
    for coeffs, rhs in rows:
        system.add(LinearInequality(coeffs, "<=", rhs))
    return system


def brute_force_max(system, obj):
    """Best objective over all basic feasible solutions."""
    d = system.dimension
    rows = [q.as_leq() for q in system]
    best = None
    for pick in itertools.combinations(rows, d):
        a = sympy.Matrix([list(r[0]) for r in pick])
        if a.det() == 0:
            continue
        x = a.LUsolve(sympy.Matrix([r[1] for r in pick]))
        x = [Fraction(int(v.p), int(v.q)) for v in x]
        if all(sum(c * v for c, v in zip(coeffs, x)) <= rhs for coeffs, rhs in rows):
            value = sum(Fraction(c) * v for c, v in zip(obj, x))
            best = value if best is None else max(best, value)
    return best


class TestExamples:
    def test_u43_values(self):
        system = InequalitySystem(4, full_system(u43(), seq(1, 3)))
        assert simplex_max(system, (1, 0, 0, 0))[1] == 1
        assert simplex_max(system, (1, 1, 1, 1))[1] == 3

    def test_infeasible(self):
        system = InequalitySystem(1, [LinearInequality((1,), "<=", -1), LinearInequality((1,), ">=", 0)])
        with pytest.raises(Infeasible):
            simplex_max(system, (1,))

    def test_unbounded(self):
        system = InequalitySystem(2, [LinearInequality((1, -1), "<=", 1)])
        with pytest.raises(Unbounded):
            simplex_max(system, (1, 0))

    def test_free_variables_and_equalities(self):
        lp = ExactLP(2, [((1, 1), "==", 1), ((1, 0), "<=", Fraction(5, 2)), ((1, 0), ">=", -4)])
        point, value = lp.maximize((1, 0))
        assert point == (Fraction(5, 2), Fraction(-3, 2)) and value == Fraction(5, 2)
        point, value = lp.maximize((-1, 0))
        assert point == (-4, 5) and value == 4

    def test_redundant_equalities(self):
        lp = ExactLP(2, [((1, 1), "==", 1), ((2, 2), "==", 2), ((1, 0), ">=", 0), ((0, 1), ">=", 0)])
        assert lp.maximize((3, 1))[1] == 3

    def test_warm_start_matches_cold(self):
        system = InequalitySystem(4, full_system(u43(), seq(1, 3)))
        lp = ExactLP.from_system(system)
        rng = random.Random(1)
        for _ in range(20):
            w = [rng.randint(-5, 5) for _ in range(4)]
            assert lp.maximize(w)[1] == simplex_max(system, w)[1]

    def test_cutting_plane_examples(self):
        assert cutting_plane_optimize(u43(), seq(1, 3), (5, 4, -1, -2))[1] == 8
        assert cutting_plane_optimize(u43(), seq(1, 3), (5, -4, -4, -4))[1] == 5
        for _, m, c in instances():
            assert cutting_plane_optimize(m, c, [0] * m.n)[1] == 0

    def test_iteration_limit(self):
        with pytest.raises(IterationLimit):
            cutting_plane_optimize(u43(), seq(1, 3), (1, 1, -1, -1), max_iterations=1)

    def test_convex_hull(self):
        verts = [(0, 0), (1, 0), (0, 1)]
        assert in_convex_hull((Fraction(1, 3), Fraction(1, 3)), verts)
        assert not in_convex_hull((1, 1), verts)
        assert not in_convex_hull((0, 0), [])

    def test_system_json(self):
        system = initial_system(u43(), seq(1, 3))
        assert InequalitySystem.from_json(system.to_json()).inequalities == system.inequalities

    def test_dimension_check(self):
        with pytest.raises(ValueError):
            InequalitySystem(2, [LinearInequality((1,), "<=", 1)])


@given(st.integers(1, 3).flatmap(lambda d: st.tuples(
    st.just(d),
    st.lists(st.tuples(st.lists(st.integers(-3, 3), min_size=d, max_size=d), st.integers(-2, 6)), max_size=4),
    st.lists(st.integers(-4, 4), min_size=d, max_size=d))))
def test_simplex_matches_vertex_enumeration(case):
    d, rows, obj = case
    system = box_system(rows, d)
    best = brute_force_max(system, obj)
    if best is None:
        with pytest.raises(Infeasible):
            simplex_max(system, obj)
        return
    point, value = simplex_max(system, obj)
    assert value == best
    assert not system.violated_by(point)
    assert value == sum(Fraction(a) * v for a, v in zip(obj, point))


@pytest.mark.parametrize("name,m,c", instances(extra=True), ids=lambda v: str(v))
def test_cutting_plane_matches_greedy(name, m, c):
    rng = random.Random(29)
    verts = enumerate_feasible_masks(m, c)
    for _ in range(5):
        w = [rng.randint(-10, 10) for _ in range(m.n)]
        point, value, cuts = cutting_plane_optimize(m, c, w)
        assert value == optimize_chs(m, w, c)[1]
        for q in cuts:
            assert all(q.at_mask(v) <= q.rhs if q.sense == "<=" else q.at_mask(v) >= q.rhs for v in verts)
