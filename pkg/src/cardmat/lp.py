"""Exact rational linear programming and a cutting-plane optimizer over P^c.

The solver is a dense two-phase tableau simplex with Bland's rule. Variables
that carry an explicit ``x_e >= 0`` row are treated as bounded below by zero;
all others are split into a difference of two nonnegative columns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cardinality import CardinalitySequence
from .errors import Infeasible, IterationLimit, Unbounded
from .matroid import Matroid
from .polyhedra import GE, LE, LinearInequality, build_rank_ineq, lower_bound, nonneg, upper_bound
from .rational import as_point, as_rational

EQ = "=="


@dataclass
class InequalitySystem:
    dimension: int
    inequalities: list[LinearInequality] = field(default_factory=list)

    def __post_init__(self):
        for ineq in self.inequalities:
            self._check(ineq)

    def _check(self, ineq):
        if ineq.dimension != self.dimension:
            raise ValueError(f"inequality of dimension {ineq.dimension} in a system of dimension {self.dimension}")

    def add(self, ineq: LinearInequality) -> None:
        self._check(ineq)
        self.inequalities.append(ineq)

    def extend(self, ineqs: Iterable[LinearInequality]) -> None:
        for ineq in ineqs:
            self.add(ineq)

    def __iter__(self):
        return iter(self.inequalities)

    def __len__(self):
        return len(self.inequalities)

    def violated_by(self, x: Sequence) -> list[LinearInequality]:
        return [ineq for ineq in self.inequalities if not ineq.is_satisfied(x)]

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "inequalities": [q.to_json() for q in self.inequalities]}

    @classmethod
    def from_json(cls, doc: dict) -> "InequalitySystem":
        return cls(doc["dimension"], [LinearInequality.from_json(q) for q in doc["inequalities"]])


def _is_nonneg_row(coeffs, sense, rhs):
    nz = [(j, a) for j, a in enumerate(coeffs) if a]
    if len(nz) != 1 or rhs != 0:
        return None
    j, a = nz[0]
    if (a > 0 and sense == GE) or (a < 0 and sense == LE):
        return j
    return None


class ExactLP:
    """max obj . x subject to rows (coeffs, sense, rhs), sense in {<=, >=, ==}.

    Phase one runs once; later calls to ``maximize`` start from the last basis.
    """

    def __init__(self, dimension: int, rows: Iterable[tuple[Sequence, str, object]]):
        self.dimension = dimension
        kept = []
        self._nonneg = set()
        for coeffs, sense, rhs in rows:
            coeffs = as_point(coeffs)
            rhs = as_rational(rhs)
            if len(coeffs) != dimension:
                raise ValueError("row dimension mismatch")
            j = _is_nonneg_row(coeffs, sense, rhs)
            if j is not None:
                self._nonneg.add(j)
            else:
                kept.append((coeffs, sense, rhs))
        # structural columns: one per nonneg variable, two (plus, minus) per free variable
        self._columns: list[tuple[int, int]] = []
        for j in range(dimension):
            self._columns.append((j, 1))
            if j not in self._nonneg:
                self._columns.append((j, -1))
        self._rows = kept
        self._ready = False

    @classmethod
    def from_system(cls, system: InequalitySystem) -> "ExactLP":
        return cls(system.dimension, ((q.coeffs, q.sense, q.rhs) for q in system))

    def _build(self):
        n_struct = len(self._columns)
        rows = []
        for coeffs, sense, rhs in self._rows:
            row = [coeffs[j] * s for j, s in self._columns]
            if rhs < 0:
                row = [-a for a in row]
                rhs = -rhs
                sense = {LE: GE, GE: LE, EQ: EQ}[sense]
            rows.append((row, sense, rhs))
        n_slack = sum(1 for _, s, _ in rows if s != EQ)
        n_art = sum(1 for _, s, _ in rows if s != LE)
        width = n_struct + n_slack + n_art
        table, rhs_col, basis = [], [], []
        slack = n_struct
        art = n_struct + n_slack
        self._artificial = set()
        for row, sense, rhs in rows:
            full = row + [0] * (n_slack + n_art)
            if sense == LE:
                full[slack] = 1
                basis.append(slack)
                slack += 1
            else:
                if sense == GE:
                    full[slack] = -1
                    slack += 1
                full[art] = 1
                basis.append(art)
                self._artificial.add(art)
                art += 1
            table.append(full)
            rhs_col.append(rhs)
        self.T, self.b, self.basis, self.width = table, rhs_col, basis, width
        self.blocked: set[int] = set()
        if self._artificial:
            cost = [0] * width
            for a in self._artificial:
                cost[a] = -1
            self._optimize(cost)
            if self._objective(cost) < 0:
                raise Infeasible("the system has no feasible point")
            self._evict_artificials()
        self._ready = True

    def _objective(self, cost):
        return sum((cost[j] * v for j, v in zip(self.basis, self.b)), Fraction(0))

    def _pivot(self, r, j):
        T, b = self.T, self.b
        row = T[r]
        inv = 1 / Fraction(row[j])
        nz = [k for k, a in enumerate(row) if a]
        for k in nz:
            row[k] *= inv
        b[r] *= inv
        for i, other in enumerate(T):
            if i == r:
                continue
            a = other[j]
            if a:
                for k in nz:
                    other[k] -= a * row[k]
                b[i] -= a * b[r]
        self.basis[r] = j

    def _optimize(self, cost):
        T, b = self.T, self.b
        while True:
            basic = set(self.basis)
            cb = [cost[j] for j in self.basis]
            entering = None
            for j in range(self.width):
                if j in basic or j in self.blocked:
                    continue
                reduced = cost[j] - sum((cb[i] * T[i][j] for i in range(len(T)) if cb[i] and T[i][j]), 0)
                if reduced > 0:
                    entering = j
                    break
            if entering is None:
                return
            leave, best = None, None
            for i, row in enumerate(T):
                a = row[entering]
                if a > 0:
                    ratio = b[i] / a
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leave]):
                        leave, best = i, ratio
            if leave is None:
                raise Unbounded("objective is unbounded over the system")
            self._pivot(leave, entering)

    def _evict_artificials(self):
        for i in reversed(range(len(self.T))):
            if self.basis[i] not in self._artificial:
                continue
            col = next((k for k, a in enumerate(self.T[i]) if a and k not in self._artificial), None)
            if col is None:
                # redundant equation
                del self.T[i], self.b[i], self.basis[i]
            else:
                self._pivot(i, col)
        self.blocked = set(self._artificial)

    def maximize(self, obj: Sequence) -> tuple[tuple[Fraction, ...], Fraction]:
        obj = as_point(obj)
        if len(obj) != self.dimension:
            raise ValueError("objective dimension mismatch")
        if not self._ready:
            self._build()
        cost = [obj[j] * s for j, s in self._columns] + [0] * (self.width - len(self._columns))
        self._optimize(cost)
        x = [Fraction(0)] * self.dimension
        for i, col in enumerate(self.basis):
            if col < len(self._columns):
                j, s = self._columns[col]
                x[j] += s * self.b[i]
        x = tuple(x)
        value = sum((a * v for a, v in zip(obj, x)), Fraction(0))
        return x, value


def simplex_max(system: InequalitySystem, obj: Sequence) -> tuple[tuple[Fraction, ...], Fraction]:
    """Exact optimum (vertex, value) of max obj . x over the system."""
    return ExactLP.from_system(system).maximize(obj)


def in_convex_hull(x: Sequence, vertices: Sequence[Sequence]) -> bool:
    """Feasibility of x = sum lambda_v v, sum lambda_v = 1, lambda >= 0."""
    x = as_point(x)
    k = len(vertices)
    if k == 0:
        return False
    rows = [([Fraction(1)] * k, EQ, Fraction(1))]
    for e in range(len(x)):
        rows.append(([Fraction(v[e]) for v in vertices], EQ, x[e]))
    for i in range(k):
        rows.append(([Fraction(int(i == j)) for j in range(k)], GE, Fraction(0)))
    try:
        ExactLP(k, rows).maximize([0] * k)
    except Infeasible:
        return False
    return True


def initial_system(m: Matroid, c: CardinalitySequence) -> InequalitySystem:
    """Cardinality bounds, nonnegativity and the singleton rank inequalities."""
    n = m.n
    system = InequalitySystem(n, [lower_bound(n, c.first), upper_bound(n, c.last)])
    system.extend(nonneg(n, e) for e in range(n))
    system.extend(build_rank_ineq(m, [e]) for e in range(n))
    return system


def cutting_plane_optimize(m: Matroid, c: CardinalitySequence, obj: Sequence,
                           max_iterations: int | None = None):
    """max obj . x over P^c by alternating simplex and separation.

    Returns (point, value, cuts) where ``cuts`` are the separated inequalities
    in the order they were added.
    """
    from .separation import separate_point

    c.check_bound(m)
    obj = as_point(obj)
    system = initial_system(m, c)
    limit = max_iterations if max_iterations is not None else 10 * 2 ** min(m.n, 16)
    cuts: list[LinearInequality] = []
    for _ in range(limit):
        point, value = simplex_max(system, obj)
        outcome = separate_point(m, point, c)
        if not outcome.violated:
            return point, value, cuts
        cuts.append(outcome.cut)
        system.add(outcome.cut)
    raise IterationLimit(f"no optimum after {limit} rounds")
