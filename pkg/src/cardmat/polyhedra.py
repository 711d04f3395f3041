"""Inequalities of the cardinality constrained matroid polytope and facet tests.

P^c is the convex hull of incidence vectors of independent sets whose size
lies in the cardinality sequence c. Its linear description consists of the
rank-induced forbidden set (FS) inequalities, the cardinality bounds, the rank
inequalities and nonnegativity. Everything here is exact; no tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cardinality import CardinalitySequence, enumerate_feasible_masks
from .errors import EmptyInput, EmptySet, FeasibleRank, GapViolation, NotValid
from .matroid import Matroid, bits, from_mask
from .rational import as_point, as_rational, fmt, fmt_all

LE = "<="
GE = ">="


@dataclass(frozen=True)
class Provenance:
    """Where an inequality came from.

    kind is one of rank, fs, lower-bound, upper-bound, nonneg, custom. For fs,
    ``p`` is the 1-based position of the lower cardinality c_p (0 in extended mode).
    """

    kind: str = "custom"
    subset: tuple[int, ...] | None = None
    p: int | None = None
    element: int | None = None

    def to_json(self) -> dict:
        doc: dict = {"kind": self.kind}
        if self.subset is not None:
            doc["subset"] = list(self.subset)
        if self.p is not None:
            doc["p"] = self.p
        if self.element is not None:
            doc["element"] = self.element
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "Provenance":
        subset = doc.get("subset")
        return cls(doc.get("kind", "custom"), tuple(subset) if subset is not None else None,
                   doc.get("p"), doc.get("element"))


@dataclass(frozen=True)
class LinearInequality:
    coeffs: tuple[Fraction, ...]
    sense: str
    rhs: Fraction
    provenance: Provenance = field(default_factory=Provenance)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", as_point(self.coeffs))
        object.__setattr__(self, "rhs", as_rational(self.rhs))
        if self.sense not in (LE, GE):
            raise ValueError(f"sense must be {LE!r} or {GE!r}")

    @property
    def dimension(self) -> int:
        return len(self.coeffs)

    def lhs(self, x: Sequence) -> Fraction:
        return sum((a * v for a, v in zip(self.coeffs, x) if a), Fraction(0))

    def at_set(self, subset: Iterable[int]) -> Fraction:
        """Left-hand side at the incidence vector of ``subset``."""
        return sum((self.coeffs[e] for e in subset), Fraction(0))

    def at_mask(self, mask: int) -> Fraction:
        return self.at_set(bits(mask))

    def slack(self, x: Sequence) -> Fraction:
        """Nonnegative iff ``x`` satisfies the inequality."""
        value = self.lhs(x)
        return self.rhs - value if self.sense == LE else value - self.rhs

    def violation(self, x: Sequence) -> Fraction:
        return -self.slack(x)

    def is_satisfied(self, x: Sequence) -> bool:
        return self.slack(x) >= 0

    def is_tight(self, x: Sequence) -> bool:
        return self.slack(x) == 0

    def as_leq(self) -> tuple[tuple[Fraction, ...], Fraction]:
        if self.sense == LE:
            return self.coeffs, self.rhs
        return tuple(-a for a in self.coeffs), -self.rhs

    def to_json(self) -> dict:
        return {"coeffs": fmt_all(self.coeffs), "sense": self.sense, "rhs": fmt(self.rhs),
                "provenance": self.provenance.to_json()}

    @classmethod
    def from_json(cls, doc: dict) -> "LinearInequality":
        return cls(as_point(doc["coeffs"]), doc["sense"], as_rational(doc["rhs"]),
                   Provenance.from_json(doc.get("provenance", {})))

    def __str__(self):
        terms = []
        for e, a in enumerate(self.coeffs):
            if not a:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            terms.append(f"{sign} {'' if mag == 1 else fmt(mag)}x{e}")
        body = " ".join(terms).lstrip("+ ") or "0"
        return f"{body} {self.sense} {fmt(self.rhs)}"


@dataclass
class FacetVerdict:
    is_facet: bool
    dim_face: int  # -1 for the empty face
    dim_polytope: int
    witness: list[frozenset[int]]


@dataclass
class TheoremVerdict:
    """Outcome of a facet characterization; truthy iff the inequality is predicted facet-defining."""

    holds: bool
    condition: str | None = None
    used_oracle: bool = False

    def __bool__(self):
        return self.holds


@dataclass
class SingleKVerdict:
    k: int
    dim_full: bool  # dim P^(k) = |E| - 1 predicted
    facet: bool | None  # x(F) <= r(F) facet of P^(k); None when not characterized


# -- construction --------------------------------------------------------


def fs_coefficients(c_p: int, c_next: int, rho: int) -> tuple[int, int, int]:
    """(inside coefficient, outside coefficient, rhs) of the FS inequality for rank ``rho``."""
    if not c_p < rho < c_next:
        raise GapViolation(f"rank {rho} is not strictly between {c_p} and {c_next}")
    return c_next - rho, -(rho - c_p), c_p * (c_next - rho)


def _fs_from_rank(n: int, mask: int, rho: int, c_p: int, c_next: int, p: int) -> LinearInequality:
    inside, outside, rhs = fs_coefficients(c_p, c_next, rho)
    coeffs = tuple(Fraction(inside if mask >> e & 1 else outside) for e in range(n))
    return LinearInequality(coeffs, LE, Fraction(rhs), Provenance("fs", tuple(bits(mask)), p))


def build_fs(m: Matroid, f: Iterable[int], c: CardinalitySequence, extended: bool = False) -> LinearInequality:
    """Rank-induced forbidden set inequality for F.

    Requires c_p < r(F) < c_{p+1} for some p in 1..m-1; with ``extended`` the
    index p = 0 with c_0 := 0 is admitted as well.
    """
    mask = m.mask(f)
    rho = m._rank(mask)
    seq = c.extended() if extended and c.first > 0 else c
    p = seq.gap(rho)
    if p is None:
        raise FeasibleRank(f"r(F) = {rho} does not lie strictly between consecutive members of {list(c)}")
    offset = 1 if seq is not c else 0
    return _fs_from_rank(m.n, mask, rho, seq[p - 1], seq[p], p - offset)


def build_rank_ineq(m: Matroid, f: Iterable[int]) -> LinearInequality:
    mask = m.mask(f)
    if not mask:
        raise EmptySet("rank inequalities are defined for nonempty sets")
    coeffs = tuple(Fraction(mask >> e & 1) for e in range(m.n))
    return LinearInequality(coeffs, LE, Fraction(m._rank(mask)), Provenance("rank", tuple(bits(mask))))


def lower_bound(n: int, c_1: int) -> LinearInequality:
    return LinearInequality((Fraction(1),) * n, GE, Fraction(c_1), Provenance("lower-bound"))


def upper_bound(n: int, c_m: int) -> LinearInequality:
    return LinearInequality((Fraction(1),) * n, LE, Fraction(c_m), Provenance("upper-bound"))


def nonneg(n: int, e: int) -> LinearInequality:
    coeffs = tuple(Fraction(int(i == e)) for i in range(n))
    return LinearInequality(coeffs, GE, Fraction(0), Provenance("nonneg", element=e))


# -- exact affine geometry -----------------------------------------------


class _Echelon:
    """Incremental row echelon form over the rationals."""

    def __init__(self):
        self.rows: dict[int, list[Fraction]] = {}

    def add(self, vec) -> bool:
        """Insert ``vec``; True iff it was linearly independent of earlier rows."""
        v = [Fraction(a) for a in vec]
        for col, row in self.rows.items():
            a = v[col]
            if a:
                for j in range(len(v)):
                    if row[j]:
                        v[j] -= a * row[j]
        for col, a in enumerate(v):
            if a:
                inv = 1 / a
                v = [x * inv for x in v]
                for other in self.rows.values():
                    b = other[col]
                    if b:
                        for j in range(len(v)):
                            if v[j]:
                                other[j] -= b * v[j]
                self.rows[col] = v
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def affine_basis(points: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal affinely independent subfamily (greedy, in order)."""
    if not points:
        raise EmptyInput("affine rank of an empty point set")
    dim = len(points[0])
    if any(len(p) != dim for p in points):
        raise ValueError("points must share one dimension")
    base = [Fraction(a) for a in points[0]]
    ech = _Echelon()
    chosen = [0]
    for i in range(1, len(points)):
        if ech.add([Fraction(a) - b for a, b in zip(points[i], base)]):
            chosen.append(i)
            if ech.rank == dim:
                break
    return chosen


def affine_rank(points: Sequence[Sequence]) -> int:
    """Number of affinely independent points among ``points`` (affine hull dimension + 1)."""
    return len(affine_basis(points))


def _incidence(n: int, mask: int) -> list[int]:
    return [mask >> e & 1 for e in range(n)]


def polytope_dimension(m: Matroid, c, limit=None) -> int:
    """dim P^c by vertex enumeration. ``c`` may be a single cardinality k."""
    verts = enumerate_feasible_masks(m, c, limit)
    if not verts:
        return -1
    return affine_rank([_incidence(m.n, v) for v in verts]) - 1


def facet_oracle(m: Matroid, c, ineq: LinearInequality, limit=None) -> FacetVerdict:
    """Reference facet test: affine rank of the tight vertices versus dim P^c."""
    verts = enumerate_feasible_masks(m, c, limit)
    tight = []
    for v in verts:
        value = ineq.at_mask(v)
        ok = value <= ineq.rhs if ineq.sense == LE else value >= ineq.rhs
        if not ok:
            raise NotValid(from_mask(v))
        if value == ineq.rhs:
            tight.append(v)
    dim_p = affine_rank([_incidence(m.n, v) for v in verts]) - 1 if verts else -1
    if tight:
        idx = affine_basis([_incidence(m.n, v) for v in tight])
        witness = [from_mask(tight[i]) for i in idx]
    else:
        witness = []
    dim_face = len(witness) - 1
    return FacetVerdict(dim_face == dim_p - 1, dim_face, dim_p, witness)


# -- facet characterizations ---------------------------------------------


def single_k_predicates(m: Matroid, f: Iterable[int] | None, k: int) -> SingleKVerdict:
    """Predicted dimension of P^(k), and facet-ness of x(F) <= r(F) for P^(k).

    dim P^(k) = |E|-1 iff E is inseparable or k < r(E). When that holds and
    F is a nonempty proper subset, x(F) <= r(F) is a facet iff F is closed and
    inseparable, r(F) < k, and E\\F is k-inseparable or k < r(E).
    """
    r_e = m.rank()
    if not 0 < k <= r_e:
        raise ValueError(f"k must satisfy 0 < k <= r(E) = {r_e}")
    dim_full = k < r_e or m._is_inseparable(m.full)
    facet = None
    if f is not None:
        mask = m.mask(f)
        if dim_full and mask and mask != m.full:
            facet = _rank_facet_single_k(m, mask, k)
    return SingleKVerdict(k, dim_full, facet)


def _rank_facet_single_k(m: Matroid, mask: int, k: int) -> bool:
    r_e = m.rank()
    return (m._rank(mask) < k
            and m._closure(mask) == mask
            and m._is_inseparable(mask)
            and (k < r_e or m._is_k_inseparable(m.full ^ mask, k)))


def rank_facet_verdict(m: Matroid, f: Iterable[int], c: CardinalitySequence) -> TheoremVerdict:
    """Whether x(F) <= r(F) defines a facet of P^c, by the five-case characterization."""
    mask = m.mask(f)
    if not mask:
        raise EmptySet("rank inequalities are defined for nonempty sets")
    rf = m._rank(mask)
    r_e = m.rank()
    c_prev, c_last = c[-2], c[-1]
    comp = m.full ^ mask

    def closed_insep():
        return m._closure(mask) == mask and m._is_inseparable(mask)

    if 0 < rf < c_prev and closed_insep():
        return TheoremVerdict(True, "i")
    if 0 < c_prev == rf < c_last < r_e and closed_insep():
        return TheoremVerdict(True, "ii")
    if (0 < c_prev == rf < c_last == r_e and closed_insep()
            and m._is_k_inseparable(comp, c_last) and m._is_inseparable(m.full)):
        return TheoremVerdict(True, "iii")
    if 0 < c_prev < c_last == rf and mask == m.full and (c_last < r_e or m._is_inseparable(m.full)):
        return TheoremVerdict(True, "iv")
    if c_prev == c[0] == 0 and c_last == r_e and rf + m._rank(comp) == r_e:
        return TheoremVerdict(True, "v")
    return TheoremVerdict(False)


def fs_facet_verdict(m: Matroid, f: Iterable[int], c: CardinalitySequence) -> TheoremVerdict:
    """Whether the FS inequality of F defines a facet of P^c.

    Case (a), c_p = c_1 = 0, reduces to x(F) <= r(F) being a facet of
    P^(c_{p+1}); when that polytope is not of dimension |E|-1 the answer is
    taken from the facet oracle and ``used_oracle`` is set.
    """
    ineq = build_fs(m, f, c)
    mask = m.mask(f)
    p = ineq.provenance.p
    c_p, c_next = c[p - 1], c[p]
    if c_p == 0:
        single = single_k_predicates(m, None, c_next)
        if single.dim_full:
            return TheoremVerdict(_rank_facet_single_k(m, mask, c_next), "a")
        verdict = facet_oracle(m, c_next, build_rank_ineq(m, f))
        return TheoremVerdict(verdict.is_facet, "a", used_oracle=True)
    if m._closure(mask) != mask:
        return TheoremVerdict(False)
    if m._is_k_inseparable(m.full ^ mask, c_next):
        return TheoremVerdict(True, "b-i")
    if c_next < m.rank():
        return TheoremVerdict(True, "b-ii")
    return TheoremVerdict(False)


# -- full systems ----------------------------------------------------------


def closed_sets(m: Matroid) -> list[int]:
    """Masks of all nonempty closed sets (exhaustive over 2^|E|)."""
    return [mask for mask in range(1, m.full + 1) if m._closure(mask) == mask]


def fs_family(m: Matroid, c: CardinalitySequence, extended: bool = False) -> list[LinearInequality]:
    """Every FS inequality over all subsets F (exhaustive)."""
    seq = c.extended() if extended and c.first > 0 else c
    offset = 1 if seq is not c else 0
    out = []
    for mask in range(1, m.full + 1):
        rho = m._rank(mask)
        p = seq.gap(rho)
        if p is not None:
            out.append(_fs_from_rank(m.n, mask, rho, seq[p - 1], seq[p], p - offset))
    return out


def full_system(m: Matroid, c: CardinalitySequence, include_fs: bool = True) -> list[LinearInequality]:
    """FS inequalities, cardinality bounds, rank inequalities on closed sets, nonnegativity."""
    out = fs_family(m, c) if include_fs else []
    out.append(lower_bound(m.n, c.first))
    out.append(upper_bound(m.n, c.last))
    out.extend(build_rank_ineq(m, bits(mask)) for mask in closed_sets(m))
    out.extend(nonneg(m.n, e) for e in range(m.n))
    return out
