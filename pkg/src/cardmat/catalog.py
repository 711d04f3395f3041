"""Small named instances used by the tests, scripts and the acceptance suite."""

from __future__ import annotations

from .cardinality import CardinalitySequence
from .matroid import Free, Graphic, LinearGF2, Matroid, Partition, Uniform, complete_graph


def u43() -> Uniform:
    return Uniform(4, 3)


def u54() -> Uniform:
    return Uniform(5, 4)


def triangle() -> Graphic:
    return Graphic(3, [(0, 1), (0, 2), (1, 2)])


def k4() -> Graphic:
    """K4 with edges ordered 01, 02, 03, 12, 13, 23."""
    return complete_graph(4)


def k5() -> Graphic:
    return complete_graph(5)


def partition22() -> Partition:
    """Blocks {0,1} and {2,3}, capacity 1 each."""
    return Partition([[0, 1], [2, 3]], [1, 1])


def free(n: int = 5) -> Free:
    return Free(n)


def fano() -> LinearGF2:
    """Fano plane: the seven nonzero vectors of GF(2)^3."""
    return LinearGF2([format(v, "03b") for v in range(1, 8)])


def k4_vertex_partition() -> Partition:
    """Edges of K4 at vertex 0 form one capacity-1 block; every other edge is its own block."""
    return Partition([[0, 1, 2], [3], [4], [5]], [1, 1, 1, 1])


def seq(*values: int) -> CardinalitySequence:
    return CardinalitySequence(values)


# (name, factory, cardinality sequence); the completeness catalog
CATALOG: list[tuple[str, object, CardinalitySequence]] = [
    ("U(4,3)", u43, seq(1, 3)),
    ("U(5,4)", u54, seq(1, 3)),
    ("U(5,4)", u54, seq(2, 4)),
    ("triangle", triangle, seq(1, 2)),
    ("K4", k4, seq(1, 3)),
    ("partition", partition22, seq(0, 2)),
    ("free5", free, seq(1, 3)),
    ("free5", free, seq(1, 4)),
]

# larger instances for the separation checks (|E| <= 12)
SEPARATION_EXTRA: list[tuple[str, object, CardinalitySequence]] = [
    ("fano", fano, seq(1, 3)),
    ("K5", k5, seq(1, 4)),
    ("U(8,5)", lambda: Uniform(8, 5), seq(1, 3, 5)),
    ("partition6", lambda: Partition([[0, 1, 2], [3, 4], [5]], [1, 2, 1]), seq(0, 2, 4)),
]


def instances(extra: bool = False) -> list[tuple[str, Matroid, CardinalitySequence]]:
    rows = CATALOG + (SEPARATION_EXTRA if extra else [])
    return [(name, factory(), c) for name, factory, c in rows]
