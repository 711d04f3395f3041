"""Exception hierarchy. Every domain failure derives from CardmatError."""


class CardmatError(Exception):
    """Base class for domain errors (mapped to exit status 1 by the CLI)."""

    code = "error"


class SizeLimitExceeded(CardmatError):
    code = "size-limit-exceeded"

    def __init__(self, size, limit, what="input"):
        super().__init__(f"{what} of size {size} exceeds the configured limit {limit}")
        self.size = size
        self.limit = limit


class LoopFound(CardmatError):
    code = "loop-found"

    def __init__(self, element):
        super().__init__(f"element {element} is a loop")
        self.element = element


class AxiomViolation(CardmatError):
    code = "axiom-violation"

    def __init__(self, witness, sizes=None):
        msg = f"subset {sorted(witness)} has bases of unequal cardinality"
        if sizes:
            msg += f" {sizes}"
        super().__init__(msg)
        self.witness = frozenset(witness)
        self.sizes = sizes


class NotDownwardClosed(CardmatError):
    code = "not-downward-closed"

    def __init__(self, witness):
        super().__init__(f"family is missing subset {sorted(witness)}")
        self.witness = frozenset(witness)


class InvalidSequence(CardmatError):
    code = "invalid-sequence"


class GapViolation(CardmatError):
    code = "gap-violation"


class FeasibleRank(CardmatError):
    """Raised when no forbidden-set inequality exists because r(F) is not in a gap."""

    code = "feasible-rank"


class EmptySet(CardmatError):
    code = "empty-set"


class EmptyInput(CardmatError):
    code = "empty-input"


class NotValid(CardmatError):
    code = "not-valid"

    def __init__(self, witness):
        super().__init__(f"inequality is violated by feasible set {sorted(witness)}")
        self.witness = frozenset(witness)


class NegativeCoordinate(CardmatError):
    code = "negative-coordinate"

    def __init__(self, element):
        super().__init__(f"coordinate {element} is negative")
        self.element = element


class RankInequalityViolated(CardmatError):
    code = "rank-inequality-violated"

    def __init__(self, witness, violation):
        super().__init__(f"rank inequality on {sorted(witness)} violated by {violation}")
        self.witness = frozenset(witness)
        self.violation = violation


class Infeasible(CardmatError):
    code = "infeasible"


class Unbounded(CardmatError):
    code = "unbounded"


class IterationLimit(CardmatError):
    code = "iteration-limit"


class GroundSetMismatch(CardmatError):
    code = "ground-set-mismatch"
