"""Exception types shared across the library."""


class OddCycleError(Exception):
    """Base class for all library errors."""


class GraphParseError(OddCycleError):
    """Malformed graph text. Carries the byte offset of the offending token."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class GraphValidationError(OddCycleError):
    """Input violates simplicity (loop or duplicate edge) or index bounds."""


class ContractViolation(OddCycleError):
    """A documented precondition was not met by the caller."""


class EnumerationBudgetError(OddCycleError):
    """An exhaustive enumeration exceeded its configured budget."""

    def __init__(self, message: str, bound: int):
        super().__init__(f"{message} (budget {bound})")
        self.bound = bound


class SizeCapError(OddCycleError):
    """Instance too large for an exhaustive oracle."""


class DemandError(OddCycleError):
    """A list or demand bound is too small. Carries the offending edge id."""

    def __init__(self, message: str, edge: int):
        super().__init__(f"{message} (edge {edge})")
        self.edge = edge


class KernelAbsenceError(OddCycleError):
    """No kernel exists in the requested induced subdigraph."""

    def __init__(self, message: str, subset):
        super().__init__(message)
        self.subset = frozenset(subset)


class ClassificationError(OddCycleError):
    """Graph is outside the supported class. Carries a witness when available."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class AssemblyError(OddCycleError):
    """A composed orientation violated its outdegree bounds."""

    def __init__(self, message: str, edge: int):
        super().__init__(f"{message} (edge {edge})")
        self.edge = edge


class ProtocolError(OddCycleError):
    """A game strategy returned a malformed response."""
