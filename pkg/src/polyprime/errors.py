"""Exception types shared across the package."""


class PolyprimeError(Exception):
    """Base class for all package errors."""


class GridInputError(PolyprimeError):
    """Base class for malformed polyomino input."""


class EmptyInputError(GridInputError):
    """Input contains no cells."""


class BadCharError(GridInputError):
    """Grid text contains a character outside {'#', '.'}."""


class DisconnectedError(GridInputError):
    """Cell set is not edge-connected."""


class CapExceededError(PolyprimeError):
    """Requested enumeration size exceeds the configured cap."""


class LimitExceededError(PolyprimeError):
    """Cycle enumeration budget exhausted."""


class BudgetExceededError(PolyprimeError):
    """Groebner engine budget (S-pairs, basis size, or reduction steps) exhausted."""


class VariableSetMismatchError(PolyprimeError):
    """Operands belong to different variable sets."""


class MissingVertexError(PolyprimeError):
    """A required interval intersection is not a vertex of the polyomino."""


class InternalInconsistencyError(PolyprimeError):
    """Two independent decision paths disagreed; indicates an engine bug."""


class InvariantViolationError(PolyprimeError):
    """A verified report violates a structural invariant."""
