"""Exception types shared across the package."""


class CoxeterKitError(Exception):
    """Base class for all library errors."""


class ValidationError(CoxeterKitError, ValueError):
    """Malformed input: bad graph data, mismatched operands, bad labels."""


class UnsupportedTypeError(CoxeterKitError, ValueError):
    """Operation not available for this Coxeter type (e.g. exceptional families)."""


class GuardError(CoxeterKitError, ValueError):
    """A size guard was exceeded (group order, rank, or parameter bound)."""


class InternalInconsistencyError(CoxeterKitError, RuntimeError):
    """Two independent computations disagreed; indicates a bug, not bad input."""
