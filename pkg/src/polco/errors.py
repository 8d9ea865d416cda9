"""Exception types shared across the package."""


class PolcoError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(PolcoError):
    """Operand dimensions are inconsistent (shape, split, or rank)."""


class ValidationError(PolcoError):
    """Input fails a density-matrix or normalization requirement."""


class UnsupportedDimension(PolcoError):
    """Requested dimension is outside the supported set."""


class DegenerateInput(PolcoError):
    """Input carries no usable information (e.g. all-zero coefficients)."""


class UnknownState(PolcoError):
    """Requested named state is not in the registry."""


class UnknownRelation(PolcoError):
    """Requested relation identifier is not in the registry."""


class PreconditionError(PolcoError):
    """Call violates a documented precondition of the operation."""
