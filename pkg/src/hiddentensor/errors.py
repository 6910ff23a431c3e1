"""Exception hierarchy shared by all modules."""


class HiddenTensorError(Exception):
    """Base class for errors raised by :mod:`hiddentensor`."""


class ConfigurationError(HiddenTensorError, ValueError):
    """Invalid structural parameter (radix < 2, non-coprime multiplier, ...)."""


class DomainError(HiddenTensorError, ValueError):
    """Argument outside the domain of an operation (index out of range, dim mismatch)."""


class DimensionError(DomainError):
    """Truncation dimension incompatible with the requested block structure."""


class TruncationError(HiddenTensorError):
    """A truncated analytic state loses more weight than the accepted tolerance."""


class ResolutionError(HiddenTensorError, ValueError):
    """Grid too coarse for the requested basis function."""


class SignalSpecError(HiddenTensorError, ValueError):
    """Signal layout violates the sampling condition."""


class ProjectionError(HiddenTensorError, ValueError):
    """Signal duration does not hold an integer number of frequency-quantum periods."""


class TruncationWarning(UserWarning):
    """Emitted when a truncated computation leaks measurable weight to the boundary."""
