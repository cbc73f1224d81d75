"""Exception types shared across the package."""


class EntroComplexError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(EntroComplexError, ValueError):
    """Invalid input: bad probability vector, malformed config, out-of-range argument."""


class NumericError(EntroComplexError, RuntimeError):
    """A numerical routine failed (eigensolver breakdown, ill-conditioned data)."""


class DegenerateCurveError(NumericError):
    """The scanned curve is flat to machine precision; no maximum can be located."""


class NonUnimodalError(NumericError):
    """The pre-scan found several separated maxima; golden-section would be unreliable."""


class DegenerateTraceError(NumericError):
    """A time trace carries no interior peak (e.g. identically zero complexity)."""


class CrossoverNotFoundError(EntroComplexError, ValueError):
    """The curve never crosses the requested target level."""
