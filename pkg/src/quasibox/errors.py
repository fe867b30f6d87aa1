"""Exception types raised across the package."""


class QuasiboxError(Exception):
    """Base class for all package errors."""


class InvalidArgument(QuasiboxError, ValueError):
    pass


class SignalingMarginals(QuasiboxError):
    """Raised when a box's local marginals depend on the remote input."""


class ObservableNegativity(QuasiboxError):
    """Raised when a quasi-probability marginalizes to a negative observable probability."""


class SizeLimit(QuasiboxError):
    pass


class NoJqpdExists(QuasiboxError):
    """Raised when no signed joint distribution reproduces a box (the box signals)."""


class NonOrthogonalEvents(QuasiboxError):
    pass
