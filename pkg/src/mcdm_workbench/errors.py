"""Exception hierarchy shared by all engine modules."""


class McdmError(Exception):
    """Base class for all domain errors raised by this package."""


class InputError(McdmError):
    """Malformed or incomplete caller input (bad label, missing pair, ...)."""


class DomainError(McdmError):
    """Mathematically invalid operand (non-positive TFN component, ...)."""


class ValidationError(McdmError):
    """Persisted or imported data violates an invariant.

    `location` is a JSON-path-ish string naming the offending field.
    """

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class NumericError(McdmError):
    """Numerical procedure failed to converge."""


class StaleComputationError(McdmError):
    """A cached artifact was requested but its inputs have changed."""
