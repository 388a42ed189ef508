"""Exception types shared across the package."""


class QuantrendError(Exception):
    """Base class for all package errors."""


class ValidationError(QuantrendError, ValueError):
    """An argument is out of its documented domain or input data is malformed."""


class RankError(ValidationError):
    """A design matrix does not have full column rank."""


class NumericError(QuantrendError, RuntimeError):
    """A numeric procedure failed: overflow, singularity, or too many failed refits."""
