"""Shared exception types."""


class ValidationError(ValueError):
    """Malformed input: bad elements, mismatched structures, unusable config."""


class NotInvertibleError(ValidationError):
    """Inversion was requested for a non-unit."""


class NotLcpError(ValidationError):
    """An operation that needs a linear complementary pair got something else."""


class CapExceededError(RuntimeError):
    """An enumeration or search exceeded the configured resource cap."""
