"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument lies outside the range an operation accepts."""


class DimensionError(ValueError):
    """Two vectors that must have equal length do not."""
