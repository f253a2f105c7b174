"""Exception types shared across the package."""


class GroupOrderError(ValueError):
    """A constructor was asked for a group of invalid order."""


class SizeLimitError(ValueError):
    """The requested computation exceeds the supported desk-scale size."""


class GroupMismatchError(ValueError):
    """Two objects that must live over the same group do not."""


class GroupSpecError(ValueError):
    """A group literal or JSON group description could not be parsed."""


class NumericInputError(ValueError):
    """A numeric argument contains non-finite entries."""


class DegenerateSpectrumError(RuntimeError):
    """Random splitting of the regular representation kept producing
    degenerate eigenvalue clusters after the retry cap."""
