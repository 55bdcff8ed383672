class RangeError(ValueError):
    """An argument lies outside the supported numeric range."""


class DomainError(ValueError):
    """An argument is in range but not a valid input for the operation."""


class FormatError(ValueError):
    """A file or document does not follow the expected format."""
