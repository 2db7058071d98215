"""Exception hierarchy for ncfree.

Every error a caller can provoke with bad input derives from
ValidationError, which is also a ValueError so plain ``except ValueError``
handlers keep working. The CLI maps ValidationError to exit status 3.
"""


class NCFreeError(Exception):
    """Base class for all ncfree errors."""


class ValidationError(NCFreeError, ValueError):
    """Input failed validation (bad partition, word, series or flag)."""


class SizeError(ValidationError):
    """A size parameter is out of the supported range."""


class AlphabetMismatchError(ValidationError):
    """Two series over different alphabets were combined."""


class DegreeMismatchError(ValidationError):
    """Two series with different truncation degrees were combined where equal degrees are required."""


class NotInvertibleError(ValidationError):
    """A series has a zero first-order coefficient and has no inverse."""


class DomainError(ValidationError):
    """An argument lies outside the domain of a transform (e.g. f_1 != 1 where 1 is required)."""
