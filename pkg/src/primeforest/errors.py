"""Exception types shared across the package."""


class DomainError(Exception):
    """Base class for all input/invariant violations raised by this package."""


class SiblingCollision(DomainError):
    """Two sibling vertices would carry the same label."""


class MisplacedInverse(DomainError):
    """An inverted prime label appears below depth 1."""


class InverseLabelPresent(DomainError):
    """Integer evaluation was asked of a tree carrying inverted labels."""


class ZeroInput(DomainError):
    """Zero cannot be encoded; only positive naturals/rationals have trees."""


class SizeOverBudget(DomainError):
    """A requested enumeration would exceed the configured size cap."""


class NotPrime(DomainError):
    """A prime argument was required."""


class ParseError(DomainError):
    """Malformed tree text."""
