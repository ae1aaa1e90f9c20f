"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside the domain an operation is defined on."""


class PoleError(DomainError, ZeroDivisionError):
    """A denominator factor vanishes."""


class GridTooCoarseError(DomainError):
    """The sampling grid cannot resolve a polynomial of the requested degree."""
