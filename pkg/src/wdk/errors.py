"""Exception hierarchy shared by all modules."""


class WDKError(Exception):
    """Base class for library errors."""


class DomainError(WDKError, ValueError):
    """An argument lies outside the domain of the operation."""


class DistinctnessError(DomainError):
    """A vector that must have pairwise distinct components does not."""


class CriticalPointError(DomainError):
    """The derivative vanishes where a nonzero value is required."""


class BoundUndefinedError(WDKError, ArithmeticError):
    """An error bound has a nonpositive denominator and cannot be formed."""


class NotCertifiableError(WDKError):
    """The semilocal conditions needed for the requested guarantee fail."""


class DegenerateGeometryError(WDKError, ArithmeticError):
    """A difference required to be nonzero vanished during the iteration."""


class InconsistencyError(WDKError, RuntimeError):
    """A guarantee that the theory makes unconditional was violated numerically."""


class PreconditionError(DomainError):
    """A documented precondition of a check does not hold."""
