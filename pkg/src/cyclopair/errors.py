"""Exception hierarchy shared by every module in the package."""


class CyclopairError(Exception):
    """Base class for all errors raised by cyclopair."""


class DomainError(CyclopairError, ValueError):
    """An argument lies outside the domain of an operation."""


class NotInvertible(CyclopairError, ArithmeticError):
    pass


class BoundExceeded(DomainError):
    pass


class PoleAtIndex(DomainError):
    """B_k is not p-integral because (p - 1) divides k."""


class NotIrregular(DomainError):
    pass


class IntegralityFailure(CyclopairError, ArithmeticError):
    """A quantity that must be divisible by p was not; indicates a bug."""


class ModulusNotPrime(DomainError):
    pass


class ModulusNotSquareOfPrime(DomainError):
    pass


class TriviallyZero(CyclopairError):
    """The relation system admits only the zero solution."""


class PairMismatch(DomainError):
    pass


class MissingLambda(DomainError):
    pass


class WrongShape(DomainError):
    pass


class ZeroCoefficient(DomainError):
    pass


class CacheError(CyclopairError):
    """The on-disk cache is unreadable or malformed."""
