"""Exception hierarchy shared by every module of the package."""


class ChangheeError(Exception):
    """Base class for all errors raised by this package."""


class NotAUnit(ChangheeError, ArithmeticError):
    """Raised when inverting something that is not a lambda-monomial."""


class NegativeLaurentAtZero(ChangheeError, ArithmeticError):
    """Raised when setting lambda = 0 in a polynomial that has a pole there."""


class OutOfDomain(ChangheeError, ValueError):
    pass


class PartsMismatch(ChangheeError, ValueError):
    pass


class OrderExhausted(ChangheeError, ValueError):
    """Raised when differentiating a series truncated at order 0."""


class NonzeroConstant(ChangheeError, ValueError):
    pass


class PoleNotCancelled(ChangheeError, AssertionError):
    """A result that must be polynomial in lambda still carries a negative power."""
