"""Exception types shared across the package.

Every failure mode that callers are expected to handle gets its own class;
all inherit from HgffError so blanket handling stays possible.
"""


class HgffError(Exception):
    pass


class NotPrime(HgffError):
    pass


class BudgetExceeded(HgffError):
    pass


class DivisionByZero(HgffError, ZeroDivisionError):
    pass


class FieldMismatch(HgffError):
    pass


class LogOfZero(HgffError):
    pass


class NotASubfieldPair(HgffError):
    pass


class NotAMultiple(HgffError):
    pass


class IncompatibleCongruence(HgffError):
    pass


class OrderDoesNotDivide(HgffError):
    pass


class NotInteger(HgffError):
    """A value expected to be a rational integer is not one.

    Raised by extraction helpers; inside point counts and zeta factors it
    signals an internal inconsistency (a bug), not bad user input.
    """


class NonIntegral(HgffError):
    pass


class DegenerateLambda(HgffError):
    pass


class NotPrimitive(HgffError):
    pass


class UnknownIdentity(HgffError):
    pass
