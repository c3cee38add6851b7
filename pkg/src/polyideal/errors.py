"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class for all errors raised by polyideal."""


class MixedFieldError(AlgebraError, TypeError):
    """Operands live in different coefficient fields."""


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class NotPrime(AlgebraError, ValueError):
    pass


class ArityMismatch(AlgebraError, ValueError):
    pass


class NotDivisible(AlgebraError, ValueError):
    pass


class ExponentOverflow(AlgebraError, OverflowError):
    pass


class RingMismatch(AlgebraError, TypeError):
    """Operands belong to different polynomial rings."""


class ZeroPolynomial(AlgebraError, ValueError):
    pass


class IncompatibleRings(AlgebraError, TypeError):
    pass


class ArityOverflow(AlgebraError, ValueError):
    pass


class NameNotFound(AlgebraError, KeyError):
    pass


class NoNames(AlgebraError, ValueError):
    pass


class NotHomogenisedRing(AlgebraError, TypeError):
    pass


class NotHomogeneous(AlgebraError, ValueError):
    pass


class NotABasis(AlgebraError, ValueError):
    pass


class RaggedRows(AlgebraError, ValueError):
    pass


class InconsistentLabel(AlgebraError, AssertionError):
    pass


class DegreeBoundExceeded(AlgebraError, RuntimeError):
    pass


class Timeout(AlgebraError):
    """A computation ran past its wall-clock budget."""


class ParseError(AlgebraError, ValueError):
    """Malformed input text; carries a 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class UnknownVariable(ParseError):
    pass


class DuplicateVariable(ParseError):
    pass


class OracleUnavailable(AlgebraError, RuntimeError):
    pass


class ProtocolError(AlgebraError, RuntimeError):
    pass
