"""Exception types raised across the package."""


class MTCodeError(Exception):
    """Base class for every error raised by :mod:`mtcodes`."""


class DivisionByZero(MTCodeError, ZeroDivisionError):
    pass


class FieldMismatch(MTCodeError, ValueError):
    pass


class UndefinedGcd(MTCodeError, ValueError):
    pass


class ReciprocalUndefined(MTCodeError, ValueError):
    pass


class ShapeError(MTCodeError, ValueError):
    pass


class RankDeficient(MTCodeError, ValueError):
    pass


class TooLargeToEnumerate(MTCodeError):
    def __init__(self, count, cap):
        super().__init__(f"{count} codewords exceed the enumeration cap {cap}")
        self.count = count
        self.cap = cap


class TooManyMinors(MTCodeError):
    def __init__(self, count, cap):
        super().__init__(f"{count} minors exceed the minor cap {cap}")
        self.count = count
        self.cap = cap


class InternalInvariantViolation(MTCodeError, AssertionError):
    pass


class PreconditionViolated(MTCodeError, ValueError):
    pass


class NotApplicableError(MTCodeError):
    """A criterion was requested on an input outside its hypothesis."""


class NotADivisor(MTCodeError, ValueError):
    pass


class InvalidCode(MTCodeError, ValueError):
    """An MT code description failed validation."""


class CodeFileError(InvalidCode):
    """Syntax or content error in a code file, with an optional position."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class CriterionMismatch(MTCodeError, AssertionError):
    """A closed-form criterion disagreed with its brute-force oracle."""


class ZeroLambda(CodeFileError):
    pass


class LengthMismatch(CodeFileError):
    pass


class CoefficientOutOfRange(CodeFileError):
    pass
