"""Exception hierarchy shared by all modules."""


class CodingError(Exception):
    """Base class for domain errors raised by fieldcodes."""


class NotPrime(CodingError, ValueError):
    pass


class Reducible(CodingError, ValueError):
    pass


class NotMonic(CodingError, ValueError):
    pass


class FieldMismatch(CodingError, TypeError):
    pass


class DivideByZero(CodingError, ZeroDivisionError):
    pass


class ZeroElement(CodingError, ValueError):
    pass


class DivisionByNullPoly(DivideByZero):
    pass


class ShapeMismatch(CodingError, ValueError):
    pass


class LengthMismatch(ShapeMismatch):
    pass


class Singular(CodingError, ValueError):
    pass


class BadProbability(CodingError, ValueError):
    pass


class TooLarge(CodingError, ValueError):
    pass


class NotDivisor(CodingError, ValueError):
    pass


class NotBinaryInput(CodingError, ValueError):
    pass


class RankDeficient(CodingError, ValueError):
    pass


class NotADivisor(CodingError, ValueError):
    """Generator polynomial does not divide x^n - 1."""


class ZeroConstantTerm(CodingError, ValueError):
    pass


class DegreeTooHigh(CodingError, ValueError):
    pass


class LengthNotOrder(CodingError, ValueError):
    pass


class NotPrimitiveVariant(CodingError, ValueError):
    pass


class TooManyErasures(CodingError, ValueError):
    pass


class Inconsistent(CodingError, ValueError):
    """Unerased symbols do not agree with any codeword."""


class NoFieldFits(CodingError, ValueError):
    pass


class Uncorrectable(CodingError):
    pass


class RootCountMismatch(Uncorrectable):
    pass
