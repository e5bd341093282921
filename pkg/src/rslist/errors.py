"""Exception hierarchy shared by every module of the package."""


class RSListError(Exception):
    """Base class for all errors raised by rslist."""


class NonPrimeCharacteristic(RSListError, ValueError):
    pass


class ReducibleModulus(RSListError, ValueError):
    pass


class FieldTooLarge(RSListError, ValueError):
    pass


class DivisionByZero(RSListError, ZeroDivisionError):
    pass


class MixedFields(RSListError, TypeError):
    pass


class DuplicateNodes(RSListError, ValueError):
    pass


class LengthMismatch(RSListError, ValueError):
    pass


class MessageDegreeTooHigh(RSListError, ValueError):
    pass


class ZeroPolynomial(RSListError, ValueError):
    pass


class YDegreeOverflow(RSListError, ValueError):
    pass


class MalformedInput(RSListError, ValueError):
    pass


class UnexpectedZero(RSListError, RuntimeError):
    """A generator vanished during reduction; this can only be a bug."""


class KTooSmall(RSListError, ValueError):
    pass


class LOverrideBelowM(RSListError, ValueError):
    pass


class TooManyErrors(RSListError, ValueError):
    pass


class InstanceTooLarge(RSListError, ValueError):
    pass


class NoCodewordInRange(RSListError):
    """Decoding failure: no codeword lies within the unique decoding radius.

    This is an expected outcome on badly corrupted words, not a fault.
    """
