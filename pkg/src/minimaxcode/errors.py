"""Exception types shared across the package."""


class MinimaxCodeError(Exception):
    """Base class for all package errors."""


class EmptyInput(MinimaxCodeError):
    pass


class NonPositiveProbability(MinimaxCodeError):
    pass


class SumNotOne(MinimaxCodeError):
    pass


class SizeMismatch(MinimaxCodeError):
    pass


class KraftViolation(MinimaxCodeError):
    pass


class InvalidBase(MinimaxCodeError):
    pass


class InvalidParameter(MinimaxCodeError):
    pass


class InvalidEpsilon(MinimaxCodeError):
    pass


class DegenerateInput(MinimaxCodeError):
    pass


class TooLarge(MinimaxCodeError):
    pass


class CorruptPayload(MinimaxCodeError):
    pass
