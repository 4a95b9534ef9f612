"""Exception types shared across the package."""


class ReDirError(Exception):
    pass


class NotPrimeError(ReDirError, ValueError):
    pass


class DivisionByZero(ReDirError, ZeroDivisionError):
    pass


class InvalidOrder(ReDirError, ValueError):
    pass


class ModulusMismatch(ReDirError, ValueError):
    pass


class UndefinedGcd(ReDirError, ValueError):
    pass


class RangeError(ReDirError, ValueError):
    pass


class SizeError(ReDirError, ValueError):
    pass


class TooFewPoints(ReDirError, ValueError):
    pass


class HypothesisError(ReDirError, ValueError):
    pass


class NotPaley(ReDirError, ValueError):
    pass


class AsymmetricConnectionSet(ReDirError, ValueError):
    pass
