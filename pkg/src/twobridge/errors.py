"""Exception types raised across the package."""


class TwoBridgeError(Exception):
    """Base class for all domain errors."""


class DivisionUndefined(TwoBridgeError, ZeroDivisionError):
    def __init__(self, index: int, entries=()):
        self.index = index
        self.entries = tuple(entries)
        super().__init__(
            f"continued fraction {list(self.entries)} needs the reciprocal of 0 at index {index}"
        )


class UnreducibleZero(TwoBridgeError, ValueError):
    pass


class NotAKnot(TwoBridgeError, ValueError):
    pass


class InvalidPattern(TwoBridgeError, ValueError):
    pass


class NotAdmissible(TwoBridgeError, ValueError):
    pass


class ZeroPolynomial(TwoBridgeError, ValueError):
    pass


class NotEvenReduced(TwoBridgeError, ValueError):
    pass


class ParseError(TwoBridgeError, ValueError):
    pass
