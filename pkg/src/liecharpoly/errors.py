"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class LieCharPolyError(Exception):
    """Base class for every error raised by the library."""


class NotDivisible(LieCharPolyError, ArithmeticError):
    pass


class MissingVariable(LieCharPolyError, KeyError):
    pass


class InvalidRank(LieCharPolyError, ValueError):
    pass


class InvalidType(LieCharPolyError, ValueError):
    pass


class IndexOutOfRange(LieCharPolyError, IndexError):
    pass


class NotDominant(LieCharPolyError, ValueError):
    pass


class NotInWeightSystem(LieCharPolyError, ValueError):
    pass


class NotInvariant(LieCharPolyError, ValueError):
    pass


class NotSymmetric(NotInvariant):
    """Raised with the offending adjacent transposition ``(i, i + 1)`` (1-based)."""

    def __init__(self, message: str, transposition: tuple[int, int]):
        super().__init__(message)
        self.transposition = transposition


class MixedParity(NotInvariant):
    pass


class OddE3(NotInvariant):
    pass


class InvalidPower(LieCharPolyError, ValueError):
    pass


class Mismatch(LieCharPolyError, AssertionError):
    """A direct determinant disagreed with the assembled factorization."""

    def __init__(self, message: str, exponent: int | None = None, expected=None, actual=None):
        super().__init__(message)
        self.exponent = exponent
        self.expected = expected
        self.actual = actual
