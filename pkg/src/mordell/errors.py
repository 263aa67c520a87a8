"""Exception types raised across the package."""

from __future__ import annotations


class MordellError(Exception):
    """Base class for all errors raised by this package."""


class PerfectSquare(MordellError, ValueError):
    pass


class DomainTooSmall(MordellError, ValueError):
    pass


class Overflow(MordellError, OverflowError):
    pass


class PeriodGuardExceeded(MordellError, RuntimeError):
    pass


class IndexOutOfRange(MordellError, IndexError):
    pass


class NotPrime(MordellError, ValueError):
    pass


class NotCongruent3Mod4(MordellError, ValueError):
    pass


class NotCongruent1Mod4(MordellError, ValueError):
    pass


class InexactSquareRoot(MordellError, ArithmeticError):
    """An exact square root was required but the argument is not a square.

    For valid inputs this cannot happen, so it always signals a bug.
    """


class InternalError(MordellError, RuntimeError):
    """Internal consistency failure (fast and exact paths disagree, odd
    period where an even one is guaranteed, ...)."""


class RangeTooLarge(MordellError, ValueError):
    pass


class CheckpointMismatch(MordellError, ValueError):
    pass


class CheckpointCorrupt(MordellError, ValueError):
    pass
