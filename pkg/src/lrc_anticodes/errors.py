"""Exception types shared across the package."""

from __future__ import annotations


class LRCError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(LRCError, ValueError):
    pass


class IndexOutOfRange(LRCError, IndexError):
    pass


class RankDeficient(LRCError):
    pass


class NotStandardForm(LRCError):
    pass


class ColumnNotFound(LRCError, KeyError):
    pass


class DuplicateTarget(LRCError, ValueError):
    pass


class TooLarge(LRCError):
    """An exhaustive enumeration would exceed its size guard."""


class ScheduleFailure(LRCError):
    """A parity-check localization schedule produced a non-dual or non-covering row set."""


class NotACodeword(LRCError, ValueError):
    pass


class NoCertificateForCoordinate(LRCError, KeyError):
    pass


class MatrixFormatError(LRCError, ValueError):
    pass
