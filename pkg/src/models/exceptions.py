"""
Exception hierarchy shared by every module of the package.
"""


class HoleyTilingError(Exception):
    """
    Base class for every error raised by the package.
    """


class ParityViolation(HoleyTilingError, ValueError):
    """
    Raised when n, b and k have inconsistent parities.
    """


class HoleOutOfRange(HoleyTilingError, ValueError):
    """
    Raised when the hole distance k lies outside the admissible range.
    """


class InvalidParams(HoleyTilingError, ValueError):
    """
    Raised when numeric parameters are malformed for the requested object.
    """


class DomainError(HoleyTilingError, ValueError):
    """
    Raised when a closed-form coefficient is evaluated outside its domain.
    """


class StructureViolation(HoleyTilingError):
    """
    Raised when a matrix handed to the generalized reduction lacks the
    required block structure.
    """


class InternalMismatch(HoleyTilingError):
    """
    Raised when two independent constructions of the same object disagree.
    """


class NotSquare(HoleyTilingError):
    """
    Raised when a determinant is requested for a non-square matrix.
    """


class OddSize(HoleyTilingError):
    """
    Raised when a Pfaffian is requested for a matrix of odd size.
    """


class TooLarge(HoleyTilingError):
    """
    Raised when an exhaustive routine is given an input beyond its limit.
    """


class FrontierTooWide(HoleyTilingError):
    """
    Raised when the transfer DP frontier exceeds the configured width.
    """


class NonTerminating(HoleyTilingError):
    """
    Raised when an exact evaluation is requested for a non-terminating series.
    """


class DenominatorPole(HoleyTilingError):
    """
    Raised when a denominator parameter reaches a non-positive integer before
    the series terminates.
    """


class OutOfRadius(HoleyTilingError):
    """
    Raised when a numeric series is evaluated outside its disc of convergence.
    """


class KTooSmall(HoleyTilingError):
    """
    Raised when a limit form is requested for a hole distance below 2.
    """
