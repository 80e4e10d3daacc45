"""Exception hierarchy shared by all tools."""


class TautologicalError(Exception):
    """Base class for every error raised by the tools."""


class InvalidArgumentError(TautologicalError, ValueError):
    """An argument violates the documented precondition of an operation."""


class SingularGenusError(TautologicalError, ValueError):
    """The genus hits a denominator of a closed formula (typically g = 0 or g = 1)."""


class OutOfRangeError(TautologicalError, ValueError):
    """The cycle dimension r lies outside the range where a formula applies."""


class CrossCheckError(TautologicalError, RuntimeError):
    """Two independent computations of the same quantity disagree."""
