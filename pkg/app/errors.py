"""Exception hierarchy.

Every error carries the process exit code the command line reports for it:
1 parse, 2 validation, 3 range, 4 numerical verification.
"""


class DirectMeasurementError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class SpecParseError(DirectMeasurementError):
    """A command, generator spec, angle literal or file could not be parsed."""

    exit_code = 1

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class StateValidationError(DirectMeasurementError):
    """An input violates a physical or structural invariant."""

    exit_code = 2


class NotHermitian(StateValidationError):
    pass


class TraceNotOne(StateValidationError):
    pass


class NotPSD(StateValidationError):
    pass


class NotNormalized(StateValidationError):
    pass


class BadRank(StateValidationError):
    pass


class TooFewQubits(StateValidationError):
    pass


class SupportClipped(StateValidationError):
    pass


class ZeroShots(StateValidationError):
    pass


class WrongArity(StateValidationError):
    pass


class DimensionMismatch(StateValidationError):
    pass


class IndicesEqual(StateValidationError):
    pass


class SeedRequired(StateValidationError):
    pass


class IndexRangeError(DirectMeasurementError):
    """An index or size lies outside the allowed range."""

    exit_code = 3


class IndexOutOfRange(IndexRangeError):
    pass


class QubitLimitExceeded(IndexRangeError):
    pass


class VerificationError(DirectMeasurementError):
    """A numerical self-check of the command line failed."""

    exit_code = 4
