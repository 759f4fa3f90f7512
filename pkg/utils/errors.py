#utils/errors.py


class DeltaError(Exception):
    """Base class for every error raised by the delta stream library"""

    exit_code = 1


class UsageError(DeltaError):
    exit_code = 1


class EmptyInputError(DeltaError):
    exit_code = 1


class InvalidGenSpec(DeltaError):
    exit_code = 1


class ContractViolation(DeltaError):
    """An operation was called outside its precondition"""

    exit_code = 1


class HullUnderflowError(ContractViolation):
    pass


class InputReadError(DeltaError):
    exit_code = 2


class StreamTooLongError(DeltaError):
    """The stream outgrew the configured capacity"""

    exit_code = 3


class OracleCapExceeded(StreamTooLongError):
    pass


class InvariantBreach(DeltaError):
    """Internal state disagrees with itself; never silently recovered"""

    exit_code = 4
