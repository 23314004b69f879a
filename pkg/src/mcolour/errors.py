"""Exception hierarchy shared by every module."""


class McolourError(Exception):
    """Base class for all library errors."""


class InvalidAssignment(McolourError):
    pass


class ParseError(McolourError):
    def __init__(self, message, line=None, position=None):
        self.line = line
        self.position = position
        where = ""
        if line is not None:
            where = f"line {line}"
            if position is not None:
                where += f", col {position}"
            where = f" ({where})"
        super().__init__(f"{message}{where}")


class CapExceeded(McolourError):
    pass


class InvalidPartition(McolourError):
    pass


class OutOfRange(McolourError):
    pass


class InvalidVertex(McolourError):
    pass


class NoWitness(McolourError):
    pass


class PreconditionFailed(McolourError):
    pass


class InternalInvariantViolation(McolourError):
    """Raised when a mathematically guaranteed property fails; always a bug."""
