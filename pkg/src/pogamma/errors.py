"""Exception hierarchy shared by the whole package."""


class InputError(ValueError):
    """Malformed or out-of-range input (as opposed to an axiom failure)."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidStructure(InputError):
    """Raised when building a structure from a candidate that fails validation."""

    def __init__(self, report):
        self.report = report
        first = report.failures[0]
        super().__init__(f"invalid structure: {first[0]} {first[1]}")


class CapacityError(RuntimeError):
    """The requested search space exceeds the configured ceiling."""
