"""Exception types shared across the package."""


class IdealError(Exception):
    """Base class for all errors raised by this package."""


class InputError(IdealError, ValueError):
    """Malformed or inconsistent input (exit code 2 on the command line)."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{loc}: {message}"
        super().__init__(message)


class CapabilityError(IdealError):
    """A size guard or an unsupported hypothesis stopped the computation.

    Raised when a computation is well defined but outside what this package
    is prepared to do (too many generators, too many variables, or a
    theorem-backed route whose hypotheses fail).  Exit code 3 on the command
    line.
    """
