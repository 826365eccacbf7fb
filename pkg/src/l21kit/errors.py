"""Exception hierarchy shared by every module."""


class InputError(ValueError):
    """Malformed or out-of-range input."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(InputError):
    """A documented precondition does not hold.

    ``name`` identifies which one, so callers (and the CLI) can report it
    without parsing the message.
    """

    def __init__(self, name, message):
        self.name = name
        super().__init__(f"{name}: {message}")


class CapabilityError(RuntimeError):
    """The request is outside what this toolkit can construct.

    Raised when no construction is available; this is not a proof that
    the object does not exist.
    """
