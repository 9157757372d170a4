"""Exception hierarchy.

Every error carries an ``exit_code`` so the command line front end can map
failures to stable process statuses.
"""


class CPathError(Exception):
    exit_code = 2


class ParseError(CPathError):
    exit_code = 1

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class CoherenceError(CPathError):
    """Endpoints that should agree do not."""

    exit_code = 2

    def __init__(self, message, left=None, right=None, position=None):
        self.left = left
        self.right = right
        self.position = position
        super().__init__(message)


class RedexError(CPathError):
    """A redex location is out of range or does not point at a redex."""

    exit_code = 2

    def __init__(self, message, location=()):
        self.location = tuple(location)
        super().__init__(message)


class FuelExhausted(CPathError):
    exit_code = 3

    def __init__(self, message, partial=None, side=None):
        self.partial = partial
        self.side = side
        super().__init__(message)


class UninhabitedError(CPathError):
    """Raised when a computation needs an inhabitant of the empty type."""

    exit_code = 4


class ContractError(CPathError):
    exit_code = 4


class PreconditionError(CPathError):
    exit_code = 2


class CanonicalFormError(CPathError):
    exit_code = 2
