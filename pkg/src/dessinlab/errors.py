"""Exception hierarchy shared by the library and the command line."""


class DessinError(Exception):
    """Base class for all errors raised by dessinlab."""


class ValidationError(DessinError, ValueError):
    """A permutation pair violates a clean-dessin invariant.

    ``invariant`` names the condition that failed, e.g. ``"fpf-involution"``.
    """

    def __init__(self, invariant: str, message: str):
        super().__init__(message)
        self.invariant = invariant


class ResourceLimitError(DessinError):
    """A configured size bound would be exceeded."""


class InvariantViolation(DessinError, AssertionError):
    """An internal consistency check failed; indicates a bug."""


class FormulaInapplicable(DessinError, ValueError):
    """A closed formula does not cover the given degenerate input."""


class ParseError(DessinError, ValueError):
    """Malformed textual input, with a 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__("%d:%d: %s" % (line, column, message))
        self.line = line
        self.column = column
        self.reason = message
