"""Exception hierarchy shared by all fsplit modules."""

from __future__ import annotations


class FsplitError(Exception):
    """Base class for every error raised by this package."""


class ContextMismatchError(FsplitError):
    """Operands belong to different ring contexts."""


class PreconditionError(FsplitError):
    """A mathematical precondition on the input was violated."""


class BadTestElementError(PreconditionError):
    """The chosen test element is unusable (in a minimal prime, or the
    quotient-ring iteration produced a contradiction)."""


class BudgetExceededError(FsplitError):
    """An ascending chain did not stabilize within the configured budget."""


class ConfigError(FsplitError):
    """Invalid command-line or configuration-file input."""


class ParseError(FsplitError):
    """Expression syntax error, annotated with a byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
