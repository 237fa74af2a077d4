"""Exception hierarchy shared by the library, the CLI and the MCP tools."""

from __future__ import annotations


class TGraphError(Exception):
    """Base class for every error raised on purpose by this package."""


class PreconditionError(TGraphError, ValueError):
    """An operation was called with arguments violating its precondition."""

    def __init__(self, message: str, *, clause: str | None = None) -> None:
        super().__init__(message)
        self.clause = clause


class ResourceGuardError(TGraphError, RuntimeError):
    """An exact computation was refused because the instance is over a size guard.

    Raised instead of returning a possibly wrong answer.
    """

    def __init__(self, limit_name: str, limit: int, actual: int) -> None:
        super().__init__(
            f"{limit_name} exceeded: instance has {actual}, limit is {limit}. "
            f"Raise the limit with the matching flag or TGRAPH_* variable."
        )
        self.limit_name = limit_name
        self.limit = limit
        self.actual = actual


class FormatParseError(TGraphError, ValueError):
    """Malformed text or JSON input."""

    def __init__(self, message: str, *, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
