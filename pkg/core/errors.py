"""Error types raised by the library.

All errors derive from ``SymbreakError`` which is itself a ``ValueError``,
so callers that only care about bad input can keep catching ``ValueError``.
"""

from __future__ import annotations


class SymbreakError(ValueError):
    """Base class for every domain error."""


class Graph6ParseError(SymbreakError):
    """Malformed graph6 text."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class SizeLimitError(SymbreakError):
    """Input exceeds a configured size cap."""


class CapacityError(SymbreakError):
    """A search produced more results than its cap allows."""

    def __init__(self, message: str, partial_count: int) -> None:
        super().__init__(f"{message} (stopped after {partial_count})")
        self.partial_count = partial_count


class GraphArgumentError(SymbreakError):
    """A graph or labeling violates an operation's precondition."""


class UndefinedIndexError(SymbreakError):
    """The distinguishing index is undefined for this graph."""


class CatalogError(SymbreakError):
    """Unknown or malformed catalog name."""

    def __init__(self, message: str, valid_names: list[str]) -> None:
        super().__init__(f"{message}. Available: {', '.join(valid_names)}")
        self.valid_names = valid_names


class CoverError(SymbreakError):
    """A cover path cannot be walked in its host graph."""


class CoverValidationError(SymbreakError):
    """A cover breaks one of the graphoidal cover conditions."""

    def __init__(self, message: str, violations: list) -> None:
        super().__init__(message)
        self.violations = violations
