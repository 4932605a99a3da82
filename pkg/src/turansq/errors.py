"""Exception hierarchy shared by every module."""

from __future__ import annotations


class TuranError(Exception):
    """Base class for all errors raised by turansq."""


class CapacityError(TuranError, ValueError):
    """A vertex count exceeds the configured capacity."""


class InvalidEdgeError(TuranError, ValueError):
    """A loop or an out-of-range endpoint was requested."""


class Graph6ParseError(TuranError, ValueError):
    """Malformed graph6 input.

    ``offset`` is the byte position at which decoding failed.
    """

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class ConstructionError(TuranError, ValueError):
    """A construction was requested with parameters violating its definition."""


class DomainError(TuranError, ValueError):
    """A formula was evaluated outside the range where it holds."""


class UnknownClaimError(TuranError, KeyError):
    pass


class SearchLimitExceeded(TuranError):
    """The node limit was hit before the search finished.

    ``partial`` carries the best result found so far, with ``exact=False``.
    """

    def __init__(self, partial) -> None:
        super().__init__(partial)
        self.partial = partial

    def __str__(self) -> str:
        p = self.partial
        return f"node limit exceeded after {p.nodes_explored} nodes; best so far {p.max_edges}"
