"""Search budgets for the exponential-time solvers.

Every exact solver in this package walks a search tree.  A
:class:`SearchBudget` caps that walk by node count and/or wall time; when
the cap is hit the solver raises :class:`BudgetExceeded` instead of
returning a wrong answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

__all__ = ["SearchBudget", "BudgetExceeded", "UNLIMITED"]

# Wall-clock reads are comparatively expensive; amortize them.
_TIME_CHECK_MASK = 0x3FF


class BudgetExceeded(RuntimeError):
    """Raised when a solver runs out of nodes or time.

    Attributes:
        op: name of the operation that gave up.
        nodes: search nodes expanded before giving up.
        reason: "nodes" or "time".
    """

    def __init__(self, op: str, nodes: int, reason: str):
        super().__init__(f"{op}: budget exceeded after {nodes} nodes ({reason})")
        self.op = op
        self.nodes = nodes
        self.reason = reason


@dataclass(frozen=True)
class SearchBudget:
    """Immutable cap on a single solver invocation.

    ``max_nodes`` counts search-tree nodes (solver-specific but stable for
    a given input); ``max_millis`` is wall time.  ``None`` means no cap.
    """

    max_nodes: int | None = None
    max_millis: int | None = None

    def meter(self, op: str) -> "_Meter":
        return _Meter(op, self.max_nodes, self.max_millis)


class _Meter:
    """Per-invocation counter; cheap enough to charge in inner loops."""

    __slots__ = ("op", "nodes", "_max_nodes", "_deadline")

    def __init__(self, op: str, max_nodes: int | None, max_millis: int | None):
        self.op = op
        self.nodes = 0
        self._max_nodes = max_nodes
        self._deadline = None if max_millis is None else time.monotonic() + max_millis / 1000.0

    def charge(self, n: int = 1) -> None:
        self.nodes += n
        if self._max_nodes is not None and self.nodes > self._max_nodes:
            raise BudgetExceeded(self.op, self.nodes, "nodes")
        if self._deadline is not None and (self.nodes & _TIME_CHECK_MASK) == 0:
            if time.monotonic() > self._deadline:
                raise BudgetExceeded(self.op, self.nodes, "time")


UNLIMITED = SearchBudget()
