from __future__ import annotations

import time
from dataclasses import dataclass


class BudgetExceeded(RuntimeError):
    """An exhaustive search ran out of nodes or time before reaching a verdict."""


@dataclass(frozen=True)
class SearchBudget:
    """Limits for exhaustive searches. ``None`` disables a limit."""

    max_nodes: int | None = 5_000_000
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")

    def meter(self) -> Meter:
        return Meter(self)


class Meter:
    """Counts search nodes against a budget."""

    __slots__ = ("nodes", "_limit", "_deadline")

    def __init__(self, budget: SearchBudget):
        self.nodes = 0
        self._limit = budget.max_nodes
        self._deadline = (
            None if budget.max_seconds is None else time.monotonic() + budget.max_seconds
        )

    def tick(self) -> None:
        self.nodes += 1
        if self._limit is not None and self.nodes > self._limit:
            raise BudgetExceeded(f"node limit {self._limit} exceeded")
        if self._deadline is not None and self.nodes % 1024 == 0:
            if time.monotonic() > self._deadline:
                raise BudgetExceeded("time limit exceeded")


DEFAULT_BUDGET = SearchBudget()
