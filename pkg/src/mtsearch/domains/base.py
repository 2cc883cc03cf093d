"""Search-domain contract shared by every algorithm in the package."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Hashable, Sequence

# Sentinels lie strictly outside every domain's [-VAL_MAX, VAL_MAX] and leave
# room for +-1 adjustments without overflow.
POS_INF = 1 << 30
NEG_INF = -POS_INF
VAL_MAX_LIMIT = 1 << 20

MASK64 = (1 << 64) - 1


def mix64(x: int) -> int:
    """SplitMix64 finalizer; a bijection on 64-bit integers."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


class BudgetExceeded(RuntimeError):
    """A tree or search would exceed the configured node budget."""


class SearchDomain(ABC):
    """Position space for fixed-depth minimax search.

    Positions are opaque to the algorithms. Children come back in a fixed,
    deterministic order; a position with no children is terminal. Search
    depth is counted in remaining plies with leaves at depth zero.
    """

    val_max: int = VAL_MAX_LIMIT

    @abstractmethod
    def root(self) -> Any: ...

    @abstractmethod
    def children(self, pos: Any) -> Sequence[Any]: ...

    @abstractmethod
    def evaluate(self, pos: Any) -> int:
        """Static value of ``pos`` from the MAX player's point of view."""

    @abstractmethod
    def is_max(self, pos: Any) -> bool: ...

    @abstractmethod
    def key(self, pos: Any) -> int:
        """64-bit hash; equal states give equal keys."""

    def move_key(self, pos: Any, index: int) -> Hashable:
        """Feature used by the history heuristic for child ``index``."""
        return index

    def move_keys(self, pos: Any, count: int) -> list[Hashable]:
        return [self.move_key(pos, i) for i in range(count)]

    def label(self, pos: Any) -> str:
        return format(self.key(pos), "016x")

    def default_depth(self) -> int | None:
        """Depth that reaches every terminal, when the domain knows one."""
        return None
