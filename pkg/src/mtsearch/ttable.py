"""Transposition table holding bounds, best move and draft per position.

One slot per index (``key & mask``), full 64-bit key check on every probe.
Bounds are kept as a pair ``(lower, upper)``; an unestablished side holds
its sentinel.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .domains.base import NEG_INF, POS_INF

MIN_LOG2 = 6
MAX_LOG2 = 26
# nominal packed size used when reporting memory in bytes
ENTRY_BYTES = 16


class Replacement(enum.Enum):
    DEEP_PREFERRED = "deep"
    ALWAYS = "always"


@dataclass(frozen=True)
class TTConfig:
    capacity_log2: int = 20
    replacement: Replacement = Replacement.DEEP_PREFERRED
    # tables below the sweep range are only for deliberately starved runs
    allow_small: bool = False

    def __post_init__(self):
        lo = 0 if self.allow_small else MIN_LOG2
        if not lo <= self.capacity_log2 <= MAX_LOG2:
            raise ValueError(f"capacity_log2 {self.capacity_log2} outside [{lo}, {MAX_LOG2}]")


class TTEntry:
    __slots__ = ("key", "lower", "upper", "best_move", "draft", "age")

    def __init__(self, key, lower, upper, best_move, draft, age):
        self.key = key
        self.lower = lower
        self.upper = upper
        self.best_move = best_move
        self.draft = draft
        self.age = age

    def bounds(self) -> tuple[int, int]:
        return self.lower, self.upper

    def __repr__(self) -> str:
        return (f"TTEntry(key={self.key:#x}, lower={self.lower}, upper={self.upper}, "
                f"best_move={self.best_move}, draft={self.draft}, age={self.age})")


class TTable:
    def __init__(self, cfg: TTConfig | None = None):
        self.cfg = cfg or TTConfig()
        self.size = 1 << self.cfg.capacity_log2
        self.mask = self.size - 1
        self.slots: list[TTEntry | None] = [None] * self.size
        self.age = 0
        self.probes = 0
        self.hits = 0
        self.stores = 0
        self.overwrites = 0  # resident entry of another key replaced
        self.rejected = 0  # store refused by the replacement policy

    @property
    def lossy(self) -> bool:
        """True once any stored information has been dropped for lack of room."""
        return bool(self.overwrites or self.rejected)

    def new_search(self):
        """Start a new generation; older entries become replaceable."""
        self.age += 1

    def clear(self):
        self.slots = [None] * self.size
        self.age = 0
        self.probes = self.hits = self.stores = self.overwrites = self.rejected = 0

    def probe(self, key: int, draft: int) -> TTEntry | None:
        """Entry for ``key`` if its draft covers ``draft``; counts probes and hits."""
        self.probes += 1
        e = self.slots[key & self.mask]
        if e is not None and e.key == key and e.draft >= draft:
            self.hits += 1
            return e
        return None

    def lookup(self, key: int) -> TTEntry | None:
        """Entry for ``key`` at any draft (move ordering only); not counted."""
        e = self.slots[key & self.mask]
        if e is not None and e.key == key:
            return e
        return None

    def store(self, key: int, lower: int = NEG_INF, upper: int = POS_INF,
              best_move: int | None = None, draft: int = 0, merge: bool = True):
        """Record bounds for ``key`` at ``draft``.

        Same key and draft: bounds are tightened (``merge=True``) or replaced.
        Same key, other draft: replaced wholesale. Another key in the slot:
        replaced per the configured policy.
        """
        if lower > upper:
            raise ValueError(f"lower bound {lower} above upper bound {upper}")
        self.stores += 1
        idx = key & self.mask
        e = self.slots[idx]
        if e is None:
            self.slots[idx] = TTEntry(key, lower, upper, best_move, draft, self.age)
            return
        if e.key == key:
            if best_move is None:
                best_move = e.best_move
            if merge and e.draft == draft:
                lo, hi = max(e.lower, lower), min(e.upper, upper)
                # Disjoint bounds only arise from inconsistent searches; trust the new ones.
                if lo <= hi:
                    lower, upper = lo, hi
            e.lower, e.upper, e.best_move, e.draft, e.age = lower, upper, best_move, draft, self.age
            return
        if (self.cfg.replacement is Replacement.ALWAYS or draft >= e.draft
                or e.age != self.age):
            self.overwrites += 1
            self.slots[idx] = TTEntry(key, lower, upper, best_move, draft, self.age)
        else:
            self.rejected += 1

    def resident(self) -> int:
        return sum(e is not None for e in self.slots)

    def memory_bytes(self) -> int:
        return self.size * ENTRY_BYTES


def tt_new(capacity_log2: int = 20, replacement: Replacement = Replacement.DEEP_PREFERRED) -> TTable:
    return TTable(TTConfig(capacity_log2, replacement))
