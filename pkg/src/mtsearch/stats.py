"""Search counters and the optional text trace shared by all algorithms."""

from __future__ import annotations

import time
from dataclasses import dataclass, fields
from typing import IO

from .domains.base import NEG_INF, POS_INF

COUNTERS = ("leaf_evals", "interior_visits", "tt_cutoffs", "tt_probes", "tt_hits",
            "mt_calls", "researches")


@dataclass
class SearchStats:
    leaf_evals: int = 0
    interior_visits: int = 0
    tt_cutoffs: int = 0  # nodes answered from the table without expansion
    tt_probes: int = 0
    tt_hits: int = 0
    mt_calls: int = 0
    researches: int = 0
    elapsed: float = 0.0  # seconds

    @property
    def total_nodes(self) -> int:
        return self.leaf_evals + self.interior_visits + self.tt_cutoffs

    def copy(self) -> SearchStats:
        return SearchStats(**{f.name: getattr(self, f.name) for f in fields(self)})

    def __add__(self, other: SearchStats) -> SearchStats:
        return SearchStats(**{f.name: getattr(self, f.name) + getattr(other, f.name)
                              for f in fields(self)})

    def __sub__(self, other: SearchStats) -> SearchStats:
        return SearchStats(**{f.name: getattr(self, f.name) - getattr(other, f.name)
                              for f in fields(self)})

    def as_dict(self) -> dict:
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["total_nodes"] = self.total_nodes
        return d


class Timer:
    """Context manager adding wall time to ``stats.elapsed``."""

    def __init__(self, stats: SearchStats):
        self.stats = stats

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.stats.elapsed += time.perf_counter() - self.t0
        return False


class Tracer:
    """Collects trace lines; optionally echoes them to a stream."""

    def __init__(self, stream: IO[str] | None = None):
        self.lines: list[str] = []
        self.stream = stream

    def emit(self, line: str):
        self.lines.append(line)
        if self.stream is not None:
            self.stream.write(line + "\n")

    def leaf(self, label: str, value: int):
        self.emit(f"leaf {label} {value}")

    def ttcut(self, label: str, bound: int):
        self.emit(f"ttcut {label} {fmt_value(bound)}")

    def mt_pass(self, k: int, gamma: int, g: int, leaves: int):
        self.emit(f"pass {k} gamma={fmt_value(gamma)} g={fmt_value(g)} leaves={leaves}")

    def leaf_values(self) -> list[int]:
        return [int(line.rsplit(" ", 1)[1]) for line in self.lines if line.startswith("leaf ")]

    def leaf_labels(self) -> list[str]:
        return [line.split(" ")[1] for line in self.lines if line.startswith("leaf ")]

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)


def fmt_value(v: int) -> str:
    if v >= POS_INF:
        return "+inf"
    if v <= NEG_INF:
        return "-inf"
    return str(v)
