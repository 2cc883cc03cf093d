"""Stockman's SSS* with an explicit OPEN list, and a checker comparing its
leaf order with MT-SSS* (``mtd_sss``).

States are ``(node, LIVE|SOLVED, merit)`` with nodes identified by their
child-index path from the root. The list is kept in non-increasing merit
order; the six rewrite cases are:

1. SOLVED MIN node: push its parent, purge every state below that parent.
2. SOLVED MAX node with a next brother: push the brother as LIVE.
3. SOLVED MAX node without one: push its parent as SOLVED.
4. LIVE leaf: insert it SOLVED with merit ``min(merit, value)``, ahead of
   lower merits and behind equal merits to its left.
5. LIVE node whose children are MAX nodes: push the first child.
6. LIVE node whose children are MIN nodes: push all children, first on top.

The root (a MAX node) arriving SOLVED ends the search with its merit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .alphabeta import resolve_depth
from .domains.base import POS_INF, BudgetExceeded, SearchDomain
from .domains.trees import path_label
from .mt import mtd_run, sss_config
from .stats import SearchStats, Timer, Tracer, fmt_value
from .ttable import Replacement, TTable, TTConfig

LIVE = "L"
SOLVED = "S"


@dataclass
class OpenEntry:
    path: tuple[int, ...]
    state: str
    merit: int

    def __repr__(self) -> str:
        return f"({path_label(self.path)},{self.state},{fmt_value(self.merit)})"


@dataclass
class SSSResult:
    value: int
    leaves: list[str] = field(default_factory=list)  # labels in evaluation order
    ops: list[tuple[int, OpenEntry]] = field(default_factory=list)
    snapshots: list[list[OpenEntry]] | None = None  # OPEN after each operation


def sss_star(domain: SearchDomain, depth: int | None = None, *,
             stats: SearchStats | None = None, tracer: Tracer | None = None,
             snapshots: bool = False, max_ops: int = 10**7) -> SSSResult:
    """Run SSS* on a transposition-free domain with a MAX root."""
    depth = resolve_depth(domain, depth)
    stats = stats if stats is not None else SearchStats()
    root = domain.root()
    if not domain.is_max(root):
        raise ValueError("SSS* needs a MAX root")
    # path -> (position, remaining depth, children or None if not expanded yet)
    nodes: dict[tuple, list] = {(): [root, depth, None]}

    def kids(path):
        rec = nodes[path]
        if rec[2] is None:
            pos, d = rec[0], rec[1]
            rec[2] = domain.children(pos) if d > 0 else ()
            for i, c in enumerate(rec[2]):
                nodes[path + (i,)] = [c, d - 1, None]
        return rec[2]

    def is_max(path):
        return domain.is_max(nodes[path][0])

    def next_brother(path):
        if not path:
            return None
        sib = path[:-1] + (path[-1] + 1,)
        return sib if sib in nodes else None

    open_: list[OpenEntry] = [OpenEntry((), LIVE, POS_INF)]
    res = SSSResult(0, snapshots=[list(open_)] if snapshots else None)

    def log(case, p):
        res.ops.append((case, p))
        if tracer is not None:
            tracer.emit(f"op {case} node={path_label(p.path)} state={p.state} h={fmt_value(p.merit)}")

    with Timer(stats):
        while True:
            if len(res.ops) >= max_ops:
                raise BudgetExceeded(f"SSS* exceeded {max_ops} operations")
            p = open_.pop(0)
            n, s, h = p.path, p.state, p.merit
            if s == SOLVED and not n:
                res.value = h
                return res
            if s == SOLVED:
                if not is_max(n):
                    log(1, p)
                    m = n[:-1]
                    k = len(m)
                    open_ = [e for e in open_ if e.path[:k] != m]
                    open_.insert(0, OpenEntry(m, SOLVED, h))
                else:
                    nb = next_brother(n)
                    if nb is not None:
                        log(2, p)
                        open_.insert(0, OpenEntry(nb, LIVE, h))
                    else:
                        log(3, p)
                        open_.insert(0, OpenEntry(n[:-1], SOLVED, h))
            else:
                ch = kids(n)
                if not ch:
                    log(4, p)
                    pos = nodes[n][0]
                    v = domain.evaluate(pos)
                    stats.leaf_evals += 1
                    label = domain.label(pos)
                    res.leaves.append(label)
                    if tracer is not None:
                        tracer.leaf(label, v)
                    e = OpenEntry(n, SOLVED, min(h, v))
                    i = 0
                    while i < len(open_) and (open_[i].merit > e.merit or
                                              (open_[i].merit == e.merit and open_[i].path < n)):
                        i += 1
                    open_.insert(i, e)
                else:
                    stats.interior_visits += 1
                    if domain.is_max(ch[0]):
                        log(5, p)
                        open_.insert(0, OpenEntry(n + (0,), LIVE, h))
                    else:
                        log(6, p)
                        open_[0:0] = [OpenEntry(n + (i,), LIVE, h) for i in range(len(ch))]
            if res.snapshots is not None:
                res.snapshots.append(list(open_))


class Equivalence(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class EquivResult:
    status: Equivalence
    index: int | None = None  # first position where the leaf sequences differ
    sss_leaves: list[str] = field(default_factory=list)
    mt_leaves: list[str] = field(default_factory=list)
    detail: str = ""

    def __str__(self) -> str:
        if self.status is Equivalence.PASS:
            return "PASS"
        return f"{self.status.value}({self.detail})"


def check_equivalence(domain: SearchDomain, tt_capacity_log2: int = 20,
                      depth: int | None = None) -> EquivResult:
    """Compare the leaf sequences of :func:`sss_star` and ``mtd_sss``.

    A mismatch after the table dropped entries is INCONCLUSIVE: the two
    are only expected to agree when no stored bound is ever lost.
    """
    sss = sss_star(domain, depth)
    tt = TTable(TTConfig(tt_capacity_log2, Replacement.DEEP_PREFERRED, allow_small=True))
    tr = Tracer()
    r = mtd_run(domain, sss_config(), depth, tt, tracer=tr)
    mt_leaves = tr.leaf_labels()
    out = EquivResult(Equivalence.PASS, sss_leaves=sss.leaves, mt_leaves=mt_leaves)
    if sss.leaves == mt_leaves and sss.value == r.value:
        return out
    idx = next((i for i, (a, b) in enumerate(zip(sss.leaves, mt_leaves)) if a != b),
               min(len(sss.leaves), len(mt_leaves)))
    out.index = idx
    a = sss.leaves[idx] if idx < len(sss.leaves) else "end"
    b = mt_leaves[idx] if idx < len(mt_leaves) else "end"
    if tt.lossy:
        out.status = Equivalence.INCONCLUSIVE
        out.detail = f"table dropped {tt.overwrites + tt.rejected} entries; first difference at leaf {idx}"
    else:
        out.status = Equivalence.FAIL
        out.detail = f"leaf {idx}: sss_star {a}, mtd_sss {b}; values {sss.value} vs {r.value}"
    return out
