"""Minimal tree and minimal graph measurements.

``lfmg_measure`` finds the left-first minimal graph in three searches:

1. a full-window Alpha-Beta with a large table fixes the value ``f`` and a
   best move at every visited node;
2. Alpha-Beta over the same domain with those moves searched first and the
   window ``(f-1, f+1)``, without a table, so transpositions are searched
   again: the minimal tree;
3. the same search with a fresh position-keyed table, so a transposition
   is visited once: the minimal graph. A transposition hit counts as one
   node and no leaf.

``armg_mm`` refines the step-1 moves: within the last ``mm_depth`` plies
every cutoff-causing child is searched, and the one whose subtree (counted
without transpositions) is smallest becomes the best move.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphabeta import alpha_beta, alpha_beta_tt, resolve_depth
from .domains.base import NEG_INF, POS_INF, BudgetExceeded, SearchDomain
from .stats import SearchStats
from .ttable import TTable, tt_new


def knuth_moore_leaves(w: int, d: int) -> int:
    """Leaves of the minimal tree of a uniform tree: w^floor(d/2) + w^ceil(d/2) - 1."""
    if w < 1 or d < 0:
        raise ValueError("need w >= 1 and d >= 0")
    n = w ** (d // 2) + w ** ((d + 1) // 2) - 1
    if n >= 1 << 63:
        raise OverflowError(f"minimal tree of w={w}, d={d} exceeds 64-bit counts")
    return n


def alpha_beta_etc(domain: SearchDomain, alpha: int = NEG_INF, beta: int = POS_INF,
                   depth: int | None = None, tt: TTable | None = None,
                   stats: SearchStats | None = None, etc_min_height: int = 2, **kw) -> int:
    """Alpha-Beta with enhanced transposition cutoffs above ``etc_min_height``."""
    return alpha_beta_tt(domain, alpha, beta, depth, tt, stats,
                         etc_min_height=etc_min_height, **kw)


class BestFirstView(SearchDomain):
    """``domain`` with a chosen child moved to the front at each position.

    ``best`` maps a position key to a child index of the underlying domain.
    """

    def __init__(self, domain: SearchDomain, best: dict[int, int]):
        self.domain = domain
        self.best = best
        self.val_max = domain.val_max

    def root(self):
        return self.domain.root()

    def children(self, pos):
        kids = self.domain.children(pos)
        b = self.best.get(self.domain.key(pos))
        if not b or b >= len(kids):
            return kids
        kids = list(kids)
        return [kids[b], *kids[:b], *kids[b + 1:]]

    def evaluate(self, pos):
        return self.domain.evaluate(pos)

    def is_max(self, pos):
        return self.domain.is_max(pos)

    def key(self, pos):
        return self.domain.key(pos)

    def label(self, pos):
        return self.domain.label(pos)

    def default_depth(self):
        return self.domain.default_depth()


class InsufficientCapacity(RuntimeError):
    pass


@dataclass
class LFMGResult:
    value: int
    search: SearchStats
    minimal_tree: SearchStats
    minimal_graph: SearchStats
    best: dict[int, int]

    @property
    def search_count(self) -> int:
        return self.search.total_nodes

    @property
    def minimal_tree_count(self) -> int:
        return self.minimal_tree.total_nodes

    @property
    def minimal_graph_count(self) -> int:
        return self.minimal_graph.total_nodes


def _best_moves(domain: SearchDomain, tt: TTable, depth: int) -> dict[int, int]:
    """Best moves stored for every position reachable within ``depth``."""
    best: dict[int, int] = {}
    stack = [(domain.root(), depth)]
    seen = set()
    while stack:
        pos, d = stack.pop()
        k = domain.key(pos)
        if k in seen or d == 0:
            continue
        seen.add(k)
        e = tt.lookup(k)
        if e is None:
            continue
        if e.best_move is not None:
            best[k] = e.best_move
        stack.extend((c, d - 1) for c in domain.children(pos))
    return best


def lfmg_measure(domain: SearchDomain, depth: int | None = None,
                 tt_log2: int = 22) -> LFMGResult:
    depth = resolve_depth(domain, depth)
    tt = tt_new(tt_log2)
    s1 = SearchStats()
    f = alpha_beta_tt(domain, NEG_INF, POS_INF, depth, tt, s1)
    if tt.lossy:
        raise InsufficientCapacity(
            f"2^{tt_log2} table dropped {tt.overwrites + tt.rejected} entries in step 1")
    best = _best_moves(domain, tt, depth)
    view = BestFirstView(domain, best)
    s2, s3 = SearchStats(), SearchStats()
    g2 = alpha_beta(view, f - 1, f + 1, depth, stats=s2)
    tt3 = tt_new(tt_log2)
    g3 = alpha_beta_tt(view, f - 1, f + 1, depth, tt3, s3)
    if tt3.lossy:
        raise InsufficientCapacity(f"2^{tt_log2} table dropped entries in step 3")
    assert g2 == f and g3 == f, (f, g2, g3)
    return LFMGResult(f, s1, s2, s3, best)


@dataclass
class ARMGResult:
    value: int
    armg: SearchStats
    lfmg: SearchStats
    changed: int  # best moves replaced by a cheaper cutoff

    @property
    def armg_count(self) -> int:
        return self.armg.total_nodes

    @property
    def lfmg_count(self) -> int:
        return self.lfmg.total_nodes


def armg_mm(domain: SearchDomain, depth: int | None = None, mm_depth: int = 2,
            tt_log2: int = 22, node_budget: int = 10**8) -> ARMGResult:
    """Approximate the real minimal graph by cheapest-cutoff selection MM(mm_depth)."""
    if mm_depth < 1:
        raise ValueError("mm_depth must be >= 1")
    depth = resolve_depth(domain, depth)
    base = lfmg_measure(domain, depth, tt_log2)
    f = base.value
    best = dict(base.best)
    view = BestFirstView(domain, base.best)  # orders by the step-1 moves throughout
    changed = 0
    work = 0

    def cheap(n, a, b, d) -> tuple[int, int]:
        """(value, node count) of a search below ``n`` choosing cheapest cutoffs."""
        nonlocal changed, work
        work += 1
        if work > node_budget:
            raise BudgetExceeded(f"MM({mm_depth}) exceeded {node_budget} nodes")
        kids = view.children(n) if d > 0 else ()
        if not kids:
            return view.evaluate(n), 1
        is_max = view.is_max(n)
        trial = [cheap(c, a, b, d - 1) for c in kids]
        cuts = [i for i, (v, _) in enumerate(trial) if (v >= b if is_max else v <= a)]
        if cuts:
            pick = cuts[0]
            for i in cuts[1:]:
                if trial[i][1] < trial[pick][1]:
                    pick = i
            if pick:
                key = view.key(n)
                orig = view.domain.children(n)
                target = kids[pick]
                tk = view.key(target)
                best[key] = next(j for j, c in enumerate(orig) if view.key(c) == tk)
                changed += 1
            return trial[pick][0], 1 + trial[pick][1]
        # no single child cuts: every child is searched as usual
        cost, g = 1, NEG_INF if is_max else POS_INF
        for c in kids:
            if (g >= b) if is_max else (g <= a):
                break
            v, k = cheap(c, a, b, d - 1)
            cost += k
            if is_max:
                g = max(g, v)
                a = max(a, g)
            else:
                g = min(g, v)
                b = min(b, g)
        return g, cost

    def walk(n, a, b, d) -> int:
        if d <= mm_depth:
            return cheap(n, a, b, d)[0]
        kids = view.children(n)
        if not kids:
            return view.evaluate(n)
        if view.is_max(n):
            g = NEG_INF
            for c in kids:
                if g >= b:
                    break
                g = max(g, walk(c, a, b, d - 1))
                a = max(a, g)
        else:
            g = POS_INF
            for c in kids:
                if g <= a:
                    break
                g = min(g, walk(c, a, b, d - 1))
                b = min(b, g)
        return g

    walk(view.root(), f - 1, f + 1, depth)
    final = SearchStats()
    tt = tt_new(tt_log2)
    g = alpha_beta_tt(BestFirstView(domain, best), f - 1, f + 1, depth, tt, final)
    assert g == f, (f, g)
    return ARMGResult(f, final, base.minimal_graph, changed)
