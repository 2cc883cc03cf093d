"""Depth-first reference searches: minimax, fail-soft Alpha-Beta with and
without a transposition table, aspiration windows, iterative deepening and
move ordering (table move first, then history scores).

All searches use the minimax view: the root's ``is_max`` decides whether it
maximizes, values are always from MAX's point of view. ``depth`` counts the
remaining plies; a node is a leaf at depth 0 or when it has no children.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from .domains.base import NEG_INF, POS_INF, BudgetExceeded, SearchDomain
from .proof import ProofNode, ProofTree
from .stats import SearchStats, Timer, Tracer
from .ttable import TTable, tt_new


class WindowError(ValueError):
    pass


def check_window(alpha: int, beta: int):
    if not alpha < beta:
        raise WindowError(f"empty window ({alpha}, {beta})")


def resolve_depth(domain: SearchDomain, depth: int | None) -> int:
    if depth is None:
        depth = domain.default_depth()
        if depth is None:
            raise ValueError(f"{type(domain).__name__} needs an explicit search depth")
    if depth < 0:
        raise ValueError(f"negative depth {depth}")
    return depth


# --- move ordering -----------------------------------------------------------

class HistoryTable:
    """History heuristic scores keyed by the domain's move feature."""

    def __init__(self, base: int = 2):
        self.base = base
        self.scores: dict[Hashable, int] = {}

    def score(self, move: Hashable) -> int:
        return self.scores.get(move, 0)

    def clear(self):
        self.scores.clear()


def update_history(hist: HistoryTable, move: Hashable, depth: int):
    """Credit ``move`` with ``base ** depth`` (2^depth by default)."""
    if depth < 1:
        raise ValueError("history updates need depth >= 1")
    hist.scores[move] = hist.scores.get(move, 0) + hist.base ** depth


def order_moves(moves: Sequence, tt_best=None, hist: HistoryTable | None = None) -> list:
    """Table move first, the rest by descending history score (stable)."""
    out = list(moves)
    if hist is not None:
        out.sort(key=lambda m: -hist.score(m))
    if tt_best is not None and tt_best in out:
        out.remove(tt_best)
        out.insert(0, tt_best)
    return out


def child_order(domain: SearchDomain, pos, n: int, best: int | None,
                hist: HistoryTable | None) -> Sequence[int]:
    """Child indices in search order for a node with ``n`` children."""
    if hist is None:
        if best is None or best == 0 or best >= n:
            return range(n)
        return [best, *range(best), *range(best + 1, n)]
    keys = domain.move_keys(pos, n)
    scores = hist.scores
    idx = sorted(range(n), key=lambda i: -scores.get(keys[i], 0))
    if best is not None and best < n:
        idx.remove(best)
        idx.insert(0, best)
    return idx


# --- minimax oracle ----------------------------------------------------------

def minimax(domain: SearchDomain, depth: int | None = None, *, pos=None,
            stats: SearchStats | None = None, node_budget: int = 10**8) -> int:
    """Exact value by visiting every node (no pruning)."""
    depth = resolve_depth(domain, depth)
    stats = stats if stats is not None else SearchStats()
    count = 0

    def mm(n, d):
        nonlocal count
        count += 1
        if count > node_budget:
            raise BudgetExceeded(f"minimax exceeded {node_budget} nodes")
        kids = domain.children(n) if d > 0 else ()
        if not kids:
            stats.leaf_evals += 1
            return domain.evaluate(n)
        stats.interior_visits += 1
        vals = [mm(c, d - 1) for c in kids]
        return max(vals) if domain.is_max(n) else min(vals)

    with Timer(stats):
        return mm(domain.root() if pos is None else pos, depth)


def child_values(domain: SearchDomain, depth: int | None = None, pos=None) -> list[int]:
    """Oracle values of the root's children."""
    depth = resolve_depth(domain, depth)
    pos = domain.root() if pos is None else pos
    return [minimax(domain, depth - 1, pos=c) for c in domain.children(pos)]


# --- Alpha-Beta --------------------------------------------------------------

def alpha_beta(domain: SearchDomain, alpha: int = NEG_INF, beta: int = POS_INF,
               depth: int | None = None, *, pos=None, stats: SearchStats | None = None,
               tracer: Tracer | None = None, proof: ProofTree | None = None) -> int:
    """Fail-soft Alpha-Beta without memory.

    If ``proof`` is given, every visited node is recorded so the returned
    bound can be checked afterwards (see :func:`proof.verify_postcondition`).
    """
    check_window(alpha, beta)
    depth = resolve_depth(domain, depth)
    stats = stats if stats is not None else SearchStats()

    def ab(n, a, b, d, rec: list | None):
        kids = domain.children(n) if d > 0 else ()
        if not kids:
            stats.leaf_evals += 1
            g = domain.evaluate(n)
            if tracer is not None:
                tracer.leaf(domain.label(n), g)
            if rec is not None:
                rec.append(ProofNode(n, None, g, 0))
            return g
        stats.interior_visits += 1
        is_max = domain.is_max(n)
        node = None
        sub = None
        if rec is not None:
            node = ProofNode(n, is_max, None, len(kids))
            rec.append(node)
        if is_max:
            g = NEG_INF
            for i, c in enumerate(kids):
                if g >= b:
                    break
                if node is not None:
                    sub = []
                g = max(g, ab(c, a, b, d - 1, sub))
                if node is not None:
                    node.children.append((i, sub[0]))
                a = max(a, g)
        else:
            g = POS_INF
            for i, c in enumerate(kids):
                if g <= a:
                    break
                if node is not None:
                    sub = []
                g = min(g, ab(c, a, b, d - 1, sub))
                if node is not None:
                    node.children.append((i, sub[0]))
                b = min(b, g)
        if node is not None:
            node.value = g
        return g

    root = domain.root() if pos is None else pos
    rec = [] if proof is not None else None
    with Timer(stats):
        g = ab(root, alpha, beta, depth, rec)
    if proof is not None:
        proof.root = rec[0]
        proof.alpha, proof.beta, proof.result, proof.depth = alpha, beta, g, depth
    return g


def alpha_beta_tt(domain: SearchDomain, alpha: int = NEG_INF, beta: int = POS_INF,
                  depth: int | None = None, tt: TTable | None = None,
                  stats: SearchStats | None = None, *, pos=None,
                  tracer: Tracer | None = None, history: HistoryTable | None = None,
                  etc_min_height: int | None = None) -> int:
    """Fail-soft Alpha-Beta storing bounds in ``tt``.

    The stored best move is searched first. With ``etc_min_height`` set,
    nodes more than that many plies above the leaves first probe all their
    children for a transposition cutoff (ETC).
    """
    check_window(alpha, beta)
    depth = resolve_depth(domain, depth)
    tt = tt if tt is not None else tt_new()
    stats = stats if stats is not None else SearchStats()
    etc = etc_min_height if etc_min_height is not None else POS_INF

    def ab(n, a, b, d):
        key = domain.key(n)
        stats.tt_probes += 1
        e = tt.probe(key, d)
        if e is not None:
            stats.tt_hits += 1
            lo, hi = e.lower, e.upper
            if lo >= b or lo == hi:
                return _ttcut(n, lo)
            if hi <= a:
                return _ttcut(n, hi)
            if lo > a:
                a = lo
            if hi < b:
                b = hi
        kids = domain.children(n) if d > 0 else ()
        best = None
        if not kids:
            stats.leaf_evals += 1
            g = domain.evaluate(n)
            if tracer is not None:
                tracer.leaf(domain.label(n), g)
        else:
            is_max = domain.is_max(n)
            if d > etc:
                for c in kids:
                    stats.tt_probes += 1
                    ce = tt.probe(domain.key(c), d - 1)
                    if ce is None:
                        continue
                    stats.tt_hits += 1
                    if is_max and ce.lower >= b:
                        return _ttcut(n, ce.lower)
                    if not is_max and ce.upper <= a:
                        return _ttcut(n, ce.upper)
            stats.interior_visits += 1
            hint = tt.lookup(key)
            order = child_order(domain, n, len(kids), hint.best_move if hint else None, history)
            if is_max:
                g = NEG_INF
                aa = a
                for i in order:
                    if g >= b:
                        break
                    v = ab(kids[i], aa, b, d - 1)
                    if v > g:
                        g, best = v, i
                        if g > aa:
                            aa = g
            else:
                g = POS_INF
                bb = b
                for i in order:
                    if g <= a:
                        break
                    v = ab(kids[i], a, bb, d - 1)
                    if v < g:
                        g, best = v, i
                        if g < bb:
                            bb = g
            if history is not None:
                update_history(history, domain.move_keys(n, len(kids))[best], d)
        tt.store(key, g if g > a else NEG_INF, g if g < b else POS_INF, best, d)
        return g

    def _ttcut(n, v):
        stats.tt_cutoffs += 1
        if tracer is not None:
            tracer.ttcut(domain.label(n), v)
        return v

    with Timer(stats):
        return ab(domain.root() if pos is None else pos, alpha, beta, depth)


def aspwin(domain: SearchDomain, estimate: int, delta: int, depth: int | None = None,
           tt: TTable | None = None, stats: SearchStats | None = None, *,
           search: Callable | None = None, tracer: Tracer | None = None, **kw) -> int:
    """Aspiration search around ``estimate``; one re-search on failure.

    ``search`` is any window search with the :func:`alpha_beta_tt`
    signature (the default). Re-searches are counted in ``stats.researches``.
    """
    if delta < 1:
        raise ValueError("delta must be >= 1")
    search = search or alpha_beta_tt
    tt = tt if tt is not None else tt_new()
    stats = stats if stats is not None else SearchStats()
    a, b = max(NEG_INF, estimate - delta), min(POS_INF, estimate + delta)
    g = search(domain, a, b, depth, tt, stats, tracer=tracer, **kw)
    if g <= a:
        stats.researches += 1
        g = search(domain, NEG_INF, g, depth, tt, stats, tracer=tracer, **kw)
    elif g >= b:
        stats.researches += 1
        g = search(domain, g, POS_INF, depth, tt, stats, tracer=tracer, **kw)
    return g


# --- iterative deepening -----------------------------------------------------

# A driver searches ``domain`` to ``depth`` with a shared table and returns the
# value; ``guess`` is the previous iteration's value (or the first guess).
Driver = Callable[[SearchDomain, int, TTable, SearchStats, int], int]


@dataclass
class Iteration:
    depth: int
    value: int
    best_move: int | None
    stats: SearchStats  # this iteration only
    cumulative: SearchStats


@dataclass
class IDResult:
    value: int
    iterations: list[Iteration] = field(default_factory=list)

    @property
    def best_move(self) -> int | None:
        return self.iterations[-1].best_move if self.iterations else None

    @property
    def stats(self) -> SearchStats:
        return self.iterations[-1].cumulative if self.iterations else SearchStats()


def id_depths(max_depth: int, step: int = 1) -> list[int]:
    """Iteration depths ending exactly at ``max_depth``, ``step`` apart."""
    if max_depth < 1 or step not in (1, 2):
        raise ValueError("need max_depth >= 1 and step in {1, 2}")
    return list(range(max_depth, 0, -step))[::-1]


def iterative_deepening(algo: Driver, domain: SearchDomain, max_depth: int, step: int = 1,
                        tt: TTable | None = None, stats: SearchStats | None = None,
                        first_guess: int = 0) -> IDResult:
    """Run ``algo`` at increasing depths sharing one table.

    The table's best move at each node (hence the previous iteration's
    principal variation) is searched first in the next iteration.
    """
    tt = tt if tt is not None else tt_new()
    stats = stats if stats is not None else SearchStats()
    res = IDResult(first_guess)
    guess = first_guess
    root_key = domain.key(domain.root())
    for d in id_depths(max_depth, step):
        before = stats.copy()
        tt.new_search()
        guess = algo(domain, d, tt, stats, guess)
        e = tt.lookup(root_key)
        res.iterations.append(Iteration(d, guess, e.best_move if e else None,
                                        stats - before, stats.copy()))
    res.value = guess
    return res
