"""NegaScout in the minimax view, with transposition table, and its
aspiration-window wrapper.

The first child is searched with the full window, later siblings with a
null window just above (max node) or below (min node) the best value so
far; a sibling that beats it is re-searched with a wide window unless it is
within two plies of the leaves, where a fail-soft null-window result is
already exact.
"""

from __future__ import annotations

from .alphabeta import HistoryTable, aspwin, check_window, child_order, resolve_depth, update_history
from .domains.base import NEG_INF, POS_INF, SearchDomain
from .stats import SearchStats, Timer, Tracer
from .ttable import TTable, tt_new


def negascout(domain: SearchDomain, alpha: int = NEG_INF, beta: int = POS_INF,
              depth: int | None = None, tt: TTable | None = None,
              stats: SearchStats | None = None, *, pos=None, tracer: Tracer | None = None,
              history: HistoryTable | None = None) -> int:
    check_window(alpha, beta)
    depth = resolve_depth(domain, depth)
    tt = tt if tt is not None else tt_new()
    stats = stats if stats is not None else SearchStats()

    def ns(n, a, b, d):
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
            a, b = max(a, lo), min(b, hi)
        kids = domain.children(n) if d > 0 else ()
        best = None
        if not kids:
            stats.leaf_evals += 1
            g = domain.evaluate(n)
            if tracer is not None:
                tracer.leaf(domain.label(n), g)
        else:
            stats.interior_visits += 1
            hint = tt.lookup(key)
            order = iter(child_order(domain, n, len(kids), hint.best_move if hint else None, history))
            best = next(order)
            g = ns(kids[best], a, b, d - 1)
            # children of a node at depth 2 are at most one ply above the leaves
            exact_below = d <= 2
            if domain.is_max(n):
                for i in order:
                    if g >= b:
                        break
                    c = kids[i]
                    edge = max(g, a)
                    t = ns(c, edge, edge + 1, d - 1)
                    if edge < t < b and not (exact_below or not domain.children(c)):
                        stats.researches += 1
                        t = ns(c, t, b, d - 1)
                    if t > g:
                        g, best = t, i
            else:
                for i in order:
                    if g <= a:
                        break
                    c = kids[i]
                    edge = min(g, b)
                    t = ns(c, edge - 1, edge, d - 1)
                    if a < t < edge and not (exact_below or not domain.children(c)):
                        stats.researches += 1
                        t = ns(c, a, t, d - 1)
                    if t < g:
                        g, best = t, i
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
        return ns(domain.root() if pos is None else pos, alpha, beta, depth)


def aspiration_negascout(domain: SearchDomain, estimate: int, delta: int,
                         depth: int | None = None, tt: TTable | None = None,
                         stats: SearchStats | None = None, **kw) -> int:
    """NegaScout inside an aspiration window around ``estimate``."""
    return aspwin(domain, estimate, delta, depth, tt, stats, search=negascout, **kw)
