"""MT (null-window Alpha-Beta with bound storage) and the MTD drivers.

``mt(γ)`` answers "is the value at least γ?" with a fail-soft bound and
stores that bound in the table. A driver repeatedly calls MT, narrowing the
bracket ``f_minus <= f <= f_plus`` until it closes:

=============  ======================  =======================================
driver         first γ                 next γ
=============  ======================  =======================================
mtd_sss        +inf                    g
mtd_dual       -inf + 1                g + 1
mtd_f          f0                      g + 1 after a fail high, else g
mtd_bi         0                       ceil((f_plus + f_minus) / 2), clipped
                                       to [-val_max, val_max]
mtd_step       +inf                    max(f_minus + 1, g - stepsize)
=============  ======================  =======================================

``mtd_best`` instead separates the best root move from the rest without
necessarily fixing the root value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .alphabeta import HistoryTable, child_order, resolve_depth, update_history
from .domains.base import NEG_INF, POS_INF, SearchDomain
from .stats import SearchStats, Timer, Tracer
from .ttable import TTable, tt_new


class DriverError(RuntimeError):
    """A driver produced an illegal bound or failed to converge."""


def mt(domain: SearchDomain, gamma: int, depth: int | None = None, tt: TTable | None = None,
       stats: SearchStats | None = None, *, pos=None, tracer: Tracer | None = None,
       one_bound: bool = False, tt_order: bool = False,
       history: HistoryTable | None = None) -> int:
    """Null-window test of ``pos`` (default: root) against ``gamma``.

    Returns ``g >= gamma`` (a lower bound) or ``g < gamma`` (an upper
    bound). Child bounds are read from the table before descending; a child
    whose stored bound already decides the test is not entered.

    Each call stores one bound per node; by default it is merged into the
    entry so the opposite side survives from earlier calls at the same
    draft. ``one_bound`` drops the opposite side instead.
    ``tt_order`` searches the stored best move first.
    """
    if not NEG_INF < gamma <= POS_INF:
        raise ValueError(f"gamma {gamma} outside (-inf, +inf]")
    depth = resolve_depth(domain, depth)
    tt = tt if tt is not None else tt_new()
    stats = stats if stats is not None else SearchStats()
    merge = not one_bound

    def child_bound(c, d, upper: bool) -> int:
        stats.tt_probes += 1
        e = tt.probe(domain.key(c), d)
        if e is None:
            return POS_INF if upper else NEG_INF
        stats.tt_hits += 1
        return e.upper if upper else e.lower

    def test(n, d):
        key = domain.key(n)
        kids = domain.children(n) if d > 0 else ()
        best = None
        if not kids:
            stats.tt_probes += 1
            e = tt.probe(key, d)
            if e is None or (e.lower == NEG_INF and e.upper == POS_INF):
                stats.leaf_evals += 1
                g = domain.evaluate(n)
                if tracer is not None:
                    tracer.leaf(domain.label(n), g)
            else:
                stats.tt_hits += 1
                stats.tt_cutoffs += 1
                g = e.lower if e.upper == POS_INF else e.upper
                if tracer is not None:
                    tracer.ttcut(domain.label(n), g)
        else:
            stats.interior_visits += 1
            hint = tt.lookup(key) if tt_order else None
            order = child_order(domain, n, len(kids), hint.best_move if hint else None, history)
            if domain.is_max(n):
                g = NEG_INF
                for i in order:
                    if g >= gamma:
                        break
                    c = kids[i]
                    v = child_bound(c, d - 1, True)
                    if v >= gamma:
                        v = test(c, d - 1)
                    if v > g:
                        g, best = v, i
            else:
                g = POS_INF
                for i in order:
                    if g < gamma:
                        break
                    c = kids[i]
                    v = child_bound(c, d - 1, False)
                    if v < gamma:
                        v = test(c, d - 1)
                    if v < g:
                        g, best = v, i
            if history is not None:
                update_history(history, domain.move_keys(n, len(kids))[best], d)
        if g >= gamma:
            tt.store(key, g, POS_INF, best, d, merge=merge)
        else:
            tt.store(key, NEG_INF, g, best, d, merge=merge)
        return g

    with Timer(stats):
        return test(domain.root() if pos is None else pos, depth)


# --- drivers -----------------------------------------------------------------

# next-bound rule: (g, fail_high, f_minus, f_plus) -> next gamma
NextRule = Callable[[int, bool, int, int], int]


@dataclass(frozen=True)
class MTDConfig:
    first: int
    next_rule: NextRule
    name: str = "mtd"
    one_bound: bool = False


@dataclass
class MTDResult:
    value: int
    bounds: list[int]  # gamma of every MT call, in order
    values: list[int]  # MT result of every call

    @property
    def calls(self) -> int:
        return len(self.bounds)


def mtd_run(domain: SearchDomain, cfg: MTDConfig, depth: int | None = None,
            tt: TTable | None = None, stats: SearchStats | None = None, *,
            tracer: Tracer | None = None, tt_order: bool = False,
            history: HistoryTable | None = None, one_bound: bool | None = None) -> MTDResult:
    """Generic driver loop; returns the value with the bound sequence."""
    if one_bound is None:
        one_bound = cfg.one_bound
    depth = resolve_depth(domain, depth)
    tt = tt if tt is not None else tt_new()
    stats = stats if stats is not None else SearchStats()
    f_minus, f_plus = NEG_INF, POS_INF
    bound = cfg.first
    cap = 4 * domain.val_max + 4
    res = MTDResult(0, [], [])
    while True:
        if not (NEG_INF < bound <= POS_INF and f_minus < bound <= f_plus):
            raise DriverError(f"{cfg.name}: bound {bound} outside ({f_minus}, {f_plus}]")
        if res.calls >= cap:
            raise DriverError(f"{cfg.name}: no convergence after {cap} calls")
        leaves = stats.leaf_evals
        g = mt(domain, bound, depth, tt, stats, tracer=tracer, one_bound=one_bound,
               tt_order=tt_order, history=history)
        stats.mt_calls += 1
        res.bounds.append(bound)
        res.values.append(g)
        if tracer is not None:
            tracer.mt_pass(res.calls, bound, g, stats.leaf_evals - leaves)
        fail_high = g >= bound
        if fail_high:
            f_minus = g
        else:
            f_plus = g
        if f_minus >= f_plus:
            res.value = g
            return res
        bound = cfg.next_rule(g, fail_high, f_minus, f_plus)


def mtd(domain: SearchDomain, cfg: MTDConfig, depth: int | None = None,
        tt: TTable | None = None, stats: SearchStats | None = None, **kw) -> int:
    return mtd_run(domain, cfg, depth, tt, stats, **kw).value


def sss_config() -> MTDConfig:
    return MTDConfig(POS_INF, lambda g, hi, fm, fp: g, "mtd_sss")


def dual_config() -> MTDConfig:
    return MTDConfig(NEG_INF + 1, lambda g, hi, fm, fp: g + 1, "mtd_dual")


def f_config(f0: int) -> MTDConfig:
    if not NEG_INF < f0 < POS_INF:
        raise ValueError("f0 must be finite")
    return MTDConfig(f0, lambda g, hi, fm, fp: g + 1 if hi else g, "mtd_f")


def bi_config(val_max: int) -> MTDConfig:
    def bisect(g, hi, fm, fp):
        top, bot = min(fp, val_max), max(fm, -val_max)
        b = -((-(top + bot)) // 2)  # ceiling of the average
        return min(max(b, fm + 1), fp)

    return MTDConfig(bisect(0, False, -val_max, val_max), bisect, "mtd_bi")


def step_config(stepsize: int) -> MTDConfig:
    if stepsize < 1:
        raise ValueError("stepsize must be >= 1")
    return MTDConfig(POS_INF, lambda g, hi, fm, fp: min(max(fm + 1, g - stepsize), fp),
                     f"mtd_step({stepsize})")


def mtd_sss(domain, depth=None, tt=None, stats=None, **kw) -> int:
    """MTD(+inf): a sequence of falling upper bounds (SSS* order)."""
    return mtd(domain, sss_config(), depth, tt, stats, **kw)


def mtd_dual(domain, depth=None, tt=None, stats=None, **kw) -> int:
    """MTD(-inf): a sequence of rising lower bounds (DUAL* order)."""
    return mtd(domain, dual_config(), depth, tt, stats, **kw)


def mtd_f(domain, f0: int, depth=None, tt=None, stats=None, **kw) -> int:
    """MTD(f) starting from the guess ``f0``."""
    return mtd(domain, f_config(f0), depth, tt, stats, **kw)


def mtd_bi(domain, depth=None, tt=None, stats=None, **kw) -> int:
    """Bisection of [-val_max, val_max]."""
    return mtd(domain, bi_config(domain.val_max), depth, tt, stats, **kw)


def mtd_step(domain, stepsize: int, depth=None, tt=None, stats=None, **kw) -> int:
    """Like MTD(+inf) but dropping at least ``stepsize`` below each upper bound."""
    return mtd(domain, step_config(stepsize), depth, tt, stats, **kw)


# --- best move ---------------------------------------------------------------

@dataclass
class BestMoveResult:
    move: int
    lower: list[int]  # per root child, from the root player's side
    upper: list[int]
    calls: int


def mtd_best_run(domain: SearchDomain, depth: int | None = None, tt: TTable | None = None,
                 stats: SearchStats | None = None, *, tracer: Tracer | None = None,
                 one_bound: bool = False, tt_order: bool = False) -> BestMoveResult:
    """Find the left-most best root move with null-window tests on root children.

    Bounds are kept from the root player's side (negated for a MIN root).
    Child ``i`` is refuted once its upper bound drops below the candidate's
    lower bound (or to it, for children right of the candidate); the
    candidate is the left-most child with the highest lower bound.
    """
    depth = resolve_depth(domain, depth)
    tt = tt if tt is not None else tt_new()
    stats = stats if stats is not None else SearchStats()
    root = domain.root()
    kids = domain.children(root) if depth > 0 else ()
    if not kids:
        raise ValueError("root has no moves")
    k = len(kids)
    if k == 1:
        return BestMoveResult(0, [NEG_INF], [POS_INF], 0)
    sign = 1 if domain.is_max(root) else -1
    lo, hi = [NEG_INF] * k, [POS_INF] * k
    calls = 0

    def test(i: int, gamma: int):
        """Decide child value >= gamma (root player's view) and tighten its bounds."""
        nonlocal calls
        g = mt(domain, gamma if sign > 0 else 1 - gamma, depth - 1, tt, stats, pos=kids[i],
               tracer=tracer, one_bound=one_bound, tt_order=tt_order)
        stats.mt_calls += 1
        calls += 1
        pg = sign * g
        if pg >= gamma:
            lo[i] = max(lo[i], pg)
        else:
            hi[i] = min(hi[i], pg)
        if tracer is not None:
            tracer.emit(f"best {i} gamma={gamma} g={pg}")

    e = tt.lookup(domain.key(root))
    c = e.best_move if e is not None and e.best_move is not None and e.best_move < k else 0
    test(c, NEG_INF + 1)
    cap = 4 * (domain.val_max + 1) * k
    while True:
        if calls > cap:
            raise DriverError(f"mtd_best: no decision after {cap} calls")
        top = max(lo)
        c = lo.index(top)
        need = [top - (1 if i < c else 0) for i in range(k)]
        pending = [i for i in range(k) if i != c and hi[i] > need[i]]
        if not pending:
            return BestMoveResult(c, lo, hi, calls)
        open_ = [i for i in pending if hi[i] == POS_INF]
        if open_:
            j = open_[0]
            test(j, need[j] + 1)
            continue
        target = max(hi[i] + (1 if i < c else 0) for i in pending)
        if hi[c] >= target:
            test(c, target)
        else:
            j = next(i for i in pending if hi[i] + (1 if i < c else 0) == target)
            test(j, need[j] + 1)


def mtd_best(domain, depth=None, tt=None, stats=None, **kw) -> int:
    """Index of the left-most best root move."""
    return mtd_best_run(domain, depth, tt, stats, **kw).move
