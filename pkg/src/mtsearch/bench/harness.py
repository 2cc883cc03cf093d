"""Experiment runners: algorithm comparison under iterative deepening,
table-size sweeps, minimal-graph measurements and traces. Results are
:class:`CsvRow` lists; ``write_csv`` sorts them and writes a header.
"""

from __future__ import annotations

import csv
import io
import statistics
from dataclasses import astuple, dataclass, field, fields

from ..alphabeta import alpha_beta, alpha_beta_tt, iterative_deepening
from ..domains import SearchDomain
from ..mingraph import alpha_beta_etc, armg_mm, lfmg_measure
from ..mt import mtd_best_run, mtd_run, bi_config, dual_config, f_config, sss_config, step_config
from ..negascout import negascout
from ..stats import SearchStats, Tracer
from ..stockman import sss_star
from ..ttable import Replacement, TTable, TTConfig
from .config import ExperimentConfig
from .registry import Params, make_driver, parse_domain, synth_spec


class ValueDisagreement(RuntimeError):
    """Two algorithms returned different values for the same search."""


@dataclass(order=True)
class CsvRow:
    domain: str
    algorithm: str
    depth: int
    tt_log2: int
    seed: int
    leaf_evals: int
    interior: int
    total_nodes: int
    tt_hits: int
    mt_calls: int
    value: int
    elapsed_us: int = field(compare=False)

    @classmethod
    def from_stats(cls, domain, algorithm, depth, tt_log2, seed, st: SearchStats, value):
        return cls(domain, algorithm, depth, tt_log2, seed, st.leaf_evals, st.interior_visits,
                   st.total_nodes, st.tt_hits, st.mt_calls, value, round(st.elapsed * 1e6))


CSV_COLUMNS = tuple(f.name for f in fields(CsvRow))


def write_csv(rows, path_or_stream=None, columns=None) -> str:
    """Sorted rows with a header, LF line endings; returns the text."""
    columns = columns or CSV_COLUMNS
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in sorted(rows):
        w.writerow(astuple(r) if hasattr(r, "__dataclass_fields__") else r)
    text = buf.getvalue()
    if isinstance(path_or_stream, str):
        with open(path_or_stream, "w", newline="") as fh:
            fh.write(text)
    elif path_or_stream is not None:
        path_or_stream.write(text)
    return text


def instances(cfg: ExperimentConfig) -> list[tuple[int, SearchDomain]]:
    """(seed column, domain) pairs an experiment runs on."""
    from ..domains import opening_suite, othello6, synth_tree
    name, _, arg = cfg.domain.partition(":")
    if name == "othello6" and not arg and cfg.positions:
        suite = opening_suite(cfg.positions, cfg.suite_seed)
        return [(i, othello6(p)) for i, p in enumerate(suite)]
    if name == "synth" and cfg.seeds:
        kw = dict(item.split("=", 1) for item in arg.split(",") if item)
        out = []
        for s in cfg.seeds:
            kw["seed"] = str(s)
            out.append((s, synth_tree(synth_spec(kw))))
        return out
    return [(cfg.seeds[0] if cfg.seeds else 0, parse_domain(cfg.domain))]


def _params(cfg: ExperimentConfig) -> Params:
    return Params(delta=cfg.delta, stepsize=cfg.stepsize, tt_order=True)


def _table(log2: int, replacement: str = "deep") -> TTable:
    return TTable(TTConfig(log2, Replacement(replacement)))


def run_id(domain: SearchDomain, algorithm: str, depth: int, tt_log2: int, step: int = 1,
           params: Params = Params(), replacement: str = "deep"):
    """One iterative-deepening run with a fresh table."""
    first = domain.evaluate(domain.root())
    return iterative_deepening(make_driver(algorithm, params), domain, depth, step,
                               _table(tt_log2, replacement), first_guess=first)


def _check_agreement(rows: list[CsvRow]):
    groups: dict[tuple, dict[str, int]] = {}
    for r in rows:
        groups.setdefault((r.domain, r.depth, r.seed, r.tt_log2), {})[r.algorithm] = r.value
    for key, vals in groups.items():
        if len(set(vals.values())) > 1:
            dump = ", ".join(f"{a}={v}" for a, v in sorted(vals.items()))
            raise ValueDisagreement(f"domain={key[0]} depth={key[1]} seed={key[2]}: {dump}")


def run_compare(cfg: ExperimentConfig) -> list[CsvRow]:
    """Per-iteration cumulative rows for every (instance, algorithm)."""
    rows = []
    log2 = cfg.tt_log2[-1]
    for seed, dom in instances(cfg):
        for algo in cfg.algorithms:
            res = run_id(dom, algo, cfg.depth, log2, cfg.step, _params(cfg), cfg.replacement)
            for it in res.iterations:
                rows.append(CsvRow.from_stats(cfg.domain, algo, it.depth, log2, seed,
                                              it.cumulative, it.value))
    _check_agreement(rows)
    if cfg.output:
        write_csv(rows, cfg.output)
    return rows


@dataclass
class SweepResult:
    rows: list[CsvRow]
    level_off: dict[tuple[str, int], int | None]  # (algorithm, seed) -> tt_log2


def level_off_point(capacities: list[int], counts: list[int]) -> int | None:
    """Smallest capacity from which the count no longer changes (None if the
    last two capacities still differ)."""
    if len(counts) < 2 or counts[-1] != counts[-2]:
        return None
    i = len(counts) - 1
    while i > 0 and counts[i - 1] == counts[-1]:
        i -= 1
    return capacities[i]


def run_memsweep(cfg: ExperimentConfig) -> SweepResult:
    """Final cumulative ID counts for every table size, algorithm and instance."""
    rows = []
    caps = sorted(cfg.tt_log2)
    for seed, dom in instances(cfg):
        for algo in cfg.algorithms:
            for log2 in caps:
                res = run_id(dom, algo, cfg.depth, log2, cfg.step, _params(cfg), cfg.replacement)
                rows.append(CsvRow.from_stats(cfg.domain, algo, cfg.depth, log2, seed,
                                              res.stats, res.value))
    groups: dict[tuple, list[CsvRow]] = {}
    for r in rows:
        groups.setdefault((r.algorithm, r.seed), []).append(r)
    level = {}
    for key, rs in groups.items():
        rs.sort(key=lambda r: r.tt_log2)
        level[key] = level_off_point([r.tt_log2 for r in rs], [r.leaf_evals for r in rs])
    # every table size must still produce the right value
    by_seed: dict[int, set] = {}
    for r in rows:
        by_seed.setdefault(r.seed, set()).add(r.value)
    for seed, vals in by_seed.items():
        if len(vals) > 1:
            raise ValueDisagreement(f"seed {seed}: values {sorted(vals)} across table sizes")
    if cfg.output:
        write_csv(rows, cfg.output)
    return SweepResult(rows, level)


def geometric_mean(xs) -> float:
    return statistics.geometric_mean(xs)


def cumulative_ratio(rows: list[CsvRow], num: str, den: str, depth: int,
                     metric: str = "leaf_evals") -> float:
    """Geometric mean over instances of num/den for the cumulative counts at ``depth``."""
    by = {(r.algorithm, r.seed): getattr(r, metric) for r in rows if r.depth == depth}
    seeds = sorted({s for a, s in by if a == num} & {s for a, s in by if a == den})
    if not seeds:
        raise ValueError(f"no rows for {num} and {den} at depth {depth}")
    return geometric_mean([by[num, s] / by[den, s] for s in seeds])


# --- minimal graphs ----------------------------------------------------------

MINGRAPH_COLUMNS = ("domain", "depth", "phase", "leaf", "interior", "total")


def run_mingraph(domain_spec: str, depth: int, mm_depth: int | None = None,
                 tt_log2: int = 22) -> list[tuple]:
    dom = parse_domain(domain_spec)
    r = lfmg_measure(dom, depth, tt_log2)
    out = [(domain_spec, depth, phase, s.leaf_evals, s.interior_visits, s.total_nodes)
           for phase, s in (("search", r.search), ("mintree", r.minimal_tree),
                            ("mingraph", r.minimal_graph))]
    if mm_depth:
        a = armg_mm(dom, depth, mm_depth, tt_log2)
        out.append((domain_spec, depth, "armg", a.armg.leaf_evals, a.armg.interior_visits,
                    a.armg.total_nodes))
    return out


def parity_report(domain: SearchDomain, depths, tt_log2: int = 22) -> dict[str, list]:
    """search / minimal-graph leaf ratios split by odd and even depth."""
    out: dict[str, list] = {"odd": [], "even": []}
    for d in depths:
        r = lfmg_measure(domain, d, tt_log2)
        ratio = r.search.leaf_evals / r.minimal_graph.leaf_evals
        out["odd" if d % 2 else "even"].append((d, ratio))
    return out


# --- traces ------------------------------------------------------------------

TRACEABLE = ("alpha_beta", "alpha_beta_tt", "alpha_beta_etc", "negascout", "sss_star",
             "mtd_sss", "mtd_dual", "mtd_f", "mtd_bi", "mtd_step", "mtd_best")


def run_trace(domain: SearchDomain, algorithm: str, depth: int | None = None,
              tt_log2: int = 20) -> tuple[int, Tracer]:
    """Fixed-depth run in static child order with full tracing."""
    tr = Tracer()
    tt = _table(tt_log2)
    if algorithm == "alpha_beta":
        v = alpha_beta(domain, depth=depth, tracer=tr)
    elif algorithm == "alpha_beta_tt":
        v = alpha_beta_tt(domain, depth=depth, tt=tt, tracer=tr)
    elif algorithm == "alpha_beta_etc":
        v = alpha_beta_etc(domain, depth=depth, tt=tt, tracer=tr)
    elif algorithm == "negascout":
        v = negascout(domain, depth=depth, tt=tt, tracer=tr)
    elif algorithm == "sss_star":
        v = sss_star(domain, depth, tracer=tr).value
    elif algorithm == "mtd_best":
        v = mtd_best_run(domain, depth, tt, tracer=tr).move
    else:
        configs = {"mtd_sss": sss_config, "mtd_dual": dual_config,
                   "mtd_f": lambda: f_config(domain.evaluate(domain.root())),
                   "mtd_bi": lambda: bi_config(domain.val_max),
                   "mtd_step": lambda: step_config(max(1, domain.val_max // 8))}
        if algorithm not in configs:
            raise KeyError(f"algorithm {algorithm!r} has no trace mode")
        v = mtd_run(domain, configs[algorithm](), depth, tt, tracer=tr).value
    return v, tr
