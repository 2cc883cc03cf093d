"""Named algorithms and domains for the harness and the CLI.

Every registered algorithm is a driver ``(domain, depth, tt, stats, guess) -> value``
so it can run under iterative deepening; ``guess`` is the previous
iteration's value and is used only by aspiration searches and MTD(f).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..alphabeta import Driver, alpha_beta, alpha_beta_tt, aspwin
from ..domains import (EXAMPLE_TREE, SearchDomain, SynthSpec, load_tree, opening_suite, othello6,
                       synth_tree, tictactoe)
from ..domains.base import NEG_INF, POS_INF
from ..mingraph import alpha_beta_etc
from ..mt import mtd_bi, mtd_dual, mtd_f, mtd_sss, mtd_step
from ..negascout import aspiration_negascout, negascout


@dataclass(frozen=True)
class Params:
    delta: int | None = None  # aspiration half-width; default val_max // 32
    stepsize: int | None = None  # MTD(step); default val_max // 8
    tt_order: bool = True  # MT drivers search the stored best move first


def _delta(domain, p: Params) -> int:
    return p.delta if p.delta else max(1, domain.val_max // 32)


def make_driver(name: str, p: Params = Params()) -> Driver:
    """Driver for a registered algorithm name."""
    o = {"tt_order": p.tt_order}
    table: dict[str, Callable[..., int]] = {
        "alpha_beta": lambda dm, d, tt, st, g: alpha_beta(dm, NEG_INF, POS_INF, d, stats=st),
        "alpha_beta_tt": lambda dm, d, tt, st, g: alpha_beta_tt(dm, NEG_INF, POS_INF, d, tt, st),
        "alpha_beta_etc": lambda dm, d, tt, st, g: alpha_beta_etc(dm, NEG_INF, POS_INF, d, tt, st),
        "aspwin": lambda dm, d, tt, st, g: aspwin(dm, g, _delta(dm, p), d, tt, st),
        "negascout": lambda dm, d, tt, st, g: negascout(dm, NEG_INF, POS_INF, d, tt, st),
        "aspiration_negascout": lambda dm, d, tt, st, g: aspiration_negascout(
            dm, g, _delta(dm, p), d, tt, st),
        "mtd_sss": lambda dm, d, tt, st, g: mtd_sss(dm, d, tt, st, **o),
        "mtd_dual": lambda dm, d, tt, st, g: mtd_dual(dm, d, tt, st, **o),
        "mtd_f": lambda dm, d, tt, st, g: mtd_f(dm, g, d, tt, st, **o),
        "mtd_bi": lambda dm, d, tt, st, g: mtd_bi(dm, d, tt, st, **o),
        "mtd_step": lambda dm, d, tt, st, g: mtd_step(
            dm, p.stepsize or max(1, dm.val_max // 8), d, tt, st, **o),
    }
    if name not in table:
        raise KeyError(f"unknown algorithm {name!r}; known: {', '.join(ALGORITHMS)}")
    return table[name]


ALGORITHMS = ("alpha_beta", "alpha_beta_tt", "alpha_beta_etc", "aspwin", "negascout",
              "aspiration_negascout", "mtd_sss", "mtd_dual", "mtd_f", "mtd_bi", "mtd_step")


def parse_domain(spec: str) -> SearchDomain:
    """Build a domain from a short text spec.

    ``fixture``, ``tictactoe``, ``othello6``, ``othello6:<k>`` (k-th opening
    of the seeded 20-position suite), ``tree:<file>`` or
    ``synth:w=3,d=4,seed=1,ordering=random,lo=-100,hi=100,min_width=1``.
    """
    name, _, arg = spec.partition(":")
    if name == "fixture":
        return load_tree(EXAMPLE_TREE)
    if name == "tictactoe":
        return tictactoe()
    if name == "othello6":
        if not arg:
            return othello6()
        return othello6(opening_suite()[int(arg)])
    if name == "tree":
        with open(arg) as fh:
            return load_tree(fh.read())
    if name == "synth":
        kw = dict(item.split("=", 1) for item in arg.split(",") if item)
        return synth_tree(synth_spec(kw))
    raise ValueError(f"unknown domain spec {spec!r}")


def synth_spec(kw: dict) -> SynthSpec:
    ints = {"w": "width", "width": "width", "d": "depth", "depth": "depth", "seed": "seed",
            "lo": "lo", "hi": "hi", "min_width": "min_width"}
    args = {}
    for k, v in kw.items():
        if k in ints:
            args[ints[k]] = int(v)
        elif k == "ordering":
            args["ordering"] = v
        elif k in ("p", "noise_p"):
            args["noise_p"] = float(v)
        elif k == "root":
            args["root_is_max"] = v == "max"
        else:
            raise ValueError(f"unknown synth parameter {k!r}")
    return SynthSpec(**args)

