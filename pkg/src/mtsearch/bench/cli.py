"""Command-line entry point: ``mtsearch <command> ...``."""

from __future__ import annotations

import argparse
import random
import sys

from ..alphabeta import minimax
from ..domains import EXAMPLE_TREE, SynthSpec, load_tree, synth_tree
from ..mt import mtd_best_run
from ..stats import SearchStats, fmt_value
from ..stockman import Equivalence, check_equivalence, sss_star
from .config import load_config
from .harness import (MINGRAPH_COLUMNS, TRACEABLE, _table, run_compare, run_memsweep,
                      run_mingraph, run_trace, write_csv)
from .registry import ALGORITHMS, Params, make_driver, parse_domain


def _solve(args) -> int:
    dom = parse_domain(args.domain)
    depth = args.depth if args.depth is not None else dom.default_depth()
    if depth is None:
        print("error: --depth is required for this domain", file=sys.stderr)
        return 2
    st = SearchStats()
    if args.algo == "minimax":
        v = minimax(dom, depth, stats=st)
    elif args.algo == "sss_star":
        v = sss_star(dom, depth, stats=st).value
    elif args.algo == "mtd_best":
        v = mtd_best_run(dom, depth, _table(args.tt_log2), st).move
    else:
        drv = make_driver(args.algo, Params(tt_order=False))
        v = drv(dom, depth, _table(args.tt_log2), st, dom.evaluate(dom.root()))
    label = "move" if args.algo == "mtd_best" else "value"
    print(f"{label}={fmt_value(v)} leaves={st.leaf_evals} interior={st.interior_visits} "
          f"total={st.total_nodes} tt_hits={st.tt_hits} mt_calls={st.mt_calls} "
          f"elapsed_us={round(st.elapsed * 1e6)}")
    return 0


def _compare(args) -> int:
    cfg = load_config(args.config)
    rows = run_compare(cfg)
    if not cfg.output:
        write_csv(rows, sys.stdout)
    return 0


def _memsweep(args) -> int:
    cfg = load_config(args.config)
    res = run_memsweep(cfg)
    if not cfg.output:
        write_csv(res.rows, sys.stdout)
    for (algo, seed), log2 in sorted(res.level_off.items()):
        where = f"2^{log2}" if log2 is not None else "not reached"
        print(f"level-off {algo} seed={seed}: {where}", file=sys.stderr)
    return 0


def _mingraph(args) -> int:
    rows = run_mingraph(args.domain, args.depth, args.mm, args.tt_log2)
    write_csv(rows, sys.stdout, MINGRAPH_COLUMNS)
    return 0


def _trace(args) -> int:
    v, tr = run_trace(parse_domain(args.domain), args.algo, args.depth, args.tt_log2)
    sys.stdout.write(tr.text())
    print(f"result {fmt_value(v)}")
    return 0


def _equiv(args) -> int:
    rng = random.Random(args.seed)
    counts = {s: 0 for s in Equivalence}
    trees = [("fixture", load_tree(EXAMPLE_TREE))]
    for _ in range(args.trees):
        spec = SynthSpec(rng.randint(1, 4), rng.randint(0, 6), seed=rng.getrandbits(32))
        trees.append((str(spec), synth_tree(spec)))
    for name, dom in trees:
        r = check_equivalence(dom, args.tt_log2)
        counts[r.status] += 1
        if r.status is not Equivalence.PASS:
            print(f"{r} {name}")
    print(" ".join(f"{s.value}={n}" for s, n in counts.items()))
    return 1 if counts[Equivalence.FAIL] else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mtsearch", description="Minimax search experiments")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("solve", help="search one domain with one algorithm")
    s.add_argument("domain")
    s.add_argument("algo", choices=(*ALGORITHMS, "minimax", "sss_star", "mtd_best"))
    s.add_argument("--depth", type=int)
    s.add_argument("--tt-log2", type=int, default=20)
    s.set_defaults(fn=_solve)

    s = sub.add_parser("compare", help="algorithm comparison under iterative deepening")
    s.add_argument("config")
    s.set_defaults(fn=_compare)

    s = sub.add_parser("memsweep", help="leaf counts across table sizes")
    s.add_argument("config")
    s.set_defaults(fn=_memsweep)

    s = sub.add_parser("mingraph", help="minimal tree / minimal graph counts")
    s.add_argument("domain")
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--mm", type=int, help="also run cheapest-cutoff MM(D)")
    s.add_argument("--tt-log2", type=int, default=22)
    s.set_defaults(fn=_mingraph)

    s = sub.add_parser("trace", help="print the leaf / pass / operator trace")
    s.add_argument("domain")
    s.add_argument("algo", choices=TRACEABLE)
    s.add_argument("--depth", type=int)
    s.add_argument("--tt-log2", type=int, default=20)
    s.set_defaults(fn=_trace)

    s = sub.add_parser("equiv", help="check SSS* against MT-SSS* on random trees")
    s.add_argument("--trees", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--tt-log2", type=int, default=20)
    s.set_defaults(fn=_equiv)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
