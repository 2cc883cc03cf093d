import io
import math
from pathlib import Path

import pytest

from mtsearch.bench.cli import main
from mtsearch.bench.config import ConfigError, ExperimentConfig, int_list, parse_config
from mtsearch.bench.harness import (CSV_COLUMNS, CsvRow, ValueDisagreement, _check_agreement,
                                    cumulative_ratio, geometric_mean, instances,
                                    level_off_point, run_compare, run_memsweep, run_trace,
                                    write_csv)
from mtsearch.bench.registry import ALGORITHMS, Params, make_driver, parse_domain
from mtsearch.domains import EXAMPLE_TREE, load_tree

from golden import AB_LEAVES, SSS_TABLE

EXPERIMENTS = Path(__file__).resolve().parent.parent / "experiments"


def _row(algo="a", seed=0, depth=1, leaves=1, value=0, elapsed=0):
    return CsvRow("d", algo, depth, 10, seed, leaves, 0, leaves, 0, 0, value, elapsed)


# --- CSV ------------------------------------------------------------------------

def test_csv_columns_and_order():
    assert CSV_COLUMNS == ("domain", "algorithm", "depth", "tt_log2", "seed", "leaf_evals",
                           "interior", "total_nodes", "tt_hits", "mt_calls", "value",
                           "elapsed_us")
    rows = [_row("b", 1), _row("a", 2), _row("a", 1)]
    buf = io.StringIO()
    text = write_csv(rows, buf)
    assert buf.getvalue() == text
    lines = text.split("\n")
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert [ln.split(",")[1:5:3] for ln in lines[1:4]] == [["a", "1"], ["a", "2"], ["b", "1"]]
    assert "\r" not in text and text.endswith("\n")


def test_rows_ignore_elapsed_in_comparison():
    assert _row(elapsed=5) == _row(elapsed=900)


def test_value_disagreement_dumps_group():
    with pytest.raises(ValueDisagreement, match="a=1, b=2"):
        _check_agreement([_row("a", value=1), _row("b", value=2)])
    _check_agreement([_row("a", value=1), _row("b", value=1), _row("c", seed=1, value=9)])


# --- config -----------------------------------------------------------------------

def test_parse_config():
    cfg = parse_config("""
        # comment
        domain = synth:w=3,d=4
        algorithms = alpha_beta_tt, mtd_f   # trailing comment
        seeds = 1..3, 7
        tt_log2 = 6..8
        depth = 4
        step = 2
        delta = 3
    """)
    assert cfg.domain == "synth:w=3,d=4"
    assert cfg.algorithms == ["alpha_beta_tt", "mtd_f"]
    assert cfg.seeds == [1, 2, 3, 7]
    assert cfg.tt_log2 == [6, 7, 8]
    assert (cfg.depth, cfg.step, cfg.delta) == (4, 2, 3)


@pytest.mark.parametrize("text", [
    "algorithms = quicksort", "tt_log2 = 30", "tt_log2 = 5", "depth = four", "colour = red",
    "depth 4", "step = 3", "replacement = random",
])
def test_bad_config(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_int_list():
    assert int_list("1, 3..5,") == [1, 3, 4, 5]


def test_committed_configs_parse():
    paths = sorted(EXPERIMENTS.glob("*.cfg"))
    assert len(paths) >= 4
    for p in paths:
        with open(p) as fh:
            parse_config(fh.read())


# --- summaries ---------------------------------------------------------------------

def test_geometric_mean_hand_cases():
    assert geometric_mean([4, 9]) == pytest.approx(6)
    assert geometric_mean([1, 10, 100]) == pytest.approx(10)
    assert geometric_mean([2]) == pytest.approx(2)
    assert geometric_mean([0.5, 2]) == pytest.approx(1)


def test_cumulative_ratio():
    rows = [_row("x", 0, 3, 10), _row("y", 0, 3, 20), _row("x", 1, 3, 40), _row("y", 1, 3, 10),
            _row("x", 0, 2, 999)]
    # (10/20 * 40/10) ** 0.5
    assert cumulative_ratio(rows, "x", "y", 3) == pytest.approx(math.sqrt(2))
    with pytest.raises(ValueError):
        cumulative_ratio(rows, "x", "z", 3)


def test_level_off_point():
    caps = [6, 7, 8, 9, 10]
    assert level_off_point(caps, [50, 40, 30, 30, 30]) == 8
    assert level_off_point(caps, [50, 40, 30, 20, 10]) is None
    assert level_off_point(caps, [9, 9, 9, 9, 9]) == 6
    assert level_off_point([6], [5]) is None


# --- registry and runners ---------------------------------------------------------------

def test_parse_domain():
    assert parse_domain("fixture").to_body() == load_tree(EXAMPLE_TREE).to_body()
    assert parse_domain("synth:w=2,d=3,seed=4,ordering=perfect").height == 3
    assert parse_domain("othello6:3").root() != parse_domain("othello6").root()
    with pytest.raises(ValueError):
        parse_domain("chess")
    with pytest.raises(ValueError):
        parse_domain("synth:w=2,d=2,colour=blue")
    with pytest.raises(KeyError):
        make_driver("nope")


def test_every_registered_algorithm_on_fixture():
    dom = load_tree(EXAMPLE_TREE)
    from mtsearch.stats import SearchStats
    from mtsearch.ttable import tt_new
    for name in ALGORITHMS:
        assert make_driver(name, Params(tt_order=False))(dom, 4, tt_new(10), SearchStats(), 0) == 35


def test_run_compare_fixture():
    cfg = ExperimentConfig(domain="fixture", algorithms=list(ALGORITHMS), depth=4)
    rows = run_compare(cfg.validate())
    assert len(rows) == len(ALGORITHMS) * 4
    assert {r.value for r in rows if r.depth == 4} == {35}
    # cumulative counts never shrink from one iteration to the next
    for algo in ALGORITHMS:
        seq = [r.leaf_evals for r in sorted(rows) if r.algorithm == algo]
        assert seq == sorted(seq)


def test_run_compare_synth_seeds_row_count():
    cfg = parse_config("domain = synth:w=3,d=4\nseeds = 1..3\nalgorithms = alpha_beta_tt, mtd_f\n"
                       "depth = 4\nstep = 2")
    assert [s for s, _ in instances(cfg)] == [1, 2, 3]
    rows = run_compare(cfg)
    assert len(rows) == 3 * 2 * 2


def test_memsweep_deterministic_and_correct_when_starved():
    cfg = parse_config("domain = othello6:1\nalgorithms = alpha_beta_tt, mtd_sss\ndepth = 4\n"
                       "tt_log2 = 6, 8, 16, 17")
    a, b = run_memsweep(cfg), run_memsweep(cfg)
    assert sorted(a.rows) == sorted(b.rows)
    assert len({r.value for r in a.rows}) == 1
    big = {r.algorithm: r for r in a.rows if r.tt_log2 == 17}
    also = {r.algorithm: r for r in a.rows if r.tt_log2 == 16}
    assert big["mtd_sss"].leaf_evals == also["mtd_sss"].leaf_evals
    assert big["mtd_sss"].total_nodes == also["mtd_sss"].total_nodes


def test_trace_formats():
    dom = load_tree(EXAMPLE_TREE)
    v, tr = run_trace(dom, "alpha_beta", 4)
    assert v == 35 and tr.leaf_values() == AB_LEAVES
    assert tr.lines[0] == "leaf /0/0/0/0 41"
    v, tr = run_trace(dom, "sss_star", 4)
    assert len([ln for ln in tr.lines if ln.startswith("op ")]) == len(SSS_TABLE)
    v, tr = run_trace(dom, "mtd_sss", 4)
    assert [ln.split()[2] for ln in tr.lines if ln.startswith("pass")] == \
        ["gamma=+inf", "gamma=41", "gamma=36", "gamma=35"]
    with pytest.raises(KeyError):
        run_trace(dom, "aspwin", 4)


# --- CLI -----------------------------------------------------------------------------------

def test_cli_solve(capsys):
    assert main(["solve", "fixture", "alpha_beta", "--depth", "4"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("value=35 leaves=11 ")
    assert main(["solve", "fixture", "mtd_best"]) == 0
    assert capsys.readouterr().out.startswith("move=1 ")


def test_cli_solve_needs_depth(capsys):
    assert main(["solve", "othello6", "mtd_f"]) == 2


def test_cli_trace(capsys):
    assert main(["trace", "fixture", "mtd_sss", "--depth", "4"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[4] == "pass 1 gamma=+inf g=41 leaves=4"
    assert out[-1] == "result 35"


def test_cli_compare_and_memsweep(tmp_path, capsys):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("domain = fixture\nalgorithms = mtd_sss, negascout\ndepth = 2\ntt_log2 = 6, 7\n")
    assert main(["compare", str(cfg)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("domain,algorithm,depth") and len(lines) == 1 + 2 * 2
    assert main(["memsweep", str(cfg)]) == 0
    cap = capsys.readouterr()
    assert len(cap.out.splitlines()) == 1 + 2 * 2
    assert "level-off mtd_sss seed=0: 2^6" in cap.err
    out = tmp_path / "o.csv"
    cfg.write_text(cfg.read_text() + f"output = {out}\n")
    assert main(["compare", str(cfg)]) == 0
    assert out.read_text().startswith("domain,")


def test_cli_mingraph_and_equiv(capsys):
    assert main(["mingraph", "fixture", "--depth", "4", "--mm", "2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "domain,depth,phase,leaf,interior,total"
    assert {ln.split(",")[2] for ln in out[1:]} == {"armg", "mingraph", "mintree", "search"}
    assert main(["equiv", "--trees", "20", "--seed", "3"]) == 0
    assert capsys.readouterr().out.strip() == "PASS=21 FAIL=0 INCONCLUSIVE=0"


def test_cli_rejects_unknown_algorithm():
    with pytest.raises(SystemExit):
        main(["solve", "fixture", "bogosort"])
