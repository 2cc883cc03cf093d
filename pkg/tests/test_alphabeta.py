import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mtsearch.alphabeta import (HistoryTable, WindowError, alpha_beta, alpha_beta_tt, aspwin,
                                child_order, id_depths, iterative_deepening, minimax,
                                order_moves, update_history)
from mtsearch.domains import EXAMPLE_TREE, load_tree
from mtsearch.domains.base import NEG_INF, POS_INF
from mtsearch.domains.othello import Othello6, opening_suite
from mtsearch.domains.tictactoe import TicTacToe
from mtsearch.proof import Kind, ProofTree, verify_postcondition
from mtsearch.stats import SearchStats, Tracer
from mtsearch.ttable import TTable, TTConfig, tt_new

from conftest import tree_bodies, tree_of
from oracle import tree_minimax

windows = st.tuples(st.integers(-25, 25), st.integers(1, 30)).map(lambda p: (p[0], p[0] + p[1]))


def fail_soft_ok(f, a, b, g):
    if g <= a:
        return f <= g
    if g >= b:
        return f >= g
    return g == f


# --- golden fixture ----------------------------------------------------------------

def test_fixture_alpha_beta_leaf_order(fixture_tree):
    tr = Tracer()
    st_ = SearchStats()
    assert alpha_beta(fixture_tree, stats=st_, tracer=tr) == 35
    assert tr.leaf_values() == [41, 5, 12, 90, 101, 80, 10, 36, 35, 50, 36]
    assert st_.leaf_evals == 11


def test_fixture_alpha_beta_tt_same_as_plain(fixture_tree):
    tr = Tracer()
    assert alpha_beta_tt(fixture_tree, tt=tt_new(10), tracer=tr) == 35
    assert tr.leaf_values() == [41, 5, 12, 90, 101, 80, 10, 36, 35, 50, 36]


def test_window_errors(fixture_tree):
    with pytest.raises(WindowError):
        alpha_beta(fixture_tree, 5, 5)
    with pytest.raises(WindowError):
        alpha_beta_tt(fixture_tree, 6, 2)


# --- fail-soft contract against the oracle --------------------------------------------

@given(tree_bodies(), windows)
def test_alpha_beta_fail_soft(body, w):
    f = tree_minimax(body)
    t = tree_of(body)
    assert alpha_beta(t) == f
    g = alpha_beta(t, *w)
    assert fail_soft_ok(f, *w, g)


@given(tree_bodies(), windows, st.sampled_from([0, 2, 6]))
def test_alpha_beta_tt_fail_soft_any_table(body, w, log2):
    f = tree_minimax(body)
    t = tree_of(body)
    tt = TTable(TTConfig(log2, allow_small=True))
    # repeated searches through one table still respect the contract
    assert alpha_beta_tt(t, tt=tt) == f
    assert fail_soft_ok(f, *w, alpha_beta_tt(t, *w, tt=tt))
    assert alpha_beta_tt(t, tt=tt) == f


@given(tree_bodies())
def test_alpha_beta_tt_first_search_matches_plain(body):
    t = tree_of(body)
    a, b = SearchStats(), SearchStats()
    tr_a, tr_b = Tracer(), Tracer()
    assert alpha_beta(t, stats=a, tracer=tr_a) == alpha_beta_tt(t, tt=tt_new(16), stats=b, tracer=tr_b)
    assert tr_a.leaf_labels() == tr_b.leaf_labels()


@given(tree_bodies(), windows)
def test_wider_window_never_fewer_leaves(body, w):
    t = tree_of(body)
    narrow, wide = SearchStats(), SearchStats()
    alpha_beta(t, *w, stats=narrow)
    alpha_beta(t, stats=wide)
    assert narrow.leaf_evals <= wide.leaf_evals


@given(tree_bodies(), st.integers(0, 4))
def test_history_ordering_keeps_value(body, etc):
    t = tree_of(body)
    f = tree_minimax(body)
    h = HistoryTable()
    assert alpha_beta_tt(t, tt=tt_new(12), history=h, etc_min_height=etc) == f
    assert alpha_beta_tt(t, tt=tt_new(12), history=h) == f


def test_transposing_domains_match_minimax():
    ttt = TicTacToe()
    for tt_log2 in (6, 10, 16):
        assert alpha_beta_tt(ttt, tt=tt_new(tt_log2)) == 0
    for pos in opening_suite(5):
        dom = Othello6(pos)
        f = minimax(dom, 4)
        assert alpha_beta_tt(dom, depth=4, tt=tt_new(14)) == f
        assert alpha_beta_tt(dom, depth=4, tt=tt_new(6), history=HistoryTable()) == f


# --- move ordering --------------------------------------------------------------------

def test_update_history_powers_of_two():
    h = HistoryTable()
    update_history(h, "e4", 3)
    update_history(h, "e4", 1)
    update_history(h, "d5", 4)
    assert h.score("e4") == 8 + 2
    assert h.score("d5") == 16
    assert h.score("a1") == 0
    with pytest.raises(ValueError):
        update_history(h, "e4", 0)
    h.clear()
    assert h.score("d5") == 0


def test_order_moves():
    h = HistoryTable()
    update_history(h, "c", 3)
    update_history(h, "b", 2)
    assert order_moves(["a", "b", "c", "d"], hist=h) == ["c", "b", "a", "d"]
    assert order_moves(["a", "b", "c", "d"], tt_best="d", hist=h) == ["d", "c", "b", "a"]
    assert order_moves(["a", "b"], tt_best="z") == ["a", "b"]


def test_child_order(fixture_tree):
    root = fixture_tree.root()
    assert list(child_order(fixture_tree, root, 3, None, None)) == [0, 1, 2]
    assert list(child_order(fixture_tree, root, 3, 2, None)) == [2, 0, 1]
    h = HistoryTable()
    update_history(h, 1, 2)
    assert list(child_order(fixture_tree, root, 3, None, h)) == [1, 0, 2]
    assert list(child_order(fixture_tree, root, 3, 2, h)) == [2, 1, 0]


# --- aspiration -----------------------------------------------------------------------

@pytest.mark.parametrize("est, researches", [(35, 0), (0, 1), (100, 1)])
def test_aspwin_fixture(est, researches):
    t = load_tree(EXAMPLE_TREE)
    s = SearchStats()
    assert aspwin(t, est, 5, tt=tt_new(10), stats=s) == 35
    assert s.researches == researches


@given(tree_bodies(), st.integers(-30, 30), st.integers(1, 10))
def test_aspwin_value(body, est, delta):
    assert aspwin(tree_of(body), est, delta, tt=tt_new(12)) == tree_minimax(body)


def test_aspwin_bad_delta(fixture_tree):
    with pytest.raises(ValueError):
        aspwin(fixture_tree, 0, 0)


# --- iterative deepening --------------------------------------------------------------

def test_id_depths():
    assert id_depths(5) == [1, 2, 3, 4, 5]
    assert id_depths(5, 2) == [1, 3, 5]
    assert id_depths(6, 2) == [2, 4, 6]
    with pytest.raises(ValueError):
        id_depths(0)


def _ab_driver(dom, d, tt, st_, guess):
    return alpha_beta_tt(dom, NEG_INF, POS_INF, d, tt, st_)


def test_iterative_deepening_cumulative_is_sum():
    dom = Othello6(opening_suite()[0])
    res = iterative_deepening(_ab_driver, dom, 4)
    running = SearchStats()
    for it in res.iterations:
        running = running + it.stats
        assert it.cumulative.leaf_evals == running.leaf_evals
        assert it.cumulative.total_nodes == running.total_nodes
        assert it.value == minimax(dom, it.depth)
    assert res.value == minimax(dom, 4)
    assert res.best_move is not None


# --- recorded proofs ----------------------------------------------------------------------

def test_fixture_proof():
    t = load_tree(EXAMPLE_TREE)
    p = ProofTree()
    assert alpha_beta(t, proof=p) == 35
    v = verify_postcondition(t, p)
    assert v and v.kind is Kind.BOTH
    # one child per min node: /0/0/0/1, /0/0/1/0, /1/0/0/0, /1/0/1/1
    assert sorted(n.value for n in v.t_plus.leaves()) == [5, 10, 12, 35]
    p = ProofTree()
    assert alpha_beta(t, 36, 100, proof=p) == 36
    v = verify_postcondition(t, p)
    assert v and v.kind is Kind.T_PLUS and str(v) == "PASS"


@given(tree_bodies(), windows)
@settings(max_examples=60)
def test_proof_passes(body, w):
    t = tree_of(body)
    p = ProofTree()
    alpha_beta(t, *w, proof=p)
    assert verify_postcondition(t, p)


def test_tampered_proof_fails():
    t = load_tree(EXAMPLE_TREE)
    p = ProofTree()
    alpha_beta(t, proof=p)
    p.result = 36
    assert not verify_postcondition(t, p)
    p = ProofTree()
    alpha_beta(t, proof=p)
    leaf = next(iter(p.root.leaves()))
    leaf.value += 1
    v = verify_postcondition(t, p)
    assert not v and str(v).startswith("FAIL")
