from .base import NEG_INF, POS_INF, VAL_MAX_LIMIT, BudgetExceeded, SearchDomain, mix64
from .othello import Othello6, OthelloPos, initial_position, opening_suite, othello6, random_opening
from .tictactoe import TicTacToe, tictactoe
from .trees import (
    EXAMPLE_TREE, NOISY, PERFECT, RANDOM, SynthSpec, TreeDomain, TreeNode, TreeParseError,
    load_tree, path_label, synth_tree,
)

__all__ = [
    "NEG_INF", "POS_INF", "VAL_MAX_LIMIT", "BudgetExceeded", "SearchDomain", "mix64",
    "Othello6", "OthelloPos", "initial_position", "opening_suite", "othello6", "random_opening",
    "TicTacToe", "tictactoe",
    "EXAMPLE_TREE", "NOISY", "PERFECT", "RANDOM", "SynthSpec", "TreeDomain", "TreeNode",
    "TreeParseError", "load_tree", "path_label", "synth_tree",
]
