"""Tic-tac-toe with X as MAX: win +1, loss -1, draw 0."""

from __future__ import annotations

from typing import NamedTuple

from .base import SearchDomain, mix64

_LINES = (
    (0, 1, 2), (3, 4, 5), (6, 7, 8),
    (0, 3, 6), (1, 4, 7), (2, 5, 8),
    (0, 4, 8), (2, 4, 6),
)


class Board(NamedTuple):
    cells: str  # 9 chars from "XO."
    x_to_move: bool


def _winner(cells: str) -> str | None:
    for a, b, c in _LINES:
        if cells[a] != "." and cells[a] == cells[b] == cells[c]:
            return cells[a]
    return None


class TicTacToe(SearchDomain):
    val_max = 1

    def __init__(self, start: str = ".........", x_to_move: bool | None = None):
        start = start.replace("\n", "").replace(" ", "")
        if len(start) != 9 or set(start) - set("XO."):
            raise ValueError(f"bad board {start!r}")
        if x_to_move is None:
            x_to_move = start.count("X") == start.count("O")
        self._root = Board(start, x_to_move)

    def root(self) -> Board:
        return self._root

    def children(self, pos: Board) -> list[Board]:
        if _winner(pos.cells):
            return []
        mark = "X" if pos.x_to_move else "O"
        cells = pos.cells
        return [Board(cells[:i] + mark + cells[i + 1:], not pos.x_to_move)
                for i in range(9) if cells[i] == "."]

    def evaluate(self, pos: Board) -> int:
        w = _winner(pos.cells)
        return 1 if w == "X" else -1 if w == "O" else 0

    def is_max(self, pos: Board) -> bool:
        return pos.x_to_move

    def key(self, pos: Board) -> int:
        code = 0
        for ch in pos.cells:
            code = code * 3 + ".XO".index(ch)
        return mix64(code * 2 + pos.x_to_move)

    def move_key(self, pos: Board, index: int) -> int:
        return self.move_keys(pos, 9)[index]

    def move_keys(self, pos: Board, count: int) -> list[int]:
        return [i for i in range(9) if pos.cells[i] == "."]

    def label(self, pos: Board) -> str:
        return pos.cells

    def default_depth(self) -> int:
        return self._root.cells.count(".")


def tictactoe(start: str = ".........") -> TicTacToe:
    return TicTacToe(start)
