"""Othello on a 6x6 board, bitboard move generation, Zobrist keys.

Squares are numbered ``row * 6 + col`` from the top-left corner. Black moves
first and is the MAX player. A side without a legal move passes (a single
child); the game ends when neither side can move.

Zobrist keys come from the raw output of NumPy's PCG64 bit generator seeded
with ``ZOBRIST_SEED``: 36 keys for black discs, 36 for white discs, then one
key toggled when black is to move.
"""

from __future__ import annotations

import random
from typing import NamedTuple

import numpy as np

from .base import SearchDomain

SIZE = 6
N_SQUARES = SIZE * SIZE
FULL = (1 << N_SQUARES) - 1
PASS = -1
ZOBRIST_SEED = 0x9E3779B97F4A7C15

_COL0 = sum(1 << (r * SIZE) for r in range(SIZE))
_COL5 = _COL0 << (SIZE - 1)
_NOT_COL0 = FULL & ~_COL0
_NOT_COL5 = FULL & ~_COL5

# (shift, mask applied after shifting)
_DIRS = (
    (1, _NOT_COL0), (-1, _NOT_COL5),
    (SIZE, FULL), (-SIZE, FULL),
    (SIZE + 1, _NOT_COL0), (SIZE - 1, _NOT_COL5),
    (-SIZE + 1, _NOT_COL0), (-SIZE - 1, _NOT_COL5),
)

_raw = np.random.PCG64(ZOBRIST_SEED).random_raw(2 * N_SQUARES + 1)
ZOBRIST_BLACK = tuple(int(v) for v in _raw[:N_SQUARES])
ZOBRIST_WHITE = tuple(int(v) for v in _raw[N_SQUARES:2 * N_SQUARES])
ZOBRIST_BLACK_TO_MOVE = int(_raw[-1])
del _raw


def _shift(bb: int, d: int, mask: int) -> int:
    return ((bb << d) if d > 0 else (bb >> -d)) & mask


def legal_moves(me: int, opp: int) -> int:
    """Bitmask of squares where the side owning ``me`` may play."""
    empty = FULL & ~(me | opp)
    moves = 0
    for d, mask in _DIRS:
        x = _shift(me, d, mask) & opp
        x |= _shift(x, d, mask) & opp
        x |= _shift(x, d, mask) & opp
        x |= _shift(x, d, mask) & opp
        moves |= _shift(x, d, mask) & empty
    return moves


def flips(me: int, opp: int, sq: int) -> int:
    """Discs flipped when the side owning ``me`` plays on ``sq``."""
    out = 0
    m = 1 << sq
    for d, mask in _DIRS:
        run = 0
        x = _shift(m, d, mask)
        while x & opp:
            run |= x
            x = _shift(x, d, mask)
        if x & me:
            out |= run
    return out


def _bits(bb: int):
    while bb:
        low = bb & -bb
        yield low.bit_length() - 1
        bb ^= low


class OthelloPos(NamedTuple):
    black: int
    white: int
    black_to_move: bool
    key: int


def zobrist(black: int, white: int, black_to_move: bool) -> int:
    k = ZOBRIST_BLACK_TO_MOVE if black_to_move else 0
    for s in _bits(black):
        k ^= ZOBRIST_BLACK[s]
    for s in _bits(white):
        k ^= ZOBRIST_WHITE[s]
    return k


def make_pos(black: int, white: int, black_to_move: bool) -> OthelloPos:
    return OthelloPos(black, white, black_to_move, zobrist(black, white, black_to_move))


def initial_position() -> OthelloPos:
    c = SIZE // 2
    white = (1 << ((c - 1) * SIZE + c - 1)) | (1 << (c * SIZE + c))
    black = (1 << ((c - 1) * SIZE + c)) | (1 << (c * SIZE + c - 1))
    return make_pos(black, white, True)


def moves_of(pos: OthelloPos) -> list[int]:
    """Legal squares in ascending order, ``[PASS]`` or ``[]`` at game end."""
    me, opp = (pos.black, pos.white) if pos.black_to_move else (pos.white, pos.black)
    mv = legal_moves(me, opp)
    if mv:
        return list(_bits(mv))
    return [PASS] if legal_moves(opp, me) else []


def play(pos: OthelloPos, sq: int) -> OthelloPos:
    black, white, btm, key = pos
    key ^= ZOBRIST_BLACK_TO_MOVE
    if sq == PASS:
        return OthelloPos(black, white, not btm, key)
    me, opp = (black, white) if btm else (white, black)
    f = flips(me, opp, sq)
    if not f:
        raise ValueError(f"illegal move {sq}")
    placed = (1 << sq) | f
    mine, theirs = (ZOBRIST_BLACK, ZOBRIST_WHITE) if btm else (ZOBRIST_WHITE, ZOBRIST_BLACK)
    key ^= mine[sq]
    for s in _bits(f):
        key ^= mine[s] ^ theirs[s]
    me |= placed
    opp &= ~f
    return OthelloPos(me, opp, False, key) if btm else OthelloPos(opp, me, True, key)


class Othello6(SearchDomain):
    """Othello on 6x6; leaf value is black discs minus white discs."""

    val_max = 64

    def __init__(self, start: OthelloPos | None = None):
        self._root = initial_position() if start is None else start

    def root(self) -> OthelloPos:
        return self._root

    def children(self, pos: OthelloPos) -> list[OthelloPos]:
        return [play(pos, m) for m in moves_of(pos)]

    def evaluate(self, pos: OthelloPos) -> int:
        return pos.black.bit_count() - pos.white.bit_count()

    def is_max(self, pos: OthelloPos) -> bool:
        return pos.black_to_move

    def key(self, pos: OthelloPos) -> int:
        return pos.key

    def move_key(self, pos: OthelloPos, index: int) -> int:
        return moves_of(pos)[index]

    def move_keys(self, pos: OthelloPos, count: int) -> list[int]:
        return moves_of(pos)

    def label(self, pos: OthelloPos) -> str:
        return render(pos).replace("\n", "/")


def render(pos: OthelloPos) -> str:
    rows = []
    for r in range(SIZE):
        row = ""
        for c in range(SIZE):
            b = 1 << (r * SIZE + c)
            row += "X" if pos.black & b else "O" if pos.white & b else "."
        rows.append(row)
    return "\n".join(rows)


def othello6(start: OthelloPos | None = None) -> Othello6:
    return Othello6(start)


def random_opening(seed: int, plies: int) -> OthelloPos:
    """Position after ``plies`` uniformly random legal moves (stops at game end)."""
    rng = random.Random(seed)
    pos = initial_position()
    for _ in range(plies):
        mv = moves_of(pos)
        if not mv:
            break
        pos = play(pos, rng.choice(mv))
    return pos


def opening_suite(n: int = 20, seed: int = 1, min_plies: int = 4, max_plies: int = 10) -> list[OthelloPos]:
    """``n`` seeded start positions, each ``min_plies..max_plies`` random moves deep."""
    rng = random.Random(seed)
    return [random_opening(rng.getrandbits(32), rng.randint(min_plies, max_plies)) for _ in range(n)]
