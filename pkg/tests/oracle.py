"""Brute-force reference implementations used to check the search code.

Nothing here imports the package's search or move-generation code: trees
are nested lists, Othello is a plain 6x6 grid.
"""

import random


def tree_minimax(body, is_max=True):
    """Minimax value of a nested-list tree (ints are leaves)."""
    if isinstance(body, int):
        return body
    vals = [tree_minimax(c, not is_max) for c in body]
    return max(vals) if is_max else min(vals)


def tree_leaves(body):
    if isinstance(body, int):
        return [body]
    out = []
    for c in body:
        out.extend(tree_leaves(c))
    return out


def random_body(rng: random.Random, max_width=4, max_depth=6, lo=-20, hi=20, p_leaf=0.15):
    """Irregular nested-list tree; small value range so ties are common."""
    def build(d):
        if d == 0 or (d < max_depth and rng.random() < p_leaf):
            return rng.randint(lo, hi)
        return [build(d - 1) for _ in range(rng.randint(1, max_width))]
    body = build(max_depth)
    return body if isinstance(body, list) else [body]


def body_text(body) -> str:
    if isinstance(body, int):
        return str(body)
    return "(" + " ".join(body_text(c) for c in body) + ")"


def argmax_moves(values, is_max=True):
    best = max(values) if is_max else min(values)
    return {i for i, v in enumerate(values) if v == best}


# --- Othello 6x6 on a grid -----------------------------------------------------

N = 6
EMPTY, BLACK, WHITE = ".", "B", "W"
DIRS = [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)]


def grid_start():
    g = [[EMPTY] * N for _ in range(N)]
    g[2][2] = g[3][3] = WHITE
    g[2][3] = g[3][2] = BLACK
    return g


def grid_flips(g, r, c, me):
    if g[r][c] != EMPTY:
        return []
    opp = WHITE if me == BLACK else BLACK
    out = []
    for dr, dc in DIRS:
        run = []
        rr, cc = r + dr, c + dc
        while 0 <= rr < N and 0 <= cc < N and g[rr][cc] == opp:
            run.append((rr, cc))
            rr, cc = rr + dr, cc + dc
        if run and 0 <= rr < N and 0 <= cc < N and g[rr][cc] == me:
            out.extend(run)
    return out


def grid_moves(g, me):
    return [r * N + c for r in range(N) for c in range(N) if grid_flips(g, r, c, me)]


def grid_play(g, sq, me):
    r, c = divmod(sq, N)
    new = [row[:] for row in g]
    for rr, cc in grid_flips(g, r, c, me):
        new[rr][cc] = me
    new[r][c] = me
    return new


def grid_eval(g):
    flat = [x for row in g for x in row]
    return flat.count(BLACK) - flat.count(WHITE)


def grid_children(g, me):
    """(grid, side to move) successors; a pass when only the opponent can move."""
    opp = WHITE if me == BLACK else BLACK
    moves = grid_moves(g, me)
    if moves:
        return [(grid_play(g, m, me), opp) for m in moves]
    if grid_moves(g, opp):
        return [(g, opp)]
    return []


def grid_minimax(g, me, depth):
    kids = grid_children(g, me) if depth > 0 else []
    if not kids:
        return grid_eval(g)
    vals = [grid_minimax(cg, cm, depth - 1) for cg, cm in kids]
    return max(vals) if me == BLACK else min(vals)


def grid_from_bits(black: int, white: int):
    g = [[EMPTY] * N for _ in range(N)]
    for sq in range(N * N):
        r, c = divmod(sq, N)
        if black >> sq & 1:
            g[r][c] = BLACK
        elif white >> sq & 1:
            g[r][c] = WHITE
    return g
