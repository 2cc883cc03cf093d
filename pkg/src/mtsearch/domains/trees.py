"""Explicit game trees: parsed from text or generated from a seed.

Tree text format::

    root: max
    ((41 5) (12 90))

The first non-comment line names the type of the root; the rest is one
s-expression where an integer is a leaf and a parenthesized list is an
interior node. Node types alternate with depth. ``#`` starts a comment.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Sequence

from .base import VAL_MAX_LIMIT, BudgetExceeded, SearchDomain, mix64

DEFAULT_NODE_BUDGET = 10**7

# 16-leaf, depth-4 tree used throughout the worked traces.
EXAMPLE_TREE = (
    "root: max\n"
    "((((41 5)(12 90))((101 80)(20 30)))(((10 80)(36 35))((50 36)(25 3))))\n"
)


class TreeParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{msg} at line {line}, column {col}")
        self.line = line
        self.col = col


class TreeNode:
    __slots__ = ("children", "value", "path", "key", "is_max", "estimate")

    def __init__(self, path: tuple[int, ...], is_max: bool):
        self.children: tuple[TreeNode, ...] = ()
        self.value = 0
        self.path = path
        self.key = 0
        self.is_max = is_max
        self.estimate = 0

    def __repr__(self) -> str:
        return f"TreeNode({path_label(self.path)})"


def path_label(path: Sequence[int]) -> str:
    return "/" + "/".join(str(i) for i in path)


class TreeDomain(SearchDomain):
    """A finite tree held in memory; positions are :class:`TreeNode` objects.

    Interior nodes carry a static estimate (the value of their left-most
    descendant leaf) so shallow iterative-deepening passes have something
    to evaluate. Keys are unique per node, so the tree has no transpositions;
    the low 32 bits hold the node's preorder number, so a table with at least
    as many slots as the tree has nodes never maps two nodes to one slot.
    """

    def __init__(self, body, root_is_max: bool = True, val_max: int | None = None,
                 node_budget: int = DEFAULT_NODE_BUDGET):
        leaves = list(_iter_leaves(body))
        if val_max is None:
            top = max((abs(v) for v in leaves), default=0)
            val_max = 1
            while val_max < top:
                val_max <<= 1
        if not 1 <= val_max <= VAL_MAX_LIMIT:
            raise ValueError(f"val_max {val_max} outside [1, {VAL_MAX_LIMIT}]")
        for v in leaves:
            if abs(v) > val_max:
                raise ValueError(f"leaf value {v} outside [-{val_max}, {val_max}]")
        self.val_max = val_max
        self.root_is_max = root_is_max
        self.node_count = 0
        self.height = 0
        self._root = self._build(body, (), root_is_max, node_budget)

    def _build(self, body, path, is_max, budget) -> TreeNode:
        node = TreeNode(path, is_max)
        self.node_count += 1
        if self.node_count > budget:
            raise BudgetExceeded(f"tree exceeds node budget {budget}")
        node.key = (mix64(self.node_count) & ~0xFFFFFFFF) | self.node_count
        self.height = max(self.height, len(path))
        if isinstance(body, int):
            node.value = node.estimate = body
        else:
            node.children = tuple(
                self._build(sub, path + (i,), not is_max, budget) for i, sub in enumerate(body)
            )
            node.estimate = node.children[0].estimate
        return node

    def root(self) -> TreeNode:
        return self._root

    def children(self, pos: TreeNode) -> tuple[TreeNode, ...]:
        return pos.children

    def evaluate(self, pos: TreeNode) -> int:
        return pos.estimate

    def is_max(self, pos: TreeNode) -> bool:
        return pos.is_max

    def key(self, pos: TreeNode) -> int:
        return pos.key

    def label(self, pos: TreeNode) -> str:
        return path_label(pos.path)

    def default_depth(self) -> int:
        return self.height

    def node_at(self, path: Sequence[int]) -> TreeNode:
        node = self._root
        for i in path:
            node = node.children[i]
        return node

    def leaves(self) -> list[TreeNode]:
        out, stack = [], [self._root]
        while stack:
            node = stack.pop()
            if node.children:
                stack.extend(reversed(node.children))
            else:
                out.append(node)
        return out

    def to_body(self, node: TreeNode | None = None):
        node = self._root if node is None else node
        if not node.children:
            return node.value
        return [self.to_body(c) for c in node.children]

    def to_text(self) -> str:
        return f"root: {'max' if self.root_is_max else 'min'}\n{_format_body(self.to_body())}\n"


def _iter_leaves(body):
    stack = [body]
    while stack:
        b = stack.pop()
        if isinstance(b, int):
            yield b
        else:
            stack.extend(b)


def _format_body(body) -> str:
    if isinstance(body, int):
        return str(body)
    return "(" + " ".join(_format_body(b) for b in body) + ")"


_TOKEN = re.compile(r"\s+|#[^\n]*|\(|\)|-?\d+|[^\s()#]+")
_HEADER = re.compile(r"\A(?:\s|#[^\n]*)*root\s*:\s*(max|min)\b", re.IGNORECASE)


def _line_col(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    return line, offset - (text.rfind("\n", 0, offset) + 1) + 1


def load_tree(text: str, val_max: int | None = None) -> TreeDomain:
    """Parse tree text into a :class:`TreeDomain`.

    Raises :class:`TreeParseError` (with line and column) on malformed input
    and on leaves outside the value range.
    """
    header = _HEADER.match(text)
    if header is None:
        m = re.search(r"\S", text)
        raise TreeParseError("expected header 'root: max' or 'root: min'",
                             *_line_col(text, m.start() if m else 0))
    root_is_max = header.group(1).lower() == "max"
    tokens = [(m.group(), m.start()) for m in _TOKEN.finditer(text, header.end())
              if not (m.group()[0].isspace() or m.group()[0] == "#")]
    pos = 0

    def fail(msg: str, offset: int):
        raise TreeParseError(msg, *_line_col(text, offset))

    def parse():
        nonlocal pos
        if pos >= len(tokens):
            fail("unexpected end of input", len(text))
        tok, off = tokens[pos]
        pos += 1
        if tok == "(":
            kids = []
            while pos < len(tokens) and tokens[pos][0] != ")":
                kids.append(parse())
            if pos >= len(tokens):
                fail("unbalanced '('", off)
            pos += 1
            if not kids:
                fail("interior node without children", off)
            return kids
        if re.fullmatch(r"-?\d+", tok):
            v = int(tok)
            if abs(v) > (VAL_MAX_LIMIT if val_max is None else val_max):
                fail(f"leaf value {v} out of range", off)
            return v
        fail(f"unexpected token {tok!r}", off)

    body = parse()
    if pos != len(tokens):
        fail(f"trailing token {tokens[pos][0]!r}", tokens[pos][1])
    return TreeDomain(body, root_is_max=root_is_max, val_max=val_max)


# --- synthetic trees --------------------------------------------------------

PERFECT = "perfect"
RANDOM = "random"
NOISY = "noisy"


@dataclass(frozen=True)
class SynthSpec:
    """Seeded uniform (or variable-width) tree.

    ``ordering`` is ``"perfect"``, ``"random"`` or ``"noisy"``; with noisy
    ordering the best child is moved to the front with probability
    ``noise_p``. ``min_width`` gives per-node widths drawn from
    ``[min_width, width]`` instead of a uniform ``width``.
    """

    width: int
    depth: int
    seed: int = 0
    lo: int = -100
    hi: int = 100
    ordering: str = RANDOM
    noise_p: float = 0.5
    min_width: int | None = None
    root_is_max: bool = True


def synth_tree(spec: SynthSpec, node_budget: int = DEFAULT_NODE_BUDGET) -> TreeDomain:
    if spec.width < 1 or spec.depth < 0 or spec.lo > spec.hi:
        raise ValueError(f"invalid synth spec {spec}")
    if spec.min_width is not None and not 1 <= spec.min_width <= spec.width:
        raise ValueError("min_width must lie in [1, width]")
    if spec.ordering not in (PERFECT, RANDOM, NOISY):
        raise ValueError(f"unknown ordering {spec.ordering!r}")
    if spec.min_width is None:
        total = sum(spec.width**i for i in range(spec.depth + 1))
        if total > node_budget:
            raise BudgetExceeded(f"{spec.width}^{spec.depth} tree has {total} nodes > budget {node_budget}")
    rng = random.Random(spec.seed)
    count = 0

    def build(depth: int, is_max: bool):
        nonlocal count
        count += 1
        if count > node_budget:
            raise BudgetExceeded(f"tree exceeds node budget {node_budget}")
        if depth == 0:
            v = rng.randint(spec.lo, spec.hi)
            return v, v
        w = spec.width if spec.min_width is None else rng.randint(spec.min_width, spec.width)
        kids = [build(depth - 1, not is_max) for _ in range(w)]
        values = [v for _, v in kids]
        best = values.index(max(values) if is_max else min(values))
        reorder = spec.ordering == PERFECT or (
            spec.ordering == NOISY and rng.random() < spec.noise_p)
        if reorder and best:
            kids.insert(0, kids.pop(best))
        return [b for b, _ in kids], values[best]

    body, _ = build(spec.depth, spec.root_is_max)
    return TreeDomain(body, root_is_max=spec.root_is_max,
                      val_max=max(1, abs(spec.lo), abs(spec.hi)), node_budget=node_budget)
