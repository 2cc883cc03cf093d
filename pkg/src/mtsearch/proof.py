"""Recorded Alpha-Beta traversals and the check that they justify the
returned bound.

A fail-soft search that returns ``g`` must have visited a max solution tree
(all children at max nodes, one at min nodes) valued ``g`` when ``g <= alpha``,
a min solution tree valued ``g`` when ``g >= beta``, and both when ``g`` lies
inside the window. :func:`verify_postcondition` recomputes those bounds from
the recorded nodes and the domain alone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .domains.base import NEG_INF, POS_INF, SearchDomain


class ProofNode:
    """One visited node. ``is_max`` is None for leaves; ``children`` lists
    ``(child index, node)`` for the children actually searched."""

    __slots__ = ("pos", "is_max", "value", "n_children", "children")

    def __init__(self, pos, is_max: bool | None, value: int | None, n_children: int):
        self.pos = pos
        self.is_max = is_max
        self.value = value
        self.n_children = n_children
        self.children: list[tuple[int, ProofNode]] = []

    @property
    def is_leaf(self) -> bool:
        return self.is_max is None

    def leaves(self):
        stack = [self]
        while stack:
            n = stack.pop()
            if n.is_leaf:
                yield n
            else:
                stack.extend(c for _, c in reversed(n.children))

    def size(self) -> int:
        return 1 + sum(c.size() for _, c in self.children)


class ProofTree:
    """Filled in by ``alpha_beta(..., proof=ProofTree())``."""

    def __init__(self):
        self.root: ProofNode | None = None
        self.alpha = NEG_INF
        self.beta = POS_INF
        self.result: int | None = None
        self.depth = 0


class Kind(enum.Enum):
    T_PLUS = "T+"
    T_MINUS = "T-"
    BOTH = "both"


@dataclass
class Verdict:
    ok: bool
    kind: Kind | None = None
    reason: str = ""
    t_plus: ProofNode | None = None
    t_minus: ProofNode | None = None
    upper: int | None = None  # best upper bound the record supports
    lower: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "PASS" if self.ok else f"FAIL({self.reason})"


class MalformedProof(ValueError):
    pass


def _check_record(domain: SearchDomain, node: ProofNode, depth: int):
    kids = domain.children(node.pos) if depth > 0 else ()
    label = domain.label(node.pos)
    if node.is_leaf:
        if kids:
            raise MalformedProof(f"{label} recorded as a leaf but has children")
        actual = domain.evaluate(node.pos)
        if actual != node.value:
            raise MalformedProof(f"leaf {label} recorded {node.value}, evaluates to {actual}")
        return
    if not kids or node.n_children != len(kids):
        raise MalformedProof(f"{label} child count mismatch")
    if node.is_max != domain.is_max(node.pos):
        raise MalformedProof(f"{label} node type mismatch")
    last = -1
    for i, c in node.children:
        if not last < i < len(kids):
            raise MalformedProof(f"{label} bad child index {i}")
        if domain.key(c.pos) != domain.key(kids[i]):
            raise MalformedProof(f"{label} child {i} is not the domain's child")
        last = i
        _check_record(domain, c, depth - 1)


def upper_bound(node: ProofNode) -> int:
    """Tightest upper bound backed by a max solution tree inside the record."""
    if node.is_leaf:
        return node.value
    vals = [upper_bound(c) for _, c in node.children]
    if node.is_max:
        return max(vals) if len(vals) == node.n_children else POS_INF
    return min(vals, default=POS_INF)


def lower_bound(node: ProofNode) -> int:
    if node.is_leaf:
        return node.value
    vals = [lower_bound(c) for _, c in node.children]
    if node.is_max:
        return max(vals, default=NEG_INF)
    return min(vals) if len(vals) == node.n_children else NEG_INF


def _extract(node: ProofNode, plus: bool) -> ProofNode:
    bound = upper_bound if plus else lower_bound
    out = ProofNode(node.pos, node.is_max, node.value, node.n_children)
    if node.is_leaf:
        return out
    if node.is_max == plus:
        out.children = [(i, _extract(c, plus)) for i, c in node.children]
    else:
        pick = min if plus else max
        i, c = pick(node.children, key=lambda ic: bound(ic[1]))
        out.children = [(i, _extract(c, plus))]
    return out


def solution_value(tree: ProofNode, plus: bool) -> int:
    """Value of a solution tree after checking its shape; raises on bad shape."""
    for n in _walk(tree):
        if n.is_leaf:
            continue
        full = n.is_max == plus
        if full and len(n.children) != n.n_children:
            raise MalformedProof("solution tree misses a child at a full node")
        if not full and len(n.children) != 1:
            raise MalformedProof("solution tree must keep exactly one child at a choice node")
    vals = [leaf.value for leaf in tree.leaves()]
    return max(vals) if plus else min(vals)


def _walk(node: ProofNode):
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        stack.extend(c for _, c in n.children)


def verify_postcondition(domain: SearchDomain, proof: ProofTree) -> Verdict:
    """PASS when the record contains the solution tree(s) the result needs."""
    if proof.root is None or proof.result is None:
        raise MalformedProof("empty proof record")
    try:
        _check_record(domain, proof.root, proof.depth)
    except MalformedProof as exc:
        return Verdict(False, reason=str(exc))
    g, a, b = proof.result, proof.alpha, proof.beta
    kind = Kind.BOTH if a < g < b else Kind.T_PLUS if g <= a else Kind.T_MINUS
    ub, lb = upper_bound(proof.root), lower_bound(proof.root)
    v = Verdict(True, kind, upper=ub, lower=lb)
    need_plus = kind in (Kind.BOTH, Kind.T_PLUS)
    need_minus = kind in (Kind.BOTH, Kind.T_MINUS)
    if need_plus:
        if ub != g:
            return Verdict(False, kind, f"no max solution tree of value {g} (best {ub})", upper=ub, lower=lb)
        v.t_plus = _extract(proof.root, True)
        if solution_value(v.t_plus, True) != g:
            return Verdict(False, kind, "extracted max solution tree has wrong value")
    if need_minus:
        if lb != g:
            return Verdict(False, kind, f"no min solution tree of value {g} (best {lb})", upper=ub, lower=lb)
        v.t_minus = _extract(proof.root, False)
        if solution_value(v.t_minus, False) != g:
            return Verdict(False, kind, "extracted min solution tree has wrong value")
    return v
