"""Two-terminal series-parallel (TTSP) graphs as decomposition trees.

Each TTSP graph carries six exact counts, in the fixed order

    (tau, tau2, alpha, alpha2, alpha2star, alphastar)

= spanning trees, terminal-separating 2-forests, acyclic orientations,
acyclic orientations with no directed path between the terminals,
orientations where every edge is on a directed cycle or terminal path, and
totally cyclic orientations.  Series and parallel connection act on these
vectors by closed-form recursions, so a tree can be evaluated without ever
building its graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import NamedTuple

from .graph import Multigraph, TwoTerminalGraph


class AlgebraError(ValueError):
    """Parameter vector arithmetic went wrong (odd numerator, negative count)."""


class ExprError(ValueError):
    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class ParamVec(NamedTuple):
    tau: int
    tau2: int
    alpha: int
    alpha2: int
    alpha2star: int
    alphastar: int


def _half(n: int) -> int:
    if n % 2:
        raise AlgebraError(f"odd numerator {n} in a halved term")
    return n // 2


def _checked(*values: int) -> ParamVec:
    if min(values) < 0:
        raise AlgebraError(f"negative count in {values}")
    return ParamVec(*values)


def k2_params() -> ParamVec:
    return ParamVec(1, 1, 2, 0, 2, 0)


def ser(a: ParamVec, b: ParamVec) -> ParamVec:
    """Counts for the series connection of a then b."""
    return _checked(
        a.tau * b.tau,
        a.tau * b.tau2 + a.tau2 * b.tau,
        a.alpha * b.alpha,
        a.alpha * b.alpha - _half((a.alpha - a.alpha2) * (b.alpha - b.alpha2)),
        a.alpha2star * b.alpha2star
        - _half((a.alpha2star - a.alphastar) * (b.alpha2star - b.alphastar)),
        a.alphastar * b.alphastar,
    )


def par(a: ParamVec, b: ParamVec) -> ParamVec:
    """Counts for the parallel connection of a and b."""
    return _checked(
        a.tau * b.tau2 + a.tau2 * b.tau,
        a.tau2 * b.tau2,
        a.alpha * b.alpha - _half((a.alpha - a.alpha2) * (b.alpha - b.alpha2)),
        a.alpha2 * b.alpha2,
        a.alpha2star * b.alpha2star,
        a.alpha2star * b.alpha2star
        - _half((a.alpha2star - a.alphastar) * (b.alpha2star - b.alphastar)),
    )


def spdual(a: ParamVec) -> ParamVec:
    return ParamVec(a.tau2, a.tau, a.alpha2star, a.alphastar, a.alpha, a.alpha2)


# --- trees -----------------------------------------------------------------

LEAF_KIND, SERIES, PARALLEL = "K", "S", "P"
_KIND_RANK = {LEAF_KIND: 0, SERIES: 1, PARALLEL: 2}


@dataclass(frozen=True)
class Tree:
    """A decomposition tree node: a K2 leaf or an n-ary S/P node."""

    kind: str
    children: tuple[Tree, ...] = ()

    def __post_init__(self) -> None:
        if self.kind == LEAF_KIND:
            if self.children:
                raise AlgebraError("a leaf has no children")
        elif self.kind in (SERIES, PARALLEL):
            if len(self.children) < 2:
                raise AlgebraError(f"{self.kind} node needs at least two children")
        else:
            raise AlgebraError(f"unknown node kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == LEAF_KIND:
            return "K"
        return f"{self.kind}({','.join(map(str, self.children))})"

    @property
    def is_leaf(self) -> bool:
        return self.kind == LEAF_KIND

    @property
    def num_edges(self) -> int:
        return _num_edges(self)


LEAF = Tree(LEAF_KIND)


def S(*children: Tree) -> Tree:
    return Tree(SERIES, tuple(children))


def P(*children: Tree) -> Tree:
    return Tree(PARALLEL, tuple(children))


def combine(op: str, a: Tree, b: Tree) -> Tree:
    """Binary series/parallel connection of two trees, flattened one level."""
    children: list[Tree] = []
    for t in (a, b):
        children.extend(t.children if t.kind == op else (t,))
    return Tree(op, tuple(children))


@lru_cache(maxsize=None)
def _num_edges(t: Tree) -> int:
    return 1 if t.is_leaf else sum(_num_edges(c) for c in t.children)


@lru_cache(maxsize=None)
def sort_key(t: Tree) -> tuple:
    """Total order: leaf < series < parallel, then child count, then children."""
    if t.is_leaf:
        return (0,)
    return (_KIND_RANK[t.kind], len(t.children), tuple(sort_key(c) for c in t.children))


@lru_cache(maxsize=None)
def eval_tree(t: Tree) -> ParamVec:
    if t.is_leaf:
        return k2_params()
    op = ser if t.kind == SERIES else par
    return reduce(op, (eval_tree(c) for c in t.children))


def dual_tree(t: Tree) -> Tree:
    if t.is_leaf:
        return t
    kind = PARALLEL if t.kind == SERIES else SERIES
    return Tree(kind, tuple(dual_tree(c) for c in t.children))


def reverse_tree(t: Tree) -> Tree:
    """The tree of the same graph with source and sink swapped."""
    if t.is_leaf:
        return t
    children = tuple(reverse_tree(c) for c in t.children)
    if t.kind == SERIES:
        children = children[::-1]
    return Tree(t.kind, children)


@lru_cache(maxsize=None)
def oriented_canonical(t: Tree) -> Tree:
    """Flatten nested same-kind nodes and sort parallel children.

    Equal results exactly when the realisations are isomorphic with source
    mapped to source.
    """
    if t.is_leaf:
        return t
    flat: list[Tree] = []
    for c in map(oriented_canonical, t.children):
        flat.extend(c.children if c.kind == t.kind else (c,))
    if t.kind == PARALLEL:
        flat.sort(key=sort_key)
    return Tree(t.kind, tuple(flat))


@lru_cache(maxsize=None)
def canonical(t: Tree) -> Tree:
    """Canonical form up to two-terminal isomorphism, including reversal.

    Reversal is applied to the whole tree at once: reversing a single inner
    series node changes the graph.
    """
    a = oriented_canonical(t)
    b = oriented_canonical(reverse_tree(t))
    return min(a, b, key=sort_key)


def realize(t: Tree) -> TwoTerminalGraph:
    """Build the multigraph: source 0, sink 1, edge ids in leaf order."""
    pairs: list[tuple[int, int]] = []
    next_vertex = 2

    def build(node: Tree, s: int, x: int) -> None:
        nonlocal next_vertex
        if node.is_leaf:
            pairs.append((s, x))
        elif node.kind == PARALLEL:
            for c in node.children:
                build(c, s, x)
        else:
            cur = s
            last = len(node.children) - 1
            for i, c in enumerate(node.children):
                if i == last:
                    nxt = x
                else:
                    nxt, next_vertex = next_vertex, next_vertex + 1
                build(c, cur, nxt)
                cur = nxt

    build(t, 0, 1)
    return TwoTerminalGraph(Multigraph.from_edges(pairs, next_vertex), 0, 1)


def all_trees(max_edges: int) -> dict[int, list[Tree]]:
    """Every TTSP graph with up to ``max_edges`` edges, one canonical tree each."""
    oriented: dict[int, set[Tree]] = {1: {LEAF}}
    for n in range(2, max_edges + 1):
        level: set[Tree] = set()
        for a in range(1, n):
            for x in oriented[a]:
                for y in oriented[n - a]:
                    level.add(oriented_canonical(combine(SERIES, x, y)))
                    level.add(oriented_canonical(combine(PARALLEL, x, y)))
        oriented[n] = level
    return {
        n: sorted({canonical(t) for t in trees}, key=sort_key)
        for n, trees in oriented.items()
    }


# --- expression syntax -----------------------------------------------------


def parse_expr(text: str) -> Tree:
    """Parse ``K | S(e, e, ...) | P(e, e, ...)``; whitespace is ignored."""
    src = [(i, ch) for i, ch in enumerate(text) if not ch.isspace()]
    pos = 0

    def here() -> int:
        return src[pos][0] if pos < len(src) else len(text)

    def peek() -> str | None:
        return src[pos][1] if pos < len(src) else None

    def expect(ch: str) -> None:
        nonlocal pos
        if peek() != ch:
            got = "end of input" if peek() is None else repr(peek())
            raise ExprError(f"expected {ch!r}, got {got}", here())
        pos += 1

    def expr() -> Tree:
        nonlocal pos
        ch = peek()
        if ch == "K":
            pos += 1
            return LEAF
        if ch in (SERIES, PARALLEL):
            start = here()
            pos += 1
            expect("(")
            children = [expr()]
            while peek() == ",":
                pos += 1
                children.append(expr())
            expect(")")
            if len(children) < 2:
                raise ExprError(f"{ch} node needs at least two operands", start)
            return Tree(ch, tuple(children))
        got = "end of input" if ch is None else repr(ch)
        raise ExprError(f"expected 'K', 'S(' or 'P(', got {got}", here())

    tree = expr()
    if pos != len(src):
        raise ExprError(f"trailing input {peek()!r}", here())
    return tree
