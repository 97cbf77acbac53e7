"""Enumeration of extendable, irreducible TTSP graphs up to a fixed point.

Starting from K2, pairs of survivors are combined in series and in parallel in
order of total edge count.  A combination is dropped when it is already
present, when it is not extendable, or when ``replaces`` shows it can be
replaced by a survivor with fewer edges.  The process closes off after 19
graphs.

Survivors are numbered to agree with the standard catalogue in
``KNOWN_BUILDS``; anything found outside the catalogue is numbered after it in
discovery order.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .algebra import (
    LEAF,
    PARALLEL,
    SERIES,
    ParamVec,
    Tree,
    canonical,
    combine,
    dual_tree,
    eval_tree,
    realize,
)
from .graph import (
    canonical_form,
    is_extendable,
    two_terminal_isomorphic,
)
from .oracle import brute_triple
from .reducibility import mw_status, replaces
from .reference import KNOWN_BUILDS, build_label
from .tutte import TutteEvaluator, tutte_triple


@lru_cache(maxsize=None)
def known_trees() -> tuple[Tree, ...]:
    trees = [LEAF]
    for i in range(1, len(KNOWN_BUILDS) + 1):
        op, a, b = KNOWN_BUILDS[i]
        trees.append(canonical(combine(op, trees[a], trees[b])))
    return tuple(trees)


@dataclass(frozen=True)
class Survivor:
    index: int
    tree: Tree
    params: ParamVec
    edges: int
    build: tuple[str, int, int] | None  # None for K2


class Kind(Enum):
    IN_TABLE = "in_table"
    NON_EXTENDABLE = "non_extendable"
    REDUCIBLE = "reducible"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    target: int | None = None

    def __str__(self) -> str:
        if self.kind is Kind.NON_EXTENDABLE:
            return "N"
        if self.kind is Kind.IN_TABLE:
            return f"={self.target}"
        return str(self.target)

    @classmethod
    def parse(cls, cell: str) -> Classification:
        cell = cell.strip()
        if cell == "N":
            return cls(Kind.NON_EXTENDABLE)
        if cell.startswith("="):
            return cls(Kind.IN_TABLE, int(cell[1:]))
        return cls(Kind.REDUCIBLE, int(cell))


def _find_existing(tree: Tree, survivors: list[Survivor]) -> int | None:
    """Index of a survivor two-terminal isomorphic to ``tree``, either way round.

    Canonical trees decide the common case; same-size survivors with a
    different canonical tree are confirmed by explicit isomorphism search.
    """
    c = canonical(tree)
    same_size = [s for s in survivors if s.edges == tree.num_edges]
    for s in same_size:
        if s.tree == c:
            return s.index
    g = realize(c)
    for s in same_size:
        if two_terminal_isomorphic(g, realize(s.tree)):
            return s.index
    return None


def _classify_new(tree: Tree, survivors: list[Survivor]) -> Classification | None:
    """Classification of a combination, or None if it is a new survivor."""
    found = _find_existing(tree, survivors)
    if found is not None:
        return Classification(Kind.IN_TABLE, found)
    if not is_extendable(realize(tree)):
        return Classification(Kind.NON_EXTENDABLE)
    params, edges = eval_tree(tree), tree.num_edges
    for s in sorted(survivors, key=lambda s: s.index):
        if s.edges < edges and replaces(params, s.params):
            return Classification(Kind.REDUCIBLE, s.index)
    return None


@dataclass
class SearchLog:
    """Every combination the enumeration looked at, in processing order."""

    steps: list[tuple[str, int, int, Classification | None]] = field(default_factory=list)
    closed: bool = False  # True when every pair was processed


def run_search(
    max_edges: int | None = None,
    *,
    order_seed: int | None = None,
    workers: int = 1,
    numbering: str = "known",
) -> tuple[list[Survivor], SearchLog]:
    """Run the enumeration; combinations above ``max_edges`` edges are skipped.

    ``order_seed`` shuffles the processing order within each edge count and
    ``workers`` classifies each level on a thread pool; neither changes the
    resulting set.
    """
    if max_edges is not None and max_edges < 1:
        raise ValueError("max_edges must be at least 1")
    if numbering not in ("known", "discovery"):
        raise ValueError(f"unknown numbering {numbering!r}")
    known = {t: i for i, t in enumerate(known_trees())}
    survivors = [Survivor(0, LEAF, eval_tree(LEAF), 1, None)]
    log = SearchLog()
    rng = random.Random(order_seed) if order_seed is not None else None

    def next_index(tree: Tree) -> int:
        used = {s.index for s in survivors}
        if numbering == "known" and tree in known:
            return known[tree]
        i = len(known) if numbering == "known" else 0
        while i in used:
            i += 1
        return i

    total = 2
    while True:
        largest = max(s.edges for s in survivors)
        if total > 2 * largest:
            log.closed = True
            break
        if max_edges is not None and total > max_edges:
            break
        snapshot = sorted(survivors, key=lambda s: s.index)
        jobs = []
        for a in snapshot:
            for b in snapshot:
                if a.index <= b.index and a.edges + b.edges == total:
                    for op in (SERIES, PARALLEL):
                        jobs.append((a.index, b.index, op, combine(op, a.tree, b.tree)))
        if rng is not None:
            rng.shuffle(jobs)
        if workers > 1:
            with ThreadPoolExecutor(workers) as pool:
                verdicts = list(pool.map(lambda job: _classify_new(job[3], snapshot), jobs))
        else:
            verdicts = [_classify_new(job[3], snapshot) for job in jobs]
        # commit sequentially: earlier new graphs in this level are now "in table"
        for (i, j, op, tree), verdict in zip(jobs, verdicts):
            if verdict is None:
                fresh = [s for s in survivors if s.edges == total]
                found = _find_existing(tree, fresh)
                if found is not None:
                    verdict = Classification(Kind.IN_TABLE, found)
                else:
                    c = canonical(tree)
                    index = next_index(c)
                    # catalogue graphs keep their catalogue recipe; both build the same graph
                    build = KNOWN_BUILDS[index] if known.get(c) == index else (op, i, j)
                    survivors.append(Survivor(index, c, eval_tree(c), c.num_edges, build))
            log.steps.append((op, i, j, verdict))
        total += 1
    return sorted(survivors, key=lambda s: s.index), log


def enumerate_survivors(
    max_edges: int | None = None,
    *,
    order_seed: int | None = None,
    workers: int = 1,
    numbering: str = "known",
) -> list[Survivor]:
    return run_search(
        max_edges, order_seed=order_seed, workers=workers, numbering=numbering
    )[0]


def _by_index(survivors: list[Survivor]) -> dict[int, Survivor]:
    return {s.index: s for s in survivors}


def classify_pair(survivors: list[Survivor], i: int, j: int, op: str) -> Classification:
    """Classify ``G_i op G_j`` against the full survivor list."""
    table = _by_index(survivors)
    if i not in table or j not in table:
        raise ValueError(f"no survivor with index {i if i not in table else j}")
    if op not in (SERIES, PARALLEL):
        raise ValueError(f"operation must be {SERIES!r} or {PARALLEL!r}")
    verdict = _classify_new(combine(op, table[i].tree, table[j].tree), survivors)
    if verdict is None:
        raise LookupError(f"{i} {op} {j} is a graph the survivor list is missing")
    return verdict


def _classify_or_missing(survivors: list[Survivor], i: int, j: int, op: str) -> Classification | None:
    table = _by_index(survivors)
    return _classify_new(combine(op, table[i].tree, table[j].tree), survivors)


# --- tables ----------------------------------------------------------------


def sp_dual_index(survivors: list[Survivor], s: Survivor) -> int | None:
    d = canonical(dual_tree(s.tree))
    return next((t.index for t in survivors if t.tree == d), None)


@dataclass
class Tables:
    table1: list[tuple]  # (index, edges, dual index, build label, *params)
    table2: list[list[Classification | None]]  # [i][j]: i<j series, i>j parallel
    table3: dict[str, list[Classification | None]]  # "series"/"parallel" self-combinations


def emit_tables(survivors: list[Survivor]) -> Tables:
    ordered = sorted(survivors, key=lambda s: s.index)
    n = len(ordered)
    idx = [s.index for s in ordered]
    table1 = [
        (s.index, s.edges, sp_dual_index(survivors, s), build_label(s.build), *s.params)
        for s in ordered
    ]
    table2: list[list[Classification | None]] = [[None] * n for _ in range(n)]
    for r, i in enumerate(idx):
        for c, j in enumerate(idx):
            if i != j:
                table2[r][c] = _classify_or_missing(survivors, i, j, SERIES if i < j else PARALLEL)
    table3 = {
        "series": [_classify_or_missing(survivors, i, i, SERIES) for i in idx],
        "parallel": [_classify_or_missing(survivors, i, i, PARALLEL) for i in idx],
    }
    return Tables(table1, table2, table3)


# --- closure checks --------------------------------------------------------


@dataclass
class FixedPointReport:
    checked: int = 0
    violations: list[tuple[str, int, int]] = field(default_factory=list)
    bad_reductions: list[tuple[str, int, int, int]] = field(default_factory=list)
    in_table_and_reducible: list[tuple[str, int, int, int]] = field(default_factory=list)
    # cells not in the table whose graph (terminals forgotten) matches a survivor
    graph_iso_only: list[tuple[str, int, int, int]] = field(default_factory=list)
    # "=x" cells with the strongest relation that holds: "two_terminal" or "graph"
    in_table_relation: list[tuple[str, int, int, int, str]] = field(default_factory=list)

    @property
    def closed(self) -> bool:
        return not self.violations and not self.bad_reductions


def verify_fixed_point(survivors: list[Survivor]) -> FixedPointReport:
    """Check every series/parallel combination of two survivors has a home."""
    report = FixedPointReport()
    ordered = sorted(survivors, key=lambda s: s.index)
    forms = {}
    for s in ordered:
        forms.setdefault((s.edges, canonical_form(realize(s.tree).graph)), s.index)
    for a in ordered:
        for b in ordered:
            if a.index > b.index:
                continue
            for op in (SERIES, PARALLEL):
                report.checked += 1
                tree = combine(op, a.tree, b.tree)
                verdict = _classify_new(tree, ordered)
                if verdict is None:
                    report.violations.append((op, a.index, b.index))
                    continue
                params = eval_tree(tree)
                if verdict.kind is Kind.REDUCIBLE:
                    target = _by_index(ordered)[verdict.target]
                    if not (target.edges < tree.num_edges and replaces(params, target.params)):
                        report.bad_reductions.append((op, a.index, b.index, verdict.target))
                elif verdict.kind is Kind.IN_TABLE:
                    g, h = realize(tree), realize(_by_index(ordered)[verdict.target].tree)
                    relation = "two_terminal" if two_terminal_isomorphic(g, h) else "graph"
                    report.in_table_relation.append((op, a.index, b.index, verdict.target, relation))
                    for s in ordered:
                        if s.edges < tree.num_edges and replaces(params, s.params):
                            report.in_table_and_reducible.append((op, a.index, b.index, s.index))
                            break
                if verdict.kind is not Kind.IN_TABLE:
                    key = (tree.num_edges, canonical_form(realize(tree).graph))
                    if key in forms:
                        report.graph_iso_only.append((op, a.index, b.index, forms[key]))
    return report


@dataclass
class ClosureRow:
    index: int
    tutte: tuple[int, int, int]  # (tau, alpha, alphastar) of G + st
    brute: tuple[int, int, int] | None
    holds: bool

    @property
    def agrees(self) -> bool:
        return self.brute is None or self.brute == self.tutte


def theorem_closure_check(
    survivors: list[Survivor], evaluator: TutteEvaluator | None = None, brute: bool = True
) -> list[ClosureRow]:
    """Add the terminal edge to each survivor and test alpha*alphastar >= tau^2."""
    rows = []
    for s in sorted(survivors, key=lambda s: s.index):
        closed_graph, _ = realize(s.tree).with_terminal_edge()
        triple = tutte_triple(closed_graph, evaluator)
        status = mw_status(*triple)
        rows.append(ClosureRow(
            s.index,
            triple,
            brute_triple(closed_graph) if brute else None,
            status.holds_multiplicative,
        ))
    return rows
