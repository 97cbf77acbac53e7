"""Ground truth by exhaustive enumeration.

Deliberately naive: every orientation or every edge subset is inspected.
Orientations are bitmasks (bit i set = edge i reversed); loops are enumerated
in both directions like any other edge, which matches the Tutte evaluations
(a loop contributes a factor y).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .algebra import ParamVec
from .graph import Multigraph, TwoTerminalGraph, parallel_class, series_class

MAX_ORIENTATION_EDGES = 16
MAX_SUBSET_EDGES = 20


class OracleSizeError(ValueError):
    """Input too large for exhaustive enumeration."""


def _indexed(g: Multigraph) -> tuple[int, list[tuple[int, int]], dict[int, int]]:
    index = {x: i for i, x in enumerate(sorted(g.vertices))}
    return len(index), [(index[u], index[v]) for _, u, v in g.edges], index


def _guard(m: int, limit: int) -> None:
    if m > limit:
        raise OracleSizeError(f"{m} edges exceeds the enumeration limit of {limit}")


def _forest_components(n: int, pairs: list[tuple[int, int]], chosen) -> list[int] | None:
    """Union-find roots if ``chosen`` edges form a forest, else None."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in chosen:
        u, v = pairs[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            return None
        parent[ru] = rv
    return [find(x) for x in range(n)]


def brute_spanning_trees(g: Multigraph) -> int:
    n, pairs, _ = _indexed(g)
    _guard(len(pairs), MAX_SUBSET_EDGES)
    if n == 0:
        return 1
    return sum(
        _forest_components(n, pairs, chosen) is not None
        for chosen in combinations(range(len(pairs)), n - 1)
    )


def brute_two_forests(g: TwoTerminalGraph) -> int:
    """Spanning forests with two trees, one holding each terminal."""
    n, pairs, index = _indexed(g.graph)
    _guard(len(pairs), MAX_SUBSET_EDGES)
    s, t = index[g.source], index[g.sink]
    count = 0
    for chosen in combinations(range(len(pairs)), n - 2):
        roots = _forest_components(n, pairs, chosen)
        if roots is not None and roots[s] != roots[t]:
            count += 1
    return count


def _closure(n: int, arcs: list[tuple[int, int]]) -> list[int]:
    reach = [1 << i for i in range(n)]
    for u, v in arcs:
        reach[u] |= 1 << v
    for k in range(n):
        bit = 1 << k
        rk = reach[k]
        for i in range(n):
            if reach[i] & bit:
                reach[i] |= rk
    return reach


@dataclass
class OrientationCounts:
    acyclic: int = 0
    very_acyclic: int = 0
    totally_cyclic: int = 0
    almost_totally_cyclic: int = 0


def orientation_counts(g: Multigraph, terminals: tuple[int, int] | None = None) -> OrientationCounts:
    """Classify all 2^m orientations in a single pass."""
    n, pairs, index = _indexed(g)
    m = len(pairs)
    _guard(m, MAX_ORIENTATION_EDGES)
    st = None if terminals is None else (index[terminals[0]], index[terminals[1]])
    out = OrientationCounts()
    for mask in range(1 << m):
        arcs = [(v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(pairs)]
        reach = _closure(n, arcs)
        on_cycle = [reach[v] >> u & 1 for u, v in arcs]
        if not any(on_cycle):
            out.acyclic += 1
            if st is not None:
                s, t = st
                if not (reach[s] >> t & 1 or reach[t] >> s & 1):
                    out.very_acyclic += 1
        if all(on_cycle):
            out.totally_cyclic += 1
            out.almost_totally_cyclic += st is not None
        elif st is not None:
            s, t = st
            if all(
                c
                or (reach[s] >> u & 1 and reach[v] >> t & 1)
                or (reach[t] >> u & 1 and reach[v] >> s & 1)
                for c, (u, v) in zip(on_cycle, arcs)
            ):
                out.almost_totally_cyclic += 1
    return out


def brute_acyclic(g: Multigraph) -> int:
    return orientation_counts(g).acyclic


def brute_totally_cyclic(g: Multigraph) -> int:
    return orientation_counts(g).totally_cyclic


def brute_very_acyclic(g: TwoTerminalGraph) -> int:
    return orientation_counts(g.graph, (g.source, g.sink)).very_acyclic


def brute_almost_totally_cyclic(g: TwoTerminalGraph) -> int:
    return orientation_counts(g.graph, (g.source, g.sink)).almost_totally_cyclic


def brute_triple(g: Multigraph) -> tuple[int, int, int]:
    """(tau, alpha, alphastar) by enumeration."""
    c = orientation_counts(g)
    return brute_spanning_trees(g), c.acyclic, c.totally_cyclic


def brute_param_vec(g: TwoTerminalGraph) -> ParamVec:
    c = orientation_counts(g.graph, (g.source, g.sink))
    return ParamVec(
        brute_spanning_trees(g.graph),
        brute_two_forests(g),
        c.acyclic,
        c.very_acyclic,
        c.almost_totally_cyclic,
        c.totally_cyclic,
    )


# --- adding two edges to a bundle or a path -------------------------------


@dataclass
class ExtensionReport:
    """Counts before/after adding two edges next to ``edge``, and the checks."""

    edge: int
    before: tuple[int, int, int]  # (tau, alpha, alphastar)
    after: tuple[int, int, int]
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _multiplicative(triple: tuple[int, int, int]) -> bool:
    tau, alpha, alphastar = triple
    return alpha * alphastar >= tau * tau


def add_parallel_pair(g: Multigraph, e: int) -> Multigraph:
    u, v = g.endpoints(e)
    g, _ = g.add_edge(u, v)
    g, _ = g.add_edge(u, v)
    return g


def add_series_pair(g: Multigraph, e: int) -> Multigraph:
    """Subdivide e twice so that it becomes a path of three edges."""
    u, v = g.endpoints(e)
    a = 1 + max(g.vertices)
    b = a + 1
    edges = tuple((eid, x, a) if eid == e else (eid, x, y) for eid, x, y in g.edges)
    top = 1 + max(eid for eid, _, _ in g.edges)
    edges += ((top, a, b), (top + 1, b, v))
    return Multigraph(g.vertices | {a, b}, edges)


def verify_parallel_extension(g: Multigraph, e: int, require_class: bool = True) -> ExtensionReport:
    """Add two edges parallel to e and compare counts.

    The lemma being checked assumes e has a parallel partner; pass
    ``require_class=False`` to run the comparison anyway.
    """
    if require_class and len(parallel_class(g, e)) < 2:
        raise ValueError(f"edge {e} has a trivial parallel class")
    before, after = brute_triple(g), brute_triple(add_parallel_pair(g, e))
    return ExtensionReport(e, before, after, {
        "alphastar_at_least_4x": after[2] >= 4 * before[2],
        "alpha_unchanged": after[1] == before[1],
        "tau_at_most_2x": after[0] <= 2 * before[0],
        "multiplicative_inherited": not _multiplicative(before) or _multiplicative(after),
    })


def verify_series_extension(g: Multigraph, e: int, require_class: bool = True) -> ExtensionReport:
    """Subdivide e twice and compare counts; the dual of the parallel check."""
    if require_class and len(series_class(g, e)) < 2:
        raise ValueError(f"edge {e} has a trivial series class")
    before, after = brute_triple(g), brute_triple(add_series_pair(g, e))
    return ExtensionReport(e, before, after, {
        "alpha_at_least_4x": after[1] >= 4 * before[1],
        "alphastar_unchanged": after[2] == before[2],
        "tau_at_most_2x": after[0] <= 2 * before[0],
        "multiplicative_inherited": not _multiplicative(before) or _multiplicative(after),
    })
