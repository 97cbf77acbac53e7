"""Multigraphs with loops, and the structural predicates used by the search.

Vertices and edges are dense nonnegative integers.  A graph is immutable;
every edit returns a new graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Malformed graph, unknown edge id, or unparsable graph file."""


@dataclass(frozen=True)
class Multigraph:
    vertices: frozenset[int]
    edges: tuple[tuple[int, int, int], ...]  # (edge id, u, v)

    def __post_init__(self) -> None:
        seen = set()
        for eid, u, v in self.edges:
            if eid in seen:
                raise GraphError(f"duplicate edge id {eid}")
            seen.add(eid)
            if u not in self.vertices or v not in self.vertices:
                raise GraphError(f"edge {eid} has an endpoint outside the vertex set")

    @classmethod
    def from_edges(cls, pairs: Iterable[tuple[int, int]], n: int | None = None) -> Multigraph:
        """Build a graph whose edge ids are the positions in ``pairs``."""
        pairs = list(pairs)
        if n is None:
            n = 1 + max((max(u, v) for u, v in pairs), default=-1)
        return cls(frozenset(range(n)), tuple((i, u, v) for i, (u, v) in enumerate(pairs)))

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> list[int]:
        return [eid for eid, _, _ in self.edges]

    def endpoints(self, e: int) -> tuple[int, int]:
        for eid, u, v in self.edges:
            if eid == e:
                return u, v
        raise GraphError(f"unknown edge id {e}")

    def pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for _, u, v in self.edges]

    def is_loop(self, e: int) -> bool:
        u, v = self.endpoints(e)
        return u == v

    def delete_edge(self, e: int) -> Multigraph:
        self.endpoints(e)
        return Multigraph(self.vertices, tuple(x for x in self.edges if x[0] != e))

    def contract_edge(self, e: int) -> Multigraph:
        """Contract ``e``; parallel copies of ``e`` become loops."""
        u, v = self.endpoints(e)
        if u == v:
            return self.delete_edge(e)
        keep, gone = min(u, v), max(u, v)
        edges = tuple(
            (eid, keep if a == gone else a, keep if b == gone else b)
            for eid, a, b in self.edges
            if eid != e
        )
        return Multigraph(self.vertices - {gone}, edges)

    def add_edge(self, u: int, v: int) -> tuple[Multigraph, int]:
        eid = 1 + max((x[0] for x in self.edges), default=-1)
        return Multigraph(self.vertices, self.edges + ((eid, u, v),)), eid

    def without_isolated(self) -> Multigraph:
        used = {u for _, u, _ in self.edges} | {v for _, _, v in self.edges}
        return Multigraph(frozenset(used), self.edges)

    def degree(self, x: int) -> int:
        return sum((u == x) + (v == x) for _, u, v in self.edges)


@dataclass(frozen=True)
class TwoTerminalGraph:
    graph: Multigraph
    source: int
    sink: int

    def __post_init__(self) -> None:
        if self.source == self.sink:
            raise GraphError("source and sink must differ")
        if self.source not in self.graph.vertices or self.sink not in self.graph.vertices:
            raise GraphError("terminals must be vertices of the graph")

    def with_terminal_edge(self) -> tuple[Multigraph, int]:
        """Return ``G + st`` and the id of the added edge."""
        return self.graph.add_edge(self.source, self.sink)

    def reversed(self) -> TwoTerminalGraph:
        return TwoTerminalGraph(self.graph, self.sink, self.source)


def _find(parent: dict[int, int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def num_components(vertices: Iterable[int], pairs: Iterable[tuple[int, int]]) -> int:
    parent = {x: x for x in vertices}
    count = len(parent)
    for u, v in pairs:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def is_connected(g: Multigraph) -> bool:
    return num_components(g.vertices, g.pairs()) <= 1


def bridges(g: Multigraph) -> set[int]:
    """Edge ids whose removal increases the number of components."""
    base = num_components(g.vertices, g.pairs())
    out = set()
    for eid, u, v in g.edges:
        if u == v:
            continue
        rest = [(a, b) for i, a, b in g.edges if i != eid]
        if num_components(g.vertices, rest) > base:
            out.add(eid)
    return out


def is_bridge(g: Multigraph, e: int) -> bool:
    g.endpoints(e)
    return e in bridges(g)


def series_class(g: Multigraph, e: int) -> set[int]:
    """Edges f with every cycle through ``e`` passing through f.

    Computed as ``{e}`` plus the non-bridges of g that become bridges of g - e.
    Bridges get the singleton class.
    """
    g.endpoints(e)
    b = bridges(g)
    if e in b:
        return {e}
    return {e} | (bridges(g.delete_edge(e)) - b)


def parallel_class(g: Multigraph, e: int) -> set[int]:
    u, v = g.endpoints(e)
    if u == v:
        return {e}
    ends = {u, v}
    return {eid for eid, a, b in g.edges if a != b and {a, b} == ends}


def _classes_nontrivial(g: Multigraph, skip: int | None = None) -> bool:
    for eid in g.edge_ids():
        if eid == skip:
            continue
        if len(parallel_class(g, eid)) < 2 and len(series_class(g, eid)) < 2:
            return False
    return True


def _classes_small(g: Multigraph) -> bool:
    return all(
        2 <= len(series_class(g, e)) <= 3 or 2 <= len(parallel_class(g, e)) <= 3
        for e in g.edge_ids()
    )


def is_extendable(g: TwoTerminalGraph) -> bool:
    """Whether g can occur as a TTSP piece of a graph with no trivial classes.

    g is placed in parallel with an arbitrary completion, stood in for by one
    terminal edge st.  Every edge of g must lie in a series or parallel class of
    size at least two in ``g + st``; st itself is exempt.
    """
    h, st = g.with_terminal_edge()
    return _classes_nontrivial(h, skip=st)


def is_extendable_literal(g: TwoTerminalGraph) -> bool:
    """The word-for-word reading: g or g + st has every class of size 2 or 3.

    Kept for reporting only; it does not reproduce the reference tables.
    """
    return _classes_small(g.graph) or _classes_small(g.with_terminal_edge()[0])


# --- isomorphism -----------------------------------------------------------


def _edge_counts(g: Multigraph) -> Counter:
    c: Counter = Counter()
    for _, u, v in g.edges:
        c[(u, v) if u <= v else (v, u)] += 1
    return c


def _signature(g: Multigraph, counts: Counter) -> dict[int, tuple[int, int]]:
    loops = Counter()
    for (u, v), k in counts.items():
        if u == v:
            loops[u] += k
    return {x: (g.degree(x), loops[x]) for x in g.vertices}


def _backtrack_iso(
    g: Multigraph, h: Multigraph, fixed: dict[int, int]
) -> bool:
    if g.num_vertices != h.num_vertices or g.num_edges != h.num_edges:
        return False
    cg, ch = _edge_counts(g), _edge_counts(h)
    sg, sh = _signature(g, cg), _signature(h, ch)
    if sorted(sg.values()) != sorted(sh.values()):
        return False
    def mult(c: Counter, a: int, b: int) -> int:
        return c.get((a, b) if a <= b else (b, a), 0)

    for a, b in fixed.items():
        if sg[a] != sh[b]:
            return False
    order = list(fixed) + sorted(
        (x for x in g.vertices if x not in fixed), key=lambda x: -sg[x][0]
    )
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(x: int, y: int) -> bool:
        if sg[x] != sh[y]:
            return False
        for w, z in mapping.items():
            if mult(ch, y, z) != mult(cg, x, w):
                return False
        return True

    def go(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        targets = [fixed[x]] if x in fixed else [y for y in h.vertices if y not in used]
        for y in targets:
            if y in used or not consistent(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if go(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return go(0)


def graph_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    return _backtrack_iso(g, h, {})


def two_terminal_isomorphic(g: TwoTerminalGraph, h: TwoTerminalGraph) -> bool:
    """Isomorphism mapping the terminal pair onto the terminal pair, either way round."""
    return _backtrack_iso(g.graph, h.graph, {g.source: h.source, g.sink: h.sink}) or \
        _backtrack_iso(g.graph, h.graph, {g.source: h.sink, g.sink: h.source})


# --- canonical form --------------------------------------------------------


def _refine(colors: dict[int, int], counts: Counter) -> dict[int, int]:
    nbrs: dict[int, list[tuple[int, int]]] = {x: [] for x in colors}
    for (u, v), k in counts.items():
        nbrs[u].append((v, k))
        if u != v:
            nbrs[v].append((u, k))
    while True:
        sig = {
            x: (colors[x], tuple(sorted((colors[w], k) for w, k in nbrs[x])))
            for x in colors
        }
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {x: ranks[sig[x]] for x in colors}
        if len(set(new.values())) == len(set(colors.values())):
            return new
        colors = new


def canonical_form(g: Multigraph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """A complete isomorphism invariant: ``(n, sorted relabelled edge list)``.

    Colour refinement, then individualisation of each vertex of the first
    non-singleton cell, keeping the lexicographically least certificate.
    """
    counts = _edge_counts(g)
    loops = Counter()
    for (u, v), k in counts.items():
        if u == v:
            loops[u] += k
    init_keys = {x: (g.degree(x), loops[x]) for x in g.vertices}
    ranks = {s: i for i, s in enumerate(sorted(set(init_keys.values())))}
    colors = _refine({x: ranks[init_keys[x]] for x in g.vertices}, counts)
    best: list = []

    def certificate(col: dict[int, int]) -> tuple[tuple[int, int], ...]:
        out = []
        for (u, v), k in counts.items():
            a, b = sorted((col[u], col[v]))
            out.extend([(a, b)] * k)
        return tuple(sorted(out))

    def search(col: dict[int, int]) -> None:
        cells: dict[int, list[int]] = {}
        for x, c in col.items():
            cells.setdefault(c, []).append(x)
        split = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if split is None:
            cert = certificate(col)
            if not best or cert < best[0]:
                best[:] = [cert]
            return
        for x in cells[split]:
            # individualise x: place it ahead of the rest of its cell
            trial = {y: 2 * c + (c == split and y != x) for y, c in col.items()}
            search(_refine(trial, counts))

    search(colors)
    return g.num_vertices, best[0] if best else ()


# --- families and file format ----------------------------------------------


def thomassen_graph(n: int, singles: tuple[int, int] = (0, 1)) -> Multigraph:
    """n vertices on a cycle: two single edges and n - 2 doubled edges.

    ``singles`` picks which cycle positions (edge i joins i and i+1 mod n) carry
    the single edges; the default puts them next to each other.
    """
    if n < 4:
        raise GraphError("thomassen_graph needs n >= 4")
    a, b = singles
    if a == b or not (0 <= a < n and 0 <= b < n):
        raise GraphError("single-edge positions must be two distinct cycle positions")
    pairs = []
    for i in range(n):
        u, v = i, (i + 1) % n
        pairs.append((u, v))
        if i not in singles:
            pairs.append((u, v))
    return Multigraph.from_edges(pairs, n)


def _lines(text: str) -> Iterator[list[int]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            yield [int(tok) for tok in line.split()]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {raw!r}") from None


def parse_graph(text: str, two_terminal: bool = False) -> Multigraph | TwoTerminalGraph:
    """Read ``V E`` then (two-terminal only) ``s t``, then E lines ``u v``."""
    rows = list(_lines(text))
    if not rows or len(rows[0]) != 2:
        raise GraphError("first line must be 'V E'")
    n, m = rows[0]
    body = rows[1:]
    terminals = None
    if two_terminal:
        if not body or len(body[0]) != 2:
            raise GraphError("second line must be 's t'")
        terminals, body = body[0], body[1:]
    if len(body) != m:
        raise GraphError(f"expected {m} edge lines, found {len(body)}")
    for row in body:
        if len(row) != 2 or not all(0 <= x < n for x in row):
            raise GraphError(f"bad edge line {row}")
    g = Multigraph.from_edges([tuple(r) for r in body], n)
    if terminals is None:
        return g
    return TwoTerminalGraph(g, terminals[0], terminals[1])


def format_graph(g: Multigraph | TwoTerminalGraph) -> str:
    terminals = None
    if isinstance(g, TwoTerminalGraph):
        terminals, g = (g.source, g.sink), g.graph
    index = {x: i for i, x in enumerate(sorted(g.vertices))}
    lines = [f"{g.num_vertices} {g.num_edges}"]
    if terminals:
        lines.append(f"{index[terminals[0]]} {index[terminals[1]]}")
    lines += [f"{index[u]} {index[v]}" for _, u, v in g.edges]
    return "\n".join(lines) + "\n"
