from __future__ import annotations

import pytest

from mwsp.algebra import S, P, LEAF, parse_expr, realize
from mwsp.graph import Multigraph, TwoTerminalGraph, graph_isomorphic, series_class, parallel_class
from mwsp.oracle import (
    MAX_ORIENTATION_EDGES,
    OracleSizeError,
    add_parallel_pair,
    add_series_pair,
    brute_acyclic,
    brute_almost_totally_cyclic,
    brute_param_vec,
    brute_spanning_trees,
    brute_totally_cyclic,
    brute_two_forests,
    brute_very_acyclic,
    orientation_counts,
    verify_parallel_extension,
    verify_series_extension,
)
from mwsp.search import known_trees

K2 = Multigraph.from_edges([(0, 1)])
DIGON = Multigraph.from_edges([(0, 1), (0, 1)])
TRIANGLE = Multigraph.from_edges([(0, 1), (1, 2), (2, 0)])
PATH2 = Multigraph.from_edges([(0, 1), (1, 2)])


def test_spanning_trees():
    assert brute_spanning_trees(K2) == 1
    assert brute_spanning_trees(DIGON) == 2
    assert brute_spanning_trees(TRIANGLE) == 3
    assert brute_spanning_trees(realize(known_trees()[17]).graph) == 16


def test_two_forests():
    assert brute_two_forests(TwoTerminalGraph(K2, 0, 1)) == 1
    assert brute_two_forests(TwoTerminalGraph(DIGON, 0, 1)) == 1
    assert brute_two_forests(realize(known_trees()[7])) == 4


def test_orientation_counts_small():
    assert brute_acyclic(DIGON) == 2 and brute_totally_cyclic(DIGON) == 2
    assert brute_acyclic(TRIANGLE) == 6 and brute_totally_cyclic(TRIANGLE) == 2
    assert brute_acyclic(K2) == 2 and brute_totally_cyclic(K2) == 0
    # a loop kills acyclicity; both of its directions count as cyclic
    loop = Multigraph.from_edges([(0, 0)])
    assert brute_acyclic(loop) == 0 and brute_totally_cyclic(loop) == 2


def test_terminal_counts():
    k2 = TwoTerminalGraph(K2, 0, 1)
    assert brute_very_acyclic(k2) == 0
    assert brute_almost_totally_cyclic(k2) == 2
    path = realize(S(LEAF, LEAF))
    # the 2-path: very acyclic iff the two edges point towards or away from the middle
    assert brute_very_acyclic(path) == 2
    assert brute_almost_totally_cyclic(path) == 2
    c = orientation_counts(DIGON)
    assert c.very_acyclic == 0 and c.almost_totally_cyclic == 0  # no terminals given


def test_param_vec_examples():
    assert brute_param_vec(realize(P(LEAF, LEAF))) == (2, 1, 2, 0, 4, 2)
    assert brute_param_vec(realize(parse_expr("S(K,P(K,K))"))) == (2, 3, 4, 2, 6, 0)


def test_size_guard():
    big = Multigraph.from_edges([(0, 1)] * (MAX_ORIENTATION_EDGES + 1))
    with pytest.raises(OracleSizeError):
        brute_acyclic(big)
    with pytest.raises(OracleSizeError):
        brute_spanning_trees(Multigraph.from_edges([(0, 1)] * 21))


def test_pair_constructions():
    assert graph_isomorphic(add_parallel_pair(DIGON, 0), Multigraph.from_edges([(0, 1)] * 4))
    four_path = Multigraph.from_edges([(0, 1), (1, 2), (2, 3), (3, 4)])
    assert graph_isomorphic(add_series_pair(PATH2, 0), four_path)
    assert graph_isomorphic(add_series_pair(PATH2, 1), four_path)


def test_parallel_extension_digon():
    for e in (0, 1):
        report = verify_parallel_extension(DIGON, e)
        assert report.ok, report
        assert report.after == (4, 2, 14)


def test_series_extension_triangle():
    for e in (0, 1, 2):
        report = verify_series_extension(TRIANGLE, e)
        assert report.ok and report.after == (5, 30, 2)


def test_series_extension_path():
    # both edges of the 2-path are bridges, so their series class is trivial
    with pytest.raises(ValueError):
        verify_series_extension(PATH2, 0)
    for e in (0, 1):
        report = verify_series_extension(PATH2, e, require_class=False)
        assert report.ok and report.after == (1, 16, 0)


def test_extension_preconditions():
    with pytest.raises(ValueError):
        verify_parallel_extension(TRIANGLE, 0)
    with pytest.raises(ValueError):
        verify_series_extension(DIGON.add_edge(0, 1)[0], 0)


def test_digon_inside_graph_9():
    g = realize(known_trees()[9]).graph
    checked = 0
    for e in g.edge_ids():
        if len(parallel_class(g, e)) >= 2:
            assert verify_parallel_extension(g, e).ok
            checked += 1
        if len(series_class(g, e)) >= 2:
            assert verify_series_extension(g, e).ok
    assert checked >= 2
