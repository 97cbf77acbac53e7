from __future__ import annotations

import pytest

from mwsp.algebra import parse_expr, realize
from mwsp.graph import Multigraph, thomassen_graph
from mwsp.oracle import brute_triple
from mwsp.tutte import (
    TutteEvaluator,
    count_acyclic,
    count_spanning_trees,
    count_totally_cyclic,
    tutte_eval,
    tutte_triple,
)

DIGON = Multigraph.from_edges([(0, 1), (0, 1)])
TRIANGLE = Multigraph.from_edges([(0, 1), (1, 2), (2, 0)])


def test_digon():
    assert tutte_eval(DIGON, 1, 1) == 2
    assert tutte_eval(DIGON, 2, 0) == 2
    assert tutte_eval(DIGON, 0, 2) == 2


def test_triangle():
    assert count_spanning_trees(TRIANGLE) == 3
    assert count_acyclic(TRIANGLE) == 6
    assert count_totally_cyclic(TRIANGLE) == 2


def test_polynomial_values():
    # T(triangle) = x^2 + x + y
    for x, y in [(0, 0), (3, 5), (-1, 2)]:
        assert tutte_eval(TRIANGLE, x, y) == x * x + x + y
    # T(k-fold edge) = x + y + ... + y^(k-1)
    bundle = Multigraph.from_edges([(0, 1)] * 5)
    assert tutte_eval(bundle, 3, 2) == 3 + 2 + 4 + 8 + 16
    loops = Multigraph.from_edges([(0, 0), (0, 0), (0, 1)])
    assert tutte_eval(loops, 5, 3) == 5 * 9


def test_edgeless():
    g = Multigraph(frozenset({0, 1, 2}), ())
    assert tutte_eval(g, 7, 9) == 1


def test_evaluator_options_agree():
    g = realize(parse_expr("P(S(P(K,K),K,P(K,K,K)),S(K,P(K,S(K,K))))")).graph
    plain = TutteEvaluator(reduce_multi=False, memo=False)
    fast = TutteEvaluator()
    for x, y in [(1, 1), (2, 0), (0, 2), (2, 3)]:
        assert plain(g, x, y) == fast(g, x, y)
    fast(g, 1, 1)
    before = fast.calls
    fast(g, 1, 1)
    assert fast.calls == before + 1  # memo hit at the top level
    fast.clear()


@pytest.mark.parametrize("n", range(4, 9))
def test_thomassen_against_brute_force(n):
    g = thomassen_graph(n)
    assert tutte_triple(g) == brute_triple(g)


@pytest.mark.parametrize("n", range(4, 13))
def test_thomassen_closed_form(n):
    tau, alpha, alphastar = tutte_triple(thomassen_graph(n))
    assert tau == 2 ** (n - 1) + (n - 2) * 2 ** (n - 3)
    assert alpha == 2**n - 2
    assert alphastar == 2 * 3 ** (n - 2)
    assert (alpha < tau) == (n >= 6)


def test_large_values_exact():
    tau, _, _ = tutte_triple(thomassen_graph(60))
    assert tau == 2**59 + 58 * 2**57
