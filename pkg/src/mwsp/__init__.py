"""Mechanical checks of the Merino-Welsh conjecture on series-parallel graphs."""

from .algebra import (
    LEAF,
    P,
    ParamVec,
    S,
    Tree,
    canonical,
    dual_tree,
    eval_tree,
    k2_params,
    par,
    parse_expr,
    realize,
    ser,
    spdual,
)
from .graph import Multigraph, TwoTerminalGraph, thomassen_graph
from .reducibility import mw_status, replaces
from .search import emit_tables, enumerate_survivors
from .tutte import tutte_eval

__version__ = "0.1.0"

__all__ = [
    "LEAF", "P", "S", "ParamVec", "Tree", "canonical", "dual_tree", "eval_tree", "k2_params",
    "par", "parse_expr", "realize", "ser", "spdual", "Multigraph", "TwoTerminalGraph",
    "thomassen_graph", "mw_status", "replaces", "emit_tables", "enumerate_survivors", "tutte_eval",
]
