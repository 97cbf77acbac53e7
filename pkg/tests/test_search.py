from __future__ import annotations

import pytest

from mwsp.algebra import LEAF, PARALLEL, SERIES, canonical, combine, eval_tree
from mwsp.reducibility import replaces
from mwsp.reference import KNOWN_BUILDS, TABLE1, TABLE2, TABLE3, diff_tables
from mwsp.search import (
    Classification,
    Kind,
    Survivor,
    classify_pair,
    emit_tables,
    enumerate_survivors,
    known_trees,
    run_search,
    sp_dual_index,
    theorem_closure_check,
    verify_fixed_point,
)


@pytest.fixture(scope="module")
def tables(survivors):
    return emit_tables(survivors)


def test_nineteen_survivors(survivors):
    assert [s.index for s in survivors] == list(range(19))
    assert max(s.edges for s in survivors) == 7


def test_table1_rows(survivors):
    for s, row in zip(survivors, TABLE1):
        assert (s.index, s.edges, sp_dual_index(survivors, s), *s.params) == row


def test_builds_reconstruct(survivors, by_index):
    for i, (op, a, b) in KNOWN_BUILDS.items():
        tree = canonical(combine(op, by_index[a].tree, by_index[b].tree))
        assert tree == by_index[i].tree
        assert by_index[i].build == (op, a, b)


def test_table_examples(tables):
    assert tables.table1[5] == (5, 3, 6, "0 ⊕_P 1", 3, 1, 2, 0, 8, 6)
    assert str(tables.table2[12][2]) == "=17"
    assert tables.table3["parallel"][15] == Classification(Kind.REDUCIBLE, 0)


def test_tables_match_reference(tables):
    assert diff_tables(tables.table1, tables.table2, tables.table3) == []


def test_diff_tables_reports_changes(tables):
    table2 = [row[:] for row in tables.table2]
    table2[0][3] = Classification(Kind.REDUCIBLE, 1)
    diffs = diff_tables(tables.table1, table2, tables.table3)
    assert diffs == ["table2[0][3]: got 1, expected N"]


def test_classify_pair_examples(survivors):
    assert classify_pair(survivors, 0, 3, SERIES).kind is Kind.NON_EXTENDABLE
    assert classify_pair(survivors, 1, 6, SERIES) == Classification(Kind.REDUCIBLE, 6)
    assert classify_pair(survivors, 2, 2, PARALLEL) == Classification(Kind.IN_TABLE, 8)


def test_classify_pair_errors(survivors):
    with pytest.raises(ValueError):
        classify_pair(survivors, 0, 42, SERIES)
    with pytest.raises(ValueError):
        classify_pair(survivors, 0, 1, "Q")
    with pytest.raises(LookupError):
        classify_pair(survivors[:1], 0, 0, SERIES)


def test_classification_parse():
    for cell in ("N", "=14", "6", "0"):
        assert str(Classification.parse(cell)) == cell


def _combination(by_index, i, j, op):
    return eval_tree(combine(op, by_index[i].tree, by_index[j].tree))


def test_reference_reduction_targets_verify(by_index):
    """Every plain-integer reference cell names a valid replacement."""
    checked = 0
    for i, row in enumerate(TABLE2):
        for j, cell in enumerate(row):
            if cell.isdigit():
                op = SERIES if i < j else PARALLEL
                a, b = min(i, j), max(i, j)
                x = int(cell)
                assert replaces(_combination(by_index, a, b, op), by_index[x].params), (i, j)
                checked += 1
    for op_name, op in (("series", SERIES), ("parallel", PARALLEL)):
        for i, cell in enumerate(TABLE3[op_name]):
            if cell.isdigit():
                assert replaces(_combination(by_index, i, i, op), by_index[int(cell)].params)
                checked += 1
    assert checked > 200


def test_fixed_point(survivors):
    report = verify_fixed_point(survivors)
    assert report.closed
    assert report.checked == 2 * 19 * 20 // 2
    assert report.in_table_and_reducible == []
    assert all(rel == "two_terminal" for *_, rel in report.in_table_relation)


def test_fixed_point_without_18(survivors):
    report = verify_fixed_point([s for s in survivors if s.index != 18])
    assert not report.closed
    assert (SERIES, 1, 11) in report.violations


def test_k2_alone_not_closed():
    k2 = Survivor(0, LEAF, eval_tree(LEAF), 1, None)
    report = verify_fixed_point([k2])
    assert set(report.violations) == {(SERIES, 0, 0), (PARALLEL, 0, 0)}


def test_closure(survivors):
    rows = theorem_closure_check(survivors)
    assert len(rows) == 19 and all(r.holds and r.agrees for r in rows)
    assert rows[0].tutte == (2, 2, 2)


def test_search_log(survivors):
    found, log = run_search()
    assert found == survivors
    assert log.closed
    new = [step for step in log.steps if step[3] is None]
    assert len(new) == 18
    _, short = run_search(4)
    assert not short.closed


def test_max_edges_cap():
    small = enumerate_survivors(4)
    assert {s.index for s in small} == set(range(11))
    with pytest.raises(ValueError):
        enumerate_survivors(0)
    with pytest.raises(ValueError):
        enumerate_survivors(numbering="alphabetical")


def test_discovery_numbering(survivors):
    disc = enumerate_survivors(numbering="discovery")
    assert {s.tree for s in disc} == {s.tree for s in survivors}
    assert [s.index for s in disc] == list(range(19))


def test_known_trees_are_survivors(survivors):
    assert list(known_trees()) == [s.tree for s in survivors]
