"""Published catalogue of the 19 survivors and their combination tables.

Used for numbering survivors and for diffing a fresh run against the
published values.  Cell syntax: ``N`` not extendable, ``x`` reducible to
graph x, ``=x`` the same graph as x, ``-`` the unused diagonal.
"""

from __future__ import annotations

# index -> (operation, left index, right index)
KNOWN_BUILDS: dict[int, tuple[str, int, int]] = {
    1: ("P", 0, 0),
    2: ("S", 0, 0),
    3: ("P", 0, 2),
    4: ("S", 0, 1),
    5: ("P", 0, 1),
    6: ("S", 0, 2),
    7: ("S", 1, 1),
    8: ("P", 2, 2),
    9: ("P", 1, 2),
    10: ("S", 1, 2),
    11: ("S", 1, 5),
    12: ("P", 2, 6),
    13: ("P", 2, 8),
    14: ("S", 1, 7),
    15: ("S", 5, 8),
    16: ("P", 6, 7),
    17: ("P", 2, 12),
    18: ("S", 1, 11),
}

# (index, edges, sp-dual index, tau, tau2, alpha, alpha2, alpha2star, alphastar)
TABLE1: list[tuple[int, ...]] = [
    (0, 1, 0, 1, 1, 2, 0, 2, 0),
    (1, 2, 2, 2, 1, 2, 0, 4, 2),
    (2, 2, 1, 1, 2, 4, 2, 2, 0),
    (3, 3, 4, 3, 2, 6, 0, 4, 2),
    (4, 3, 3, 2, 3, 4, 2, 6, 0),
    (5, 3, 6, 3, 1, 2, 0, 8, 6),
    (6, 3, 5, 1, 3, 8, 6, 2, 0),
    (7, 4, 8, 4, 4, 4, 2, 14, 4),
    (8, 4, 7, 4, 4, 14, 4, 4, 2),
    (9, 4, 10, 5, 2, 6, 0, 8, 6),
    (10, 4, 9, 2, 5, 8, 6, 6, 0),
    (11, 5, 12, 6, 5, 4, 2, 30, 12),
    (12, 5, 11, 5, 6, 30, 12, 4, 2),
    (13, 6, 14, 12, 8, 46, 8, 8, 6),
    (14, 6, 13, 8, 12, 8, 6, 46, 8),
    (15, 7, 16, 12, 16, 28, 18, 30, 12),
    (16, 7, 15, 16, 12, 30, 12, 28, 18),
    (17, 7, 18, 16, 12, 102, 24, 8, 6),
    (18, 7, 17, 12, 16, 8, 6, 102, 24),
]

# row i, column j: series connection above the diagonal, parallel below
_TABLE2_TEXT = """\
-  =4 =6  N  =10 4  2  2  2  4  6  2  2  2  2  2  2  2  2
=5 -  =10 N  2  =11 6 =14 4  7  2 =18 2  7  2  2  7  7  2
=3 =9 -   N  6  2  2  2  2  2  2  2  2  2  2  2  2  2  2
=9 5  1   -  N  N  N  N  N  N  N  N  N  N  N  N  N  N  N
N  N  N   N  -  2  2  2  2  2  2  2  2  2  2  2  2  2  2
1  1  5   1  N  -  2 =18 =15 3 2  0  2  0  2  2  0  0  2
3  1  =12 1  N  1  -  2  2  2  2  2  2  2  2  2  2  2  2
1  1  3   1  N  1 =16 -  2  4  2  2  2  2  2  2  2  2  2
1  1  =13 1  N  1 =17 1  -  4  2  2  2  2  2  2  2  2  2
5  1  1   1  N  1  1  1  1  -  2  7  2  0  2  2  0  0  2
3  1  8   1  N  1  4  3  3  1  -  2  2  2  2  2  2  2  2
1  1  1   1  N  1  1  1  1  1  1  -  2  4  2  2  2  2  2
1  1  =17 1  N  1  0  1  1  1  8  1  -  2  2  2  2  2  2
1  1  1   1  N  1  1  1  1  1  1  1  1  -  2  2  2  4  2
1  1  8   1  N  1  0  1  1  1  0  1  3  1  -  2  2  2  2
1  1  8   1  N  1  0  1  1  1  0  1  1  1  1  -  2  2  2
1  1  1   1  N  1  1  1  1  1  1  1  1  1  1  1  -  0  2
1  1  1   1  N  1  1  1  1  1  1  1  1  1  1  1  1  -  2
1  1  8   1  N  1  0  1  1  1  0  1  1  1  3  0  1  1  -
"""

TABLE2: list[list[str]] = [line.split() for line in _TABLE2_TEXT.splitlines()]

# G op G for each survivor G
TABLE3: dict[str, list[str]] = {
    "series": "=2 =7 2 N 2 3 2 2 2 7 2 2 2 4 2 2 0 0 2".split(),
    "parallel": "=1 1 =8 1 N 1 4 1 1 1 7 1 1 1 3 0 1 1 0".split(),
}


def build_label(build: tuple[str, int, int] | None) -> str:
    if build is None:
        return "---"
    op, a, b = build
    return f"{a} ⊕_{op} {b}"


def diff_tables(table1: list[tuple], table2: list[list], table3: dict[str, list]) -> list[str]:
    """Human-readable differences between computed tables and the published ones.

    ``table1`` rows are (index, edges, dual, build label, *params) as produced
    by the search.
    Cells in ``table2``/``table3`` are compared through ``str()``.
    """
    out = []
    if len(table1) != len(TABLE1):
        out.append(f"table1: {len(table1)} rows, expected {len(TABLE1)}")
    for got, want in zip(table1, TABLE1):
        row = (got[0], got[1], got[2], *got[4:])
        if tuple(row) != want:
            out.append(f"table1 row {want[0]}: got {row}, expected {want}")
        label = build_label(KNOWN_BUILDS.get(want[0]))
        if got[3] != label:
            out.append(f"table1 row {want[0]} build: got {got[3]}, expected {label}")
    for i, want_row in enumerate(TABLE2):
        got_row = table2[i] if i < len(table2) else []
        for j, want in enumerate(want_row):
            got = got_row[j] if j < len(got_row) else None
            got = "-" if got is None else str(got)
            if got != want:
                out.append(f"table2[{i}][{j}]: got {got}, expected {want}")
    for op, want_row in TABLE3.items():
        got_row = table3.get(op, [])
        for j, want in enumerate(want_row):
            got = str(got_row[j]) if j < len(got_row) and got_row[j] is not None else "?"
            if got != want:
                out.append(f"table3 {op}[{j}]: got {got}, expected {want}")
    return out
