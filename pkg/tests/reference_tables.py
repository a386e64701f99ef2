"""Hand-entered reference values, keyed by shape labels.

Each table maps a row label to {column label: value}. Column orders are kept
separately. Labels follow the package grammar (star on the last copy of the
marked part, "|" between components, "-" for an empty component).
"""


def _table(cols, rows):
    return {r: dict(zip(cols, vals.split())) for r, vals in rows.items()}


S3_COLS = ["3*", "2,1*", "2*,1", "1,1,1*"]
S3_ORDERS = dict(zip(S3_COLS, [2, 1, 2, 1]))
S3 = _table(S3_COLS, {
    "3*": "1 1 1 1",
    "2,1*": "-1/2 1 -1/2 1",
    "2*,1": "-1/2 -1 1/2 1",
    "1,1,1*": "1 -1 -1 1",
})

S4_COLS = ["4*", "3,1*", "3*,1", "2,2*", "2,1,1*", "2*,1,1", "1,1,1,1*"]
S4_ORDERS = dict(zip(S4_COLS, [6, 2, 6, 3, 3, 3, 1]))
S4 = _table(S4_COLS, {
    "4*": "1 1 1 1 1 1 1",
    "3,1*": "-1/3 1 -1/3 -1/3 1 -1/3 1",
    "3*,1": "-2/3 -1 1/3 -2/3 0 4/3 2",
    "2,2*": "0 -1 -1 2 0 0 2",
    "2,1,1*": "2/3 -1 1/3 -2/3 0 -4/3 2",
    "2*,1,1": "1/3 1 -1/3 -1/3 -1 1/3 1",
    "1,1,1,1*": "-1 1 1 1 -1 -1 1",
})

H2_COLS = ["1,1*|-", "2*|-", "1*|1", "1|1*", "-|1,1*", "-|2*"]
H2_ORDERS = dict(zip(H2_COLS, [1, 2, 1, 1, 1, 2]))
H2 = _table(H2_COLS, {
    "2*|-": "1 1 1 1 1 1",
    "1,1*|-": "1 -1 1 1 1 -1",
    "1*|1": "1 0 -1 1 -1 0",
    "1|1*": "1 0 1 -1 -1 0",
    "-|2*": "1 1 -1 -1 1 -1",
    "-|1,1*": "1 -1 -1 -1 1 1",
})
# signed permutations of {1,2,3,4} listed under each column
H2_ELEMENTS = {
    "1,1*|-": ["(1)(2)(3)(4)"],
    "2*|-": ["(13)(24)", "(14)(23)"],
    "1*|1": ["(12)(3)(4)"],
    "1|1*": ["(1)(2)(34)"],
    "-|1,1*": ["(12)(34)"],
    "-|2*": ["(1324)", "(1423)"],
}

H3_COLS = [
    "1,1,1*|-", "2*,1|-", "2,1*|-", "3*|-", "1,1*|1", "1,1|1*",
    "2*|1", "2|1*", "1*|1,1", "1|1,1*", "1*|2", "1|2*",
    "-|1,1,1*", "-|2*,1", "-|2,1*", "-|3*",
]
H3_ORDERS = dict(zip(H3_COLS, [1, 4, 2, 8, 2, 1, 4, 2, 1, 2, 2, 4, 1, 4, 2, 8]))
H3_PARTIAL_ROWS = _table(H3_COLS, {
    "2,1*|-": "1 -1/2 1 -1/2 1 1 -1/2 1 1 1 1 -1/2 1 -1/2 1 -1/2",
    "1|2*": "2 1 0 0 0 -2 1 0 -2 0 0 -1 2 -1 0 0",
})
# column (-, (3*)); every index not listed is zero there
H3_COLUMN_3STAR = {
    "1,1,1*|-": "1",
    "2*,1|-": "-1/2",
    "2,1*|-": "-1/2",
    "3*|-": "1",
    "-|1,1,1*": "-1",
    "-|2*,1": "1/2",
    "-|2,1*": "1/2",
    "-|3*": "-1",
}
