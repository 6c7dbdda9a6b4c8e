"""Previously reported cover numbers of complete hypergraphs for n <= 7.

``VALUES[(n, k, r, p)]`` is an int for a single value, or a ``(lower, upper)``
pair with ``upper=None`` when no upper value was given. Rows are (n, k), columns (r, p).
"""

COLUMNS = [(3, 3), (4, 3), (4, 4), (5, 3), (5, 4), (5, 5), (6, 3), (6, 4), (6, 5), (6, 6),
           (7, 3), (7, 4), (7, 5), (7, 6), (7, 7)]

_GRID = """
4,3 | 2 1 1
4,4 | 1 1 1
5,3 | 3 2 2 1
5,4 | 2 1 3 1 1 1
5,5 | 1 1 1 1 1 1
6,3 | 3 3 3 2 2 2 1 1 1 1
6,4 | 2 2 (4,5) 1 3 3 1 1 1 1
6,5 | 1 1 2 1 1 3 1 1 1 1
6,6 | 1 1 1 1 1 1 1 1 1 1
7,3 | 4 3 (6,-) 2 2 2 2 2 2 2 1 1 1 1 1
7,4 | (3,-) 2 (5,-) 2 3 3 1 3 3 3 1 1 1 1 1
7,5 | 2 1 (3,-) 2 2 (6,-) 1 1 3 3 1 1 1 1 1
7,6 | 2 1 2 1 1 2 1 1 1 (4,-) 1 1 1 1 1
7,7 | 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
"""


def _parse():
    out = {}
    for line in _GRID.strip().splitlines():
        head, body = line.split("|")
        n, k = map(int, head.split(","))
        for (r, p), tok in zip(COLUMNS, body.split()):
            if tok.startswith("("):
                lo, hi = tok.strip("()").split(",")
                out[(n, k, r, p)] = (int(lo), None if hi == "-" else int(hi))
            else:
                out[(n, k, r, p)] = int(tok)
    return out


VALUES = _parse()
SINGLE = {key: v for key, v in VALUES.items() if isinstance(v, int)}
INTERVALS = {key: v for key, v in VALUES.items() if not isinstance(v, int)}

# reported beyond the n <= 7 grid
LARGER = {(8, 3, 3, 3): 4, (9, 3, 3, 3): 4}
