"""Pure-Python fraction-free elimination kernel.

Twin of the compiled module ``sullivan._elim_cy``; both expose the same
``ff_row_echelon`` contract and must stay behaviourally identical (the
test suite runs the shared cases against whichever backend is active,
and the benchmark drives both).
"""

from math import gcd

BACKEND = "python"


def ff_row_echelon(rows):
    """Fraction-free row echelon form of an integer matrix.

    Bareiss single-step elimination with first-nonzero-in-column-order
    pivoting, so the output is deterministic.  Every intermediate entry
    is a minor of the input, hence all divisions are exact.

    Returns ``(echelon, pivots)`` where ``echelon`` holds the nonzero
    rows, each reduced by its content with a positive pivot entry, and
    ``pivots`` lists their pivot column indices.
    """
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if m[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        row_r = m[r]
        piv = row_r[c]
        for i in range(r + 1, nrows):
            row_i = m[i]
            mic = row_i[c]
            if mic:
                for j in range(c, ncols):
                    row_i[j] = (row_i[j] * piv - mic * row_r[j]) // prev
            elif prev != 1:
                for j in range(c, ncols):
                    row_i[j] = (row_i[j] * piv) // prev
            elif piv != 1:
                for j in range(c, ncols):
                    row_i[j] = row_i[j] * piv
        pivots.append(c)
        prev = piv
        r += 1
    echelon = []
    for r, c in enumerate(pivots):
        row = m[r]
        g = 0
        for x in row:
            if x:
                g = gcd(g, x)
        if row[c] < 0:
            g = -g
        echelon.append([x // g for x in row])
    return echelon, pivots
