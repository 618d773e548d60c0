# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fraction-free elimination kernel.

Behavioural twin of ``sullivan._elim_py``.  Entries are arbitrary
Python integers (exactness is non-negotiable), so the win over the pure
version comes from compiled loop control and list indexing, not from
machine arithmetic.
"""

from math import gcd

BACKEND = "cython"


def ff_row_echelon(rows):
    """Fraction-free row echelon form of an integer matrix.

    Bareiss single-step elimination, first-nonzero pivoting.  Returns
    ``(echelon, pivots)``: the nonzero rows, content-reduced with
    positive pivots, and their pivot column indices.
    """
    cdef Py_ssize_t nrows, ncols, r, c, i, j, pr
    cdef list m, row_r, row_i, pivots, echelon, row
    m = [list(row_obj) for row_obj in rows]
    nrows = len(m)
    ncols = len(<list>m[0]) if nrows else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if (<list>m[i])[c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        row_r = <list>m[r]
        piv = row_r[c]
        for i in range(r + 1, nrows):
            row_i = <list>m[i]
            mic = row_i[c]
            if mic != 0:
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
    for i in range(len(pivots)):
        row = <list>m[i]
        c = pivots[i]
        g = 0
        for j in range(ncols):
            x = row[j]
            if x != 0:
                g = gcd(g, x)
        if row[c] < 0:
            g = -g
        echelon.append([x // g for x in row])
    return echelon, pivots
