# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled phase-one simplex kernel on integer tableaus.

Behavioral twin of ``csl._simplex_py``: identical fraction-free pivoting
and Bland's rule, so both kernels return identical results on identical
input. Entries are arbitrary-precision Python ints (they routinely outgrow
machine words), so the win here is typed loop bookkeeping, not C
arithmetic.
"""


def hull_witness(rows, Py_ssize_t ncols):
    """Decide ``A x = b, x >= 0`` for the integer system ``rows = [A | b]``.

    Same contract as the pure-Python kernel: rows of ``ncols + 1`` integers
    with nonnegative right-hand sides; returns ``(den, values)`` for a
    feasible system, ``None`` otherwise.
    """
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t n = ncols
    cdef Py_ssize_t i, j, col, row
    cdef list tab = [list(r) for r in rows]
    cdef list obj = []
    cdef list basis = []
    cdef list prow, trow
    cdef object den, piv, a, f, lhs, rhs, num, q, rem, s

    for j in range(n + 1):
        s = 0
        for i in range(m):
            s = s + (<list>tab[i])[j]
        obj.append(s)
    tab.append(obj)
    den = 1
    for i in range(m):
        basis.append(n + i)

    while True:
        obj = <list>tab[m]
        col = -1
        for j in range(n):
            if obj[j] > 0:
                col = j
                break
        if col < 0:
            break
        row = -1
        for i in range(m):
            a = (<list>tab[i])[col]
            if a <= 0:
                continue
            if row < 0:
                row = i
                continue
            lhs = (<list>tab[i])[n] * (<list>tab[row])[col]
            rhs = (<list>tab[row])[n] * a
            if lhs < rhs or (lhs == rhs and basis[i] < basis[row]):
                row = i
        if row < 0:
            raise ArithmeticError("unbounded phase-one column")
        prow = <list>tab[row]
        piv = prow[col]
        for i in range(m + 1):
            if i == row:
                continue
            trow = <list>tab[i]
            f = trow[col]
            for j in range(n + 1):
                num = piv * trow[j] - f * prow[j]
                q, rem = divmod(num, den)
                if rem:
                    raise ArithmeticError("inexact fraction-free pivot")
                trow[j] = q
        den = piv
        basis[row] = col

    if (<list>tab[m])[n] != 0:
        return None
    values = [0] * n
    for i in range(m):
        j = basis[i]
        if j < n:
            values[j] = (<list>tab[i])[n]
    return den, values
