# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row lookup: position of permutation rows in a sorted element table."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline int _cmp_row(const int[:, ::1] a, Py_ssize_t i,
                         const int[:, ::1] b, Py_ssize_t j,
                         Py_ssize_t d) noexcept nogil:
    cdef Py_ssize_t t
    for t in range(d):
        if a[i, t] < b[j, t]:
            return -1
        if a[i, t] > b[j, t]:
            return 1
    return 0


cdef class RowIndex:
    """Binary search over the rows of a lexicographically sorted int32 table."""

    cdef readonly object table
    cdef const int[:, ::1] _tab
    cdef readonly Py_ssize_t n, degree

    def __init__(self, table):
        arr = np.ascontiguousarray(table, dtype=np.int32)
        if arr.ndim != 2:
            raise ValueError("table must be two-dimensional")
        self.table = arr
        self._tab = arr
        self.n = arr.shape[0]
        self.degree = arr.shape[1]

    def find(self, rows):
        """Indices of ``rows`` in the table; -1 where a row is absent."""
        arr = np.ascontiguousarray(rows, dtype=np.int32)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.shape[1] != self.degree:
            raise ValueError("row width does not match table degree")
        cdef const int[:, ::1] q = arr
        cdef Py_ssize_t m = arr.shape[0]
        out = np.empty(m, dtype=np.int64)
        cdef cnp.int64_t[::1] res = out
        cdef Py_ssize_t r, lo, hi, mid
        cdef int c
        with nogil:
            for r in range(m):
                lo = 0
                hi = self.n - 1
                res[r] = -1
                while lo <= hi:
                    mid = (lo + hi) >> 1
                    c = _cmp_row(self._tab, mid, q, r, self.degree)
                    if c == 0:
                        res[r] = mid
                        break
                    elif c < 0:
                        lo = mid + 1
                    else:
                        hi = mid - 1
        return out
