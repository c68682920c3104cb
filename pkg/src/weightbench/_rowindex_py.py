"""Pure-Python row lookup, used when the compiled extension is unavailable."""

import numpy as np


class RowIndex:
    def __init__(self, table):
        arr = np.ascontiguousarray(table, dtype=np.int32)
        if arr.ndim != 2:
            raise ValueError("table must be two-dimensional")
        self.table = arr
        self.n, self.degree = arr.shape
        self._pos = {arr[i].tobytes(): i for i in range(self.n)}

    def find(self, rows):
        arr = np.ascontiguousarray(rows, dtype=np.int32)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.shape[1] != self.degree:
            raise ValueError("row width does not match table degree")
        get = self._pos.get
        return np.fromiter((get(row.tobytes(), -1) for row in arr),
                           dtype=np.int64, count=arr.shape[0])
