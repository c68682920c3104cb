"""Backend selection for the hot row-lookup kernel.

The compiled ``_rowindex`` extension is preferred. Setting the environment
variable ``WEIGHTBENCH_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from . import _rowindex_py

_compiled = None
if os.environ.get("WEIGHTBENCH_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _rowindex as _compiled
    except ImportError:
        _compiled = None

if _compiled is not None:
    RowIndex = _compiled.RowIndex
    BACKEND = "compiled"
else:
    RowIndex = _rowindex_py.RowIndex
    BACKEND = "python"

PythonRowIndex = _rowindex_py.RowIndex
CompiledRowIndex = _compiled.RowIndex if _compiled is not None else None


def available_backends():
    out = {"python": PythonRowIndex}
    if CompiledRowIndex is not None:
        out["compiled"] = CompiledRowIndex
    return out
