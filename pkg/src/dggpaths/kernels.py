"""Backend selection for the path-counting kernel.

The compiled extension is used when it was built; otherwise the pure
Python implementation with the identical contract is used.
"""
from __future__ import annotations

from . import _pathcount_py

try:
    from . import _pathcount as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _pathcount_py}
if _compiled is not None:
    BACKENDS["cython"] = _compiled

BACKEND = "cython" if _compiled is not None else "python"


def prefix_histogram(p: int, q: int, backend: str | None = None) -> list[int]:
    """Path counts of DGG_{p,q} by bottom-row prefix length (index 0..p)."""
    mod = BACKENDS[backend or BACKEND]
    return list(mod.prefix_histogram(p, q))
