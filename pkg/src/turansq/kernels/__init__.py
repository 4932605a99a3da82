"""Hot-loop kernels with a compiled backend and a pure-Python fallback.

The compiled module is used when it imports; set ``TURANSQ_BACKEND`` to
``python`` or ``cython`` to force a choice.  Both backends expose
``canon_label`` and ``find_embedding`` with identical results.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pure

try:
    from . import _fast
except ImportError:  # extension not built
    _fast = None

_MAX_FAST_HOST = 512
_MAX_FAST_K = 64


def get_backend(name: str) -> ModuleType:
    if name == "python":
        return _pure
    if name == "cython":
        if _fast is None:
            raise ImportError("compiled kernels are not built; run `pip install -e .`")
        return _fast
    raise ValueError(f"unknown backend {name!r}")


def _select() -> ModuleType:
    choice = os.environ.get("TURANSQ_BACKEND", "auto").lower()
    if choice == "auto":
        return _fast if _fast is not None else _pure
    return get_backend(choice)


_impl = _select()
BACKEND = "cython" if _impl is _fast else "python"


def canon_label(n, rows, colors=None):
    if _impl is _fast and n <= 64:
        return _fast.canon_label(n, rows, colors)
    return _pure.canon_label(n, rows, colors)


def find_embedding(host_rows, k, order, back, pdeg, anchor=-1):
    if _impl is _fast and len(host_rows) <= _MAX_FAST_HOST and k <= _MAX_FAST_K:
        return _fast.find_embedding(host_rows, k, order, back, pdeg, anchor)
    return _pure.find_embedding(host_rows, k, order, back, pdeg, anchor)


__all__ = ["BACKEND", "canon_label", "find_embedding", "get_backend"]
