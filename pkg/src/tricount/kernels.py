"""Backend selection for the hot sparse kernels.

Two interchangeable implementations exist: ``_ckernels`` (Cython) and
``_pykernels`` (pure Python).  The compiled one is preferred and the pure
one is the fallback; set ``TRICOUNT_BACKEND=python`` or ``=c`` to force a
choice at import time, or call :func:`set_backend` /:func:`use_backend`
at runtime (e.g. to compare the two, see ``benchmarks/backend_compare.py``).

Switching backends is not thread-safe; concurrent *use* of either backend
on immutable inputs is.
"""

import os
from contextlib import contextmanager

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

_MODULES = {"python": _pykernels}
if _ckernels is not None:
    _MODULES["c"] = _ckernels

_env = os.environ.get("TRICOUNT_BACKEND", "").strip().lower()
if _env and _env not in ("c", "python"):
    raise ValueError(f"TRICOUNT_BACKEND must be 'c' or 'python', got {_env!r}")
if _env and _env not in _MODULES:
    raise ImportError("TRICOUNT_BACKEND=c but the compiled kernels are not built")

_active_name = _env or ("c" if "c" in _MODULES else "python")
_active = _MODULES[_active_name]


def available_backends():
    """Names of the importable kernel backends, preferred first."""
    return tuple(name for name in ("c", "python") if name in _MODULES)


def get_backend() -> str:
    return _active_name


def set_backend(name: str) -> None:
    global _active, _active_name
    if name not in _MODULES:
        raise ValueError(f"unknown or unavailable backend {name!r}; "
                         f"available: {available_backends()}")
    _active_name = name
    _active = _MODULES[name]


@contextmanager
def use_backend(name: str):
    """Temporarily switch the active backend."""
    previous = _active_name
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def spgemm(a_indptr, a_indices, a_values, b_indptr, b_indices, b_values,
           n_rows, n_cols):
    return _active.spgemm(a_indptr, a_indices, a_values,
                          b_indptr, b_indices, b_values, n_rows, n_cols)


def hadamard(a_indptr, a_indices, a_values, b_indptr, b_indices, b_values,
             n_rows):
    return _active.hadamard(a_indptr, a_indices, a_values,
                            b_indptr, b_indices, b_values, n_rows)


def row_intersection_sum(x_indptr, x_indices, y_indptr, y_indices,
                         left, right):
    return _active.row_intersection_sum(x_indptr, x_indices,
                                        y_indptr, y_indices, left, right)


def bounded_intersection_sum(indptr, indices, left, right):
    return _active.bounded_intersection_sum(indptr, indices, left, right)
