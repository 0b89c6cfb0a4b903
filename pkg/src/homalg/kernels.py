"""Exact integer kernels behind the tensor engine.

Two interchangeable backends compute the same exact products:

``compiled``
    The Cython extension ``homalg._ckernel``: int64 loops that skip zero
    entries and detect overflow exactly.
``numpy``
    Plain numpy.  int64 is used when an a-priori magnitude bound proves the
    product cannot overflow; otherwise the product is redone on Python ints.

The backend is picked at import (compiled if it was built) and can be
forced with ``HOMALG_KERNEL=numpy`` or switched with :func:`use_backend`.
Both backends fall back to object-dtype arithmetic, so results never
depend on the backend, only the speed does.
"""
from __future__ import annotations

import os
from contextlib import contextmanager

import numpy as np

try:
    from homalg import _ckernel
except ImportError:  # extension not built
    _ckernel = None

INT64_MAX = 2**63 - 1

_BACKENDS = ("compiled", "numpy") if _ckernel is not None else ("numpy",)


def _initial_backend() -> str:
    wanted = os.environ.get("HOMALG_KERNEL", "").strip().lower()
    if wanted in _BACKENDS:
        return wanted
    return _BACKENDS[0]


_backend = _initial_backend()


def available_backends() -> tuple[str, ...]:
    return _BACKENDS


def backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in _BACKENDS:
        raise ValueError(f"unknown or unavailable kernel backend {name!r}; have {_BACKENDS}")
    _backend = name


@contextmanager
def use_backend(name: str):
    previous = _backend
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(np.max(np.abs(a)))


def _object_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.matmul(a.astype(object), b.astype(object))


def _numpy_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype != object and b.dtype != object:
        if maxabs(a) * maxabs(b) * max(a.shape[1], 1) <= INT64_MAX:
            return np.matmul(a, b)
    return _object_matmul(a, b)


def _compiled_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype != object and b.dtype != object:
        try:
            return _ckernel.matmul(
                np.ascontiguousarray(a, dtype=np.int64), np.ascontiguousarray(b, dtype=np.int64)
            )
        except OverflowError:
            pass
    return _object_matmul(a, b)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of two 2-d integer arrays (int64 or object)."""
    if _backend == "compiled":
        return _compiled_matmul(a, b)
    return _numpy_matmul(a, b)


def first_nonzero_row(a: np.ndarray) -> int:
    """Index of the first row of a 2-d integer array with a nonzero entry, or -1."""
    if _backend == "compiled" and a.dtype != object:
        return _ckernel.first_nonzero_row(np.ascontiguousarray(a, dtype=np.int64))
    rows = np.flatnonzero((a != 0).any(axis=1))
    return int(rows[0]) if rows.size else -1
