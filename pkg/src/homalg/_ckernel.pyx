# cython: language_level=3, boundscheck=False, wraparound=False
"""Overflow-checked int64 matrix product for the exact tensor engine.

Zero entries of the left operand are skipped, which pays off because
structure tensors and basis-variable forms are mostly zero.  Any signed
overflow raises ``OverflowError`` so the caller can redo the product with
arbitrary-precision integers.
"""
import numpy as np

from libc.stdint cimport int64_t

cdef extern from *:
    bint mul_overflow "__builtin_mul_overflow"(int64_t a, int64_t b, int64_t *res) nogil
    bint add_overflow "__builtin_add_overflow"(int64_t a, int64_t b, int64_t *res) nogil


def matmul(const int64_t[:, ::1] a, const int64_t[:, ::1] b):
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t inner = a.shape[1]
    cdef Py_ssize_t n = b.shape[1]
    if b.shape[0] != inner:
        raise ValueError(f"shape mismatch: ({m}, {inner}) @ ({b.shape[0]}, {n})")
    out = np.zeros((m, n), dtype=np.int64)
    cdef int64_t[:, ::1] o = out
    cdef Py_ssize_t i, k, j
    cdef int64_t aik, bkj, p, s
    cdef bint overflow = False
    with nogil:
        for i in range(m):
            for k in range(inner):
                aik = a[i, k]
                if aik == 0:
                    continue
                for j in range(n):
                    bkj = b[k, j]
                    if bkj == 0:
                        continue
                    if mul_overflow(aik, bkj, &p) or add_overflow(o[i, j], p, &s):
                        overflow = True
                        break
                    o[i, j] = s
                if overflow:
                    break
            if overflow:
                break
    if overflow:
        raise OverflowError("int64 overflow in exact matmul")
    return out


def first_nonzero_row(const int64_t[:, ::1] a):
    """Index of the first row holding a nonzero entry, or -1."""
    cdef Py_ssize_t i, j
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t found = -1
    with nogil:
        for i in range(m):
            for j in range(n):
                if a[i, j] != 0:
                    found = i
                    break
            if found >= 0:
                break
    return found
