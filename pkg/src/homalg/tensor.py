"""Exact rational tensors: an integer numerator array over one positive denominator.

Numerators live in int64 arrays while they are small and are widened to
object arrays of Python ints as soon as a bound says int64 could overflow,
so no value is ever rounded.  Every constructor normalizes eagerly: the
denominator is positive and shares no factor with all numerators, and the
zero tensor has denominator 1.  That makes equality a plain array compare.
"""
from __future__ import annotations

import math
from collections.abc import Iterator, Mapping
from fractions import Fraction
from numbers import Rational

import numpy as np

from homalg import kernels

_SAFE = 2**62


def _as_int_array(a) -> np.ndarray:
    arr = np.asarray(a)
    if arr.dtype == object:
        return arr
    if not np.issubdtype(arr.dtype, np.integer):
        raise TypeError(f"numerators must be integers, got dtype {arr.dtype}")
    return arr.astype(np.int64, copy=False)


def compact(a: np.ndarray) -> np.ndarray:
    """Return ``a`` as int64 when every entry fits comfortably."""
    if a.dtype == object and kernels.maxabs(a) < _SAFE:
        return a.astype(np.int64)
    return a


def scale_int(a: np.ndarray, k: int) -> np.ndarray:
    if k == 1:
        return a
    if a.dtype != object and kernels.maxabs(a) * abs(k) < _SAFE:
        return a * k
    return a.astype(object) * k


def add_int(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype != object and b.dtype != object and kernels.maxabs(a) + kernels.maxabs(b) < _SAFE:
        return a + b
    return a.astype(object) + b.astype(object)


def gcd_all(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return math.gcd(*(int(v) for v in a.flat))
    return int(np.gcd.reduce(a.ravel()))


def normalize(num: np.ndarray, den: int) -> tuple[np.ndarray, int]:
    if den <= 0:
        raise ValueError("denominator must be positive")
    g = gcd_all(num)
    if g == 0:
        return np.zeros(num.shape, dtype=np.int64), 1
    g = math.gcd(g, den)
    if g > 1:
        num = num // g
        den //= g
    return compact(num), den


def to_fraction(value) -> Fraction:
    """Exact conversion; floats are refused so nothing passes through binary floating point."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    head, sep, tail = s.partition("/")
    if not _is_int_literal(head) or (sep and not tail.isdigit()):
        raise ValueError(f"not a rational literal: {text!r}")
    if sep and int(tail) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(head), int(tail) if sep else 1)


def _is_int_literal(s: str) -> bool:
    return s[1:].isdigit() if s[:1] in "+-" else s.isdigit()


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class QTensor:
    """Immutable dense tensor of exact rationals."""

    __slots__ = ("num", "den")

    def __init__(self, num, den: int = 1):
        num, den = normalize(_as_int_array(num), int(den))
        num = np.array(num, copy=True)
        num.flags.writeable = False
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("QTensor is immutable")

    # constructors

    @classmethod
    def zeros(cls, shape) -> QTensor:
        return cls(np.zeros(tuple(shape), dtype=np.int64))

    @classmethod
    def from_values(cls, values) -> QTensor:
        """Build from a nested sequence (or array) of exact scalars."""
        arr = np.asarray(values, dtype=object)
        flat = [to_fraction(v) for v in arr.flat]
        den = math.lcm(*(q.denominator for q in flat)) if flat else 1
        num = np.array([q.numerator * (den // q.denominator) for q in flat], dtype=object)
        return cls(num.reshape(arr.shape), den)

    @classmethod
    def from_entries(cls, shape, entries: Mapping[tuple[int, ...], object]) -> QTensor:
        shape = tuple(shape)
        values = np.empty(shape, dtype=object)
        values.fill(Fraction(0))
        for idx, v in entries.items():
            values[tuple(idx)] = to_fraction(v)
        return cls.from_values(values)

    # access

    @property
    def shape(self) -> tuple[int, ...]:
        return self.num.shape

    @property
    def ndim(self) -> int:
        return self.num.ndim

    def __getitem__(self, idx) -> Fraction:
        idx = idx if isinstance(idx, tuple) else (idx,)
        if len(idx) != self.ndim:
            raise IndexError("QTensor indexing needs a full index tuple")
        return Fraction(int(self.num[idx]), self.den)

    def to_fractions(self) -> np.ndarray:
        out = np.empty(self.shape, dtype=object)
        for idx in np.ndindex(*self.shape):
            out[idx] = Fraction(int(self.num[idx]), self.den)
        return out

    def tolist(self):
        return self.to_fractions().tolist()

    def nonzero(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        """Nonzero entries in lexicographic index order."""
        for idx in zip(*np.nonzero(self.num)):
            idx = tuple(int(i) for i in idx)
            yield idx, Fraction(int(self.num[idx]), self.den)

    def is_zero(self) -> bool:
        return not np.any(self.num != 0)

    # comparison

    def __eq__(self, other) -> bool:
        if not isinstance(other, QTensor):
            return NotImplemented
        return self.shape == other.shape and self.den == other.den and bool(np.all(self.num == other.num))

    def __hash__(self) -> int:
        return hash((self.shape, self.den, tuple(int(v) for v in self.num.flat)))

    def __repr__(self) -> str:
        return f"QTensor(shape={self.shape}, den={self.den}, nnz={int(np.count_nonzero(self.num))})"

    # arithmetic

    def __neg__(self) -> QTensor:
        return QTensor(-self.num, self.den)

    def __add__(self, other: QTensor) -> QTensor:
        if not isinstance(other, QTensor):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        den = math.lcm(self.den, other.den)
        num = add_int(scale_int(self.num, den // self.den), scale_int(other.num, den // other.den))
        return QTensor(num, den)

    def __sub__(self, other: QTensor) -> QTensor:
        if not isinstance(other, QTensor):
            return NotImplemented
        return self + (-other)

    def scale(self, q) -> QTensor:
        q = to_fraction(q)
        return QTensor(scale_int(self.num, q.numerator), self.den * q.denominator)

    def __mul__(self, q) -> QTensor:
        if isinstance(q, QTensor):
            return NotImplemented
        return self.scale(q)

    __rmul__ = __mul__

    def transpose(self, *axes: int) -> QTensor:
        return QTensor(np.ascontiguousarray(self.num.transpose(axes)), self.den)

    def matmul(self, other: QTensor) -> QTensor:
        """Matrix product of two 2-d tensors."""
        if self.ndim != 2 or other.ndim != 2:
            raise ValueError("matmul needs 2-d tensors")
        return QTensor(kernels.matmul(self.num, other.num), self.den * other.den)

    def apply_last(self, matrix: QTensor) -> QTensor:
        """Contract the last axis with ``matrix``: out[..., k] = sum_l matrix[k, l] * self[..., l]."""
        n = self.shape[-1]
        flat = self.num.reshape(-1, n)
        out = kernels.matmul(flat, np.ascontiguousarray(matrix.num.T))
        return QTensor(out.reshape(self.shape[:-1] + (matrix.shape[0],)), self.den * matrix.den)
