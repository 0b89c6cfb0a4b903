"""Multilinear forms over basis tuples, evaluated all at once.

A :class:`Form` is the value of a multilinear expression with one free
variable per leading axis: ``form.tensor[i, j, ..., k]`` is coordinate k
of the expression when the variables are set to basis vectors e_i, e_j, ...
Products of forms in disjoint variables are tensor contractions with the
structure constants, so a whole identity is evaluated on every basis tuple
with a handful of exact integer matrix products.

Adding forms requires identical variable sets; a term that forgot or
repeated a variable is a bug in the identity and raises.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from homalg import kernels
from homalg.tensor import QTensor, to_fraction


class Form:
    __slots__ = ("vars", "tensor")

    def __init__(self, vars: tuple[str, ...], tensor: QTensor):
        if len(vars) != tensor.ndim - 1:
            raise ValueError(f"{len(vars)} variables for a tensor of rank {tensor.ndim}")
        if len(set(vars)) != len(vars):
            raise ValueError(f"repeated variable in {vars}")
        self.vars = tuple(vars)
        self.tensor = tensor

    @classmethod
    def var(cls, name: str, dim: int, indices=None) -> Form:
        """The variable itself, optionally restricted to a subset of basis indices."""
        eye = np.eye(dim, dtype=np.int64)
        if indices is not None:
            eye = eye[np.asarray(list(indices), dtype=np.intp)]
        return cls((name,), QTensor(eye))

    @property
    def dim(self) -> int:
        return self.tensor.shape[-1]

    def aligned(self, order) -> QTensor:
        order = tuple(order)
        if set(order) != set(self.vars) or len(order) != len(self.vars):
            raise ValueError(f"cannot align variables {self.vars} to {order}")
        if order == self.vars:
            return self.tensor
        perm = [self.vars.index(v) for v in order] + [len(order)]
        return self.tensor.transpose(*perm)

    def __add__(self, other: Form) -> Form:
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, Form):
            return NotImplemented
        if set(other.vars) != set(self.vars):
            raise ValueError(f"adding forms in different variables: {self.vars} vs {other.vars}")
        return Form(self.vars, self.tensor + other.aligned(self.vars))

    __radd__ = __add__

    def __neg__(self) -> Form:
        return Form(self.vars, -self.tensor)

    def __sub__(self, other: Form) -> Form:
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar) -> Form:
        if isinstance(scalar, Form):
            return NotImplemented
        return Form(self.vars, self.tensor.scale(to_fraction(scalar)))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Form(vars={self.vars}, dim={self.dim})"


def _rows(f: Form) -> np.ndarray:
    return np.ascontiguousarray(f.tensor.num.reshape(-1, f.dim))


def _disjoint(*forms: Form) -> tuple[str, ...]:
    names: tuple[str, ...] = ()
    for f in forms:
        names += f.vars
    if len(set(names)) != len(names):
        raise ValueError(f"product of forms sharing variables: {[f.vars for f in forms]}")
    return names


def apply_map(matrix: QTensor, f: Form) -> Form:
    return Form(f.vars, f.tensor.apply_last(matrix))


def bilinear(c: QTensor, f: Form, g: Form) -> Form:
    """out[a, b, k] = sum_ij f[a, i] g[b, j] c[i, j, k]."""
    names = _disjoint(f, g)
    n = c.shape[0]
    a, b = _rows(f), _rows(g)
    m, p = a.shape[0], b.shape[0]
    h = kernels.matmul(a, c.num.reshape(n, n * n))
    h = np.ascontiguousarray(h.reshape(m, n, n).transpose(1, 0, 2).reshape(n, m * n))
    r = kernels.matmul(b, h).reshape(p, m, n).transpose(1, 0, 2)
    shape = f.tensor.shape[:-1] + g.tensor.shape[:-1] + (n,)
    return Form(names, QTensor(r.reshape(shape), f.tensor.den * g.tensor.den * c.den))


def trilinear(t: QTensor, f: Form, g: Form, h: Form) -> Form:
    """out[a, b, c, l] = sum_ijk f[a, i] g[b, j] h[c, k] t[i, j, k, l]."""
    names = _disjoint(f, g, h)
    n = t.shape[0]
    a, b, c = _rows(f), _rows(g), _rows(h)
    m, p, q = a.shape[0], b.shape[0], c.shape[0]
    # contract the first slot: s1[a, j, k, l]
    s1 = kernels.matmul(a, t.num.reshape(n, n**3)).reshape(m, n, n, n)
    # second slot: s2[b, a, k, l]
    s1 = np.ascontiguousarray(s1.transpose(1, 0, 2, 3).reshape(n, m * n * n))
    s2 = kernels.matmul(b, s1).reshape(p, m, n, n)
    # third slot: s3[c, b, a, l]
    s2 = np.ascontiguousarray(s2.transpose(2, 0, 1, 3).reshape(n, p * m * n))
    s3 = kernels.matmul(c, s2).reshape(q, p, m, n).transpose(2, 1, 0, 3)
    shape = f.tensor.shape[:-1] + g.tensor.shape[:-1] + h.tensor.shape[:-1] + (n,)
    den = f.tensor.den * g.tensor.den * h.tensor.den * t.den
    return Form(names, QTensor(s3.reshape(shape), den))


def first_nonzero(t: QTensor) -> tuple[tuple[int, ...], tuple[Fraction, ...]] | None:
    """Lexicographically first index tuple (all axes but the last) with a nonzero value."""
    n = t.shape[-1]
    flat = t.num.reshape(-1, n)
    row = kernels.first_nonzero_row(flat)
    if row < 0:
        return None
    idx = tuple(int(i) for i in np.unravel_index(row, t.shape[:-1]))
    return idx, tuple(Fraction(int(v), t.den) for v in flat[row])
