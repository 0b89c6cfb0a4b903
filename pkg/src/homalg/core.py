"""Elements, twist maps, binary/ternary Hom-algebras and their basic operators.

Every value here is immutable.  Element-level operators run on Python
integers (coordinates are brought to a common denominator first), and are
deliberately independent of the tensor engine in :mod:`homalg.forms`: the
identity checkers scan basis tuples through that engine, while these
functions serve as the naive evaluator the scans are probed against.
"""
from __future__ import annotations

import enum
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from types import MappingProxyType

import numpy as np

from homalg.tensor import QTensor, format_rational, to_fraction


class DimensionError(ValueError):
    """Operands live in spaces of different dimension."""


# ---------------------------------------------------------------------------
# elements and linear maps


@dataclass(frozen=True)
class Element:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(to_fraction(c) for c in self.coords))

    @classmethod
    def zero(cls, dim: int) -> Element:
        return cls((Fraction(0),) * dim)

    @classmethod
    def basis(cls, dim: int, i: int) -> Element:
        return cls(tuple(Fraction(int(k == i)) for k in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __bool__(self) -> bool:
        return any(self.coords)

    def _check(self, other: Element) -> None:
        if len(other.coords) != len(self.coords):
            raise DimensionError(f"dimension mismatch: {len(self.coords)} vs {len(other.coords)}")

    def __add__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return Element(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __radd__(self, other):
        if other == 0:  # lets sum() start from 0
            return self
        return NotImplemented

    def __sub__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return Element(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Element:
        return Element(tuple(-a for a in self.coords))

    def __mul__(self, scalar) -> Element:
        if isinstance(scalar, Element):
            return NotImplemented
        q = to_fraction(scalar)
        return Element(tuple(q * a for a in self.coords))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(c) for c in self.coords) + ")"


def _ints(x: Element) -> tuple[list[int], int]:
    """Coordinates as integers over one common denominator."""
    den = math.lcm(*(c.denominator for c in x.coords)) if x.coords else 1
    return [c.numerator * (den // c.denominator) for c in x.coords], den


def _element(nums: Sequence[int], den: int) -> Element:
    return Element(tuple(Fraction(v, den) for v in nums))


@dataclass(frozen=True)
class LinearMap:
    """A square matrix; column j holds the image of basis vector j."""

    matrix: QTensor

    def __post_init__(self):
        m = self.matrix
        if not isinstance(m, QTensor):
            object.__setattr__(self, "matrix", QTensor.from_values(m))
            m = self.matrix
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError(f"linear map needs a square matrix, got shape {m.shape}")

    @classmethod
    def identity(cls, dim: int) -> LinearMap:
        return cls(QTensor(np.eye(dim, dtype=np.int64)))

    @classmethod
    def diag(cls, values: Iterable) -> LinearMap:
        values = [to_fraction(v) for v in values]
        n = len(values)
        return cls(QTensor.from_entries((n, n), {(i, i): v for i, v in enumerate(values)}))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> LinearMap:
        return cls(QTensor.from_values(rows))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def entry(self, i: int, j: int) -> Fraction:
        return self.matrix[i, j]

    def rows(self) -> list[list[Fraction]]:
        return self.matrix.tolist()

    def is_identity(self) -> bool:
        return self == LinearMap.identity(self.dim)

    @cached_property
    def _sparse(self) -> list[tuple[int, int, int]]:
        return [(int(i), int(j), int(self.matrix.num[i, j])) for i, j in zip(*np.nonzero(self.matrix.num))]

    def __call__(self, x: Element) -> Element:
        return apply_map(self, x)


def apply_map(m: LinearMap, x: Element) -> Element:
    if len(x) != m.dim:
        raise DimensionError(f"map of dimension {m.dim} applied to element of dimension {len(x)}")
    xs, dx = _ints(x)
    out = [0] * m.dim
    for i, j, c in m._sparse:
        if xs[j]:
            out[i] += c * xs[j]
    return _element(out, dx * m.matrix.den)


def compose(m1: LinearMap, m2: LinearMap) -> LinearMap:
    """The map x -> m1(m2(x))."""
    if m1.dim != m2.dim:
        raise DimensionError(f"cannot compose maps of dimension {m1.dim} and {m2.dim}")
    return LinearMap(m1.matrix.matmul(m2.matrix))


def power(m: LinearMap, n: int) -> LinearMap:
    if n < 0:
        raise ValueError("power needs a nonnegative exponent")
    result = LinearMap.identity(m.dim)
    for _ in range(n):
        result = compose(m, result)
    return result


# ---------------------------------------------------------------------------
# algebras


def _default_basis(dim: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(dim))


def _check_basis(basis, dim: int) -> tuple[str, ...]:
    basis = _default_basis(dim) if basis is None else tuple(str(b) for b in basis)
    if len(basis) != dim:
        raise DimensionError(f"{len(basis)} basis labels for dimension {dim}")
    if len(set(basis)) != dim:
        raise ValueError(f"basis labels must be unique: {basis}")
    return basis


def _freeze(meta) -> Mapping | None:
    return None if meta is None else MappingProxyType(dict(meta))


def _as_tensor(t) -> QTensor:
    return t if isinstance(t, QTensor) else QTensor.from_values(t)


@dataclass(frozen=True)
class HomAlgebra:
    """Binary product c[i][j][k] (e_i * e_j = sum_k c[i][j][k] e_k) with a twist map."""

    product: QTensor
    twist: LinearMap | None = None
    basis: tuple[str, ...] | None = None
    provenance: Mapping | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "product", _as_tensor(self.product))
        shape = self.product.shape
        if len(shape) != 3 or len(set(shape)) != 1:
            raise DimensionError(f"binary structure tensor must be n x n x n, got {shape}")
        n = shape[0]
        if self.twist is None:
            object.__setattr__(self, "twist", LinearMap.identity(n))
        elif self.twist.dim != n:
            raise DimensionError(f"twist of dimension {self.twist.dim} on algebra of dimension {n}")
        object.__setattr__(self, "basis", _check_basis(self.basis, n))
        object.__setattr__(self, "provenance", _freeze(self.provenance))

    @classmethod
    def from_table(cls, basis: Sequence[str], table: Mapping, twist: LinearMap | None = None) -> HomAlgebra:
        """``table[(a, b)] = {c: coeff, ...}`` in basis labels; omitted products are zero."""
        return cls(_tensor_from_table(basis, table, 2), twist, tuple(basis))

    @property
    def dim(self) -> int:
        return self.product.shape[0]

    @cached_property
    def _sparse(self) -> list[tuple[int, int, int, int]]:
        num = self.product.num
        return [(int(i), int(j), int(k), int(num[i, j, k])) for i, j, k in zip(*np.nonzero(num))]

    def with_twist(self, twist: LinearMap) -> HomAlgebra:
        return HomAlgebra(self.product, twist, self.basis)

    def element(self, coeffs: Mapping[str, object]) -> Element:
        return _labelled(self.basis, coeffs)


@dataclass(frozen=True)
class TernaryHomAlgebra:
    """Ternary product t[i][j][k][l] with a pair of twist maps."""

    product: QTensor
    twists: tuple[LinearMap, LinearMap] | None = None
    basis: tuple[str, ...] | None = None
    provenance: Mapping | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "product", _as_tensor(self.product))
        shape = self.product.shape
        if len(shape) != 4 or len(set(shape)) != 1:
            raise DimensionError(f"ternary structure tensor must be n x n x n x n, got {shape}")
        n = shape[0]
        if self.twists is None:
            object.__setattr__(self, "twists", (LinearMap.identity(n), LinearMap.identity(n)))
        else:
            twists = tuple(self.twists)
            if len(twists) != 2 or any(t.dim != n for t in twists):
                raise DimensionError("ternary algebra needs two twist maps of matching dimension")
            object.__setattr__(self, "twists", twists)
        object.__setattr__(self, "basis", _check_basis(self.basis, n))
        object.__setattr__(self, "provenance", _freeze(self.provenance))

    @classmethod
    def from_table(cls, basis, table, twists=None) -> TernaryHomAlgebra:
        return cls(_tensor_from_table(basis, table, 3), twists, tuple(basis))

    @property
    def dim(self) -> int:
        return self.product.shape[0]

    @cached_property
    def _sparse(self) -> list[tuple[int, int, int, int, int]]:
        num = self.product.num
        return [
            (int(i), int(j), int(k), int(l), int(num[i, j, k, l])) for i, j, k, l in zip(*np.nonzero(num))
        ]

    def with_twists(self, twists) -> TernaryHomAlgebra:
        return TernaryHomAlgebra(self.product, tuple(twists), self.basis)


@dataclass(frozen=True)
class HomBolAlgebra:
    """One carrier with a binary bracket, a ternary product and a single twist."""

    bracket: QTensor
    triple: QTensor
    twist: LinearMap | None = None
    basis: tuple[str, ...] | None = None
    provenance: Mapping | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "bracket", _as_tensor(self.bracket))
        object.__setattr__(self, "triple", _as_tensor(self.triple))
        n = self.bracket.shape[0]
        if self.bracket.shape != (n,) * 3 or self.triple.shape != (n,) * 4:
            raise DimensionError(
                f"bracket/triple shapes {self.bracket.shape}, {self.triple.shape} do not share a dimension"
            )
        if self.twist is None:
            object.__setattr__(self, "twist", LinearMap.identity(n))
        elif self.twist.dim != n:
            raise DimensionError(f"twist of dimension {self.twist.dim} on algebra of dimension {n}")
        object.__setattr__(self, "basis", _check_basis(self.basis, n))
        object.__setattr__(self, "provenance", _freeze(self.provenance))

    @property
    def dim(self) -> int:
        return self.bracket.shape[0]

    def binary_part(self) -> HomAlgebra:
        return HomAlgebra(self.bracket, self.twist, self.basis)

    def ternary_part(self, twist_power: int = 2) -> TernaryHomAlgebra:
        """The triple as a standalone ternary algebra twisted by (twist^p, twist^p)."""
        t = power(self.twist, twist_power)
        return TernaryHomAlgebra(self.triple, (t, t), self.basis)


def _tensor_from_table(basis, table: Mapping, arity: int) -> QTensor:
    index = {b: i for i, b in enumerate(basis)}
    n = len(basis)
    entries = {}
    for args, out in table.items():
        if len(args) != arity:
            raise ValueError(f"product key {args!r} should name {arity} basis elements")
        key = tuple(index[a] for a in args)
        for label, coeff in out.items():
            entries[key + (index[label],)] = coeff
    return QTensor.from_entries((n,) * (arity + 1), entries)


def _labelled(basis, coeffs: Mapping[str, object]) -> Element:
    index = {b: i for i, b in enumerate(basis)}
    coords = [Fraction(0)] * len(basis)
    for label, c in coeffs.items():
        coords[index[label]] = to_fraction(c)
    return Element(tuple(coords))


# ---------------------------------------------------------------------------
# element operators


def _need(dim: int, *xs: Element) -> None:
    for x in xs:
        if len(x) != dim:
            raise DimensionError(f"element of dimension {len(x)} used in algebra of dimension {dim}")


def multiply(A: HomAlgebra, x: Element, y: Element) -> Element:
    _need(A.dim, x, y)
    xs, dx = _ints(x)
    ys, dy = _ints(y)
    out = [0] * A.dim
    for i, j, k, c in A._sparse:
        if xs[i] and ys[j]:
            out[k] += xs[i] * ys[j] * c
    return _element(out, dx * dy * A.product.den)


def ternary_apply(T: TernaryHomAlgebra, x: Element, y: Element, z: Element) -> Element:
    _need(T.dim, x, y, z)
    xs, dx = _ints(x)
    ys, dy = _ints(y)
    zs, dz = _ints(z)
    out = [0] * T.dim
    for i, j, k, l, c in T._sparse:
        if xs[i] and ys[j] and zs[k]:
            out[l] += xs[i] * ys[j] * zs[k] * c
    return _element(out, dx * dy * dz * T.product.den)


def hom_associator(A: HomAlgebra, x: Element, y: Element, z: Element) -> Element:
    """(x*y)*a(z) - a(x)*(y*z)."""
    a = A.twist
    return multiply(A, multiply(A, x, y), a(z)) - multiply(A, a(x), multiply(A, y, z))


def hom_jacobian(A: HomAlgebra, x: Element, y: Element, z: Element) -> Element:
    """Cyclic sum of (x*y)*a(z)."""
    a = A.twist
    return (
        multiply(A, multiply(A, x, y), a(z))
        + multiply(A, multiply(A, y, z), a(x))
        + multiply(A, multiply(A, z, x), a(y))
    )


def jordan_product(A: HomAlgebra, x: Element, y: Element) -> Element:
    return multiply(A, x, y) + multiply(A, y, x)


def hom_jordan_associator(A: HomAlgebra, x: Element, y: Element, z: Element) -> Element:
    a = A.twist
    return jordan_product(A, jordan_product(A, x, y), a(z)) - jordan_product(A, a(x), jordan_product(A, y, z))


# ---------------------------------------------------------------------------
# derived algebras


def commutator_algebra(A: HomAlgebra) -> HomAlgebra:
    return HomAlgebra(A.product - A.product.transpose(1, 0, 2), A.twist, A.basis)


def plus_algebra(A: HomAlgebra) -> HomAlgebra:
    return HomAlgebra(A.product + A.product.transpose(1, 0, 2), A.twist, A.basis)


def opposite_algebra(A: HomAlgebra) -> HomAlgebra:
    return HomAlgebra(A.product.transpose(1, 0, 2), A.twist, A.basis)


# ---------------------------------------------------------------------------
# reports


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    PRECONDITION = "precondition"


@dataclass(frozen=True)
class Witness:
    indices: tuple[int, ...]
    residual: Element

    def labels(self, basis: Sequence[str]) -> tuple[str, ...]:
        return tuple(basis[i] for i in self.indices)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check.

    ``clause`` names the failing sub-identity of a composite check;
    ``cause`` holds the failed precondition report when the verdict is
    :attr:`Verdict.PRECONDITION`.
    """

    identity: str
    verdict: Verdict
    witness: Witness | None = None
    form: str | None = None
    clause: str | None = None
    cause: CheckReport | None = None
    note: str | None = None

    def __post_init__(self):
        failing = self.verdict is Verdict.FAILS
        has_witness = self.witness is not None and bool(self.witness.residual)
        if failing != has_witness:
            raise ValueError("a report fails exactly when it carries a witness with nonzero residual")

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    @classmethod
    def ok(cls, identity: str, **kw) -> CheckReport:
        return cls(identity, Verdict.HOLDS, **kw)

    @classmethod
    def failed(cls, identity: str, witness: Witness, **kw) -> CheckReport:
        return cls(identity, Verdict.FAILS, witness, **kw)

    @classmethod
    def unmet(cls, identity: str, cause: CheckReport | None = None, note: str | None = None, **kw) -> CheckReport:
        return cls(identity, Verdict.PRECONDITION, cause=cause, note=note, **kw)

    def describe(self, basis: Sequence[str] | None = None) -> str:
        head = self.identity + (f" [{self.form}]" if self.form else "")
        if self.verdict is Verdict.HOLDS:
            return f"{head}: holds"
        if self.verdict is Verdict.PRECONDITION:
            why = self.cause.describe(basis) if self.cause is not None else (self.note or "")
            return f"{head}: precondition failed: {why}"
        w = self.witness
        at = ", ".join(w.labels(basis)) if basis is not None else ", ".join(map(str, w.indices))
        part = f" ({self.clause})" if self.clause else ""
        return f"{head}: fails{part} at ({at}) residual {w.residual}"


def _scan_basis(identity: str, dim: int, arity: int, residual) -> CheckReport:
    for idx in product(range(dim), repeat=arity):
        r = residual(*idx)
        if r:
            return CheckReport.failed(identity, Witness(idx, r))
    return CheckReport.ok(identity)


def is_multiplicative(A: HomAlgebra) -> CheckReport:
    """Is the twist a morphism of the product?  Checked on all basis pairs."""
    n, a = A.dim, A.twist
    e = [Element.basis(n, i) for i in range(n)]

    def residual(i, j):
        return a(multiply(A, e[i], e[j])) - multiply(A, a(e[i]), a(e[j]))

    return _scan_basis("multiplicative", n, 2, residual)


def is_multiplicative_ternary(T: TernaryHomAlgebra) -> CheckReport:
    """Equal twists that are a morphism of the ternary product, checked on basis triples."""
    a1, a2 = T.twists
    if a1 != a2:
        return CheckReport.unmet("ternary-multiplicative", note="the two twist maps differ")
    n = T.dim
    e = [Element.basis(n, i) for i in range(n)]

    def residual(i, j, k):
        return a1(ternary_apply(T, e[i], e[j], e[k])) - ternary_apply(T, a1(e[i]), a1(e[j]), a1(e[k]))

    return _scan_basis("ternary-multiplicative", n, 3, residual)


def is_morphism(A: HomAlgebra, m: LinearMap) -> CheckReport:
    """Is ``m`` a morphism of the bare product, m(x*y) = m(x)*m(y)?"""
    if m.dim != A.dim:
        raise DimensionError(f"map of dimension {m.dim} on algebra of dimension {A.dim}")
    report = is_multiplicative(A.with_twist(m))
    return CheckReport(
        "morphism", report.verdict, report.witness, report.form, report.clause, report.cause, report.note
    )
