"""Identity engine: named identities, polarization, basis scans and checkers.

An identity is written once, as a residual (left side minus right side)
that takes one argument per *occurrence* of a variable.  ``slots`` records
which variable each argument belongs to, so the unpolarized identity is
recovered by passing the same element to every slot of a variable, and the
full polarization is the sum of the residual over all ways of handing d
fresh variables to the d slots of a variable of degree d.  In
characteristic 0 the polarized identity vanishes on all basis tuples
exactly when the original identity holds for all elements, which is what
makes a finite basis scan a complete check.

Residual functions only use the engine interface (``mul``, ``tri``,
``twist``...) plus ``+``, ``-`` and scalar ``*``, so the same definition
runs on the tensor engine (all basis tuples at once) and on plain
:class:`~homalg.core.Element` values (random-element probes).
"""
from __future__ import annotations

import itertools
import os
import random
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from homalg import core, forms
from homalg.core import (
    CheckReport,
    Element,
    HomAlgebra,
    HomBolAlgebra,
    LinearMap,
    TernaryHomAlgebra,
    Witness,
)

Algebra = HomAlgebra | TernaryHomAlgebra | HomBolAlgebra


class UnknownIdentity(KeyError):
    pass


# ---------------------------------------------------------------------------
# engines


class _Engine:
    """Shared twist bookkeeping for both evaluation engines."""

    def __init__(self, algebra: Algebra):
        self.algebra = algebra
        if isinstance(algebra, TernaryHomAlgebra):
            self._alpha, self._alpha2 = algebra.twists
        else:
            self._alpha = self._alpha2 = algebra.twist
        self._powers: dict[int, LinearMap] = {}

    def _power(self, k: int) -> LinearMap:
        if k not in self._powers:
            self._powers[k] = core.power(self._alpha, k)
        return self._powers[k]


class FormEngine(_Engine):
    """Evaluates residuals as forms over basis tuples."""

    def __init__(self, algebra: Algebra):
        super().__init__(algebra)
        if isinstance(algebra, HomBolAlgebra):
            self._binary, self._ternary = algebra.bracket, algebra.triple
        elif isinstance(algebra, HomAlgebra):
            self._binary, self._ternary = algebra.product, None
        else:
            self._binary, self._ternary = None, algebra.product

    def var(self, name: str, indices=None) -> forms.Form:
        return forms.Form.var(name, self.algebra.dim, indices)

    def mul(self, x, y):
        return forms.bilinear(self._binary, x, y)

    def tri(self, x, y, z):
        return forms.trilinear(self._ternary, x, y, z)

    def twist(self, x, k: int = 1):
        return x if k == 0 else forms.apply_map(self._power(k).matrix, x)

    def twist1(self, x):
        return forms.apply_map(self._alpha.matrix, x)

    def twist2(self, x):
        return forms.apply_map(self._alpha2.matrix, x)


class ElementEngine(_Engine):
    """Evaluates residuals on concrete elements with the naive core operators."""

    def __init__(self, algebra: Algebra):
        super().__init__(algebra)
        if isinstance(algebra, HomBolAlgebra):
            self._binary = algebra.binary_part()
            self._ternary = TernaryHomAlgebra(algebra.triple, None, algebra.basis)
        elif isinstance(algebra, HomAlgebra):
            self._binary, self._ternary = algebra, None
        else:
            self._binary, self._ternary = None, algebra

    def mul(self, x, y):
        return core.multiply(self._binary, x, y)

    def tri(self, x, y, z):
        return core.ternary_apply(self._ternary, x, y, z)

    def twist(self, x, k: int = 1):
        return x if k == 0 else core.apply_map(self._power(k), x)

    def twist1(self, x):
        return core.apply_map(self._alpha, x)

    def twist2(self, x):
        return core.apply_map(self._alpha2, x)


# ---------------------------------------------------------------------------
# derived operators, generic over the engine


def jacobian(E, x, y, z):
    return E.mul(E.mul(x, y), E.twist(z)) + E.mul(E.mul(y, z), E.twist(x)) + E.mul(E.mul(z, x), E.twist(y))


def associator(E, x, y, z):
    return E.mul(E.mul(x, y), E.twist(z)) - E.mul(E.twist(x), E.mul(y, z))


def commutator(E, x, y):
    return E.mul(x, y) - E.mul(y, x)


def jordan(E, x, y):
    return E.mul(x, y) + E.mul(y, x)


def jordan_associator(E, x, y, z):
    return jordan(E, jordan(E, x, y), E.twist(z)) - jordan(E, E.twist(x), jordan(E, y, z))


def loos_bracket(E, x, y, z):
    """2 (xy)a(z) - (yz)a(x) - (zx)a(y)."""
    return (
        2 * E.mul(E.mul(x, y), E.twist(z))
        - E.mul(E.mul(y, z), E.twist(x))
        - E.mul(E.mul(z, x), E.twist(y))
    )


# ---------------------------------------------------------------------------
# identity specifications


@dataclass(frozen=True)
class IdentitySpec:
    """A named identity given by its residual and the variable of each argument slot."""

    name: str
    slots: tuple[str, ...]
    residual: Callable = field(repr=False, compare=False)
    kind: str = "binary"

    @property
    def arity(self) -> int:
        """Number of variables after polarization (one per slot)."""
        return len(self.slots)

    @property
    def originals(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(self.slots))

    @property
    def variables(self) -> tuple[str, ...]:
        counts = {v: self.slots.count(v) for v in self.originals}
        seen: dict[str, int] = {}
        out = []
        for v in self.slots:
            if counts[v] == 1:
                out.append(v)
            else:
                seen[v] = seen.get(v, 0) + 1
                out.append(f"{v}{seen[v]}")
        return tuple(out)

    def assignments(self) -> list[tuple[int, ...]]:
        """Every way to hand the polarized variables (by position) to the slots."""
        groups: dict[str, list[int]] = {}
        for pos, v in enumerate(self.slots):
            groups.setdefault(v, []).append(pos)
        per_group = [list(itertools.permutations(ps)) for ps in groups.values()]
        out = []
        for choice in itertools.product(*per_group):
            slot_to_var = [0] * self.arity
            for positions, perm in zip(groups.values(), choice):
                for slot, var in zip(positions, perm):
                    slot_to_var[slot] = var
            out.append(tuple(slot_to_var))
        return out

    def polarized(self, E, values: Sequence):
        """Polarized residual with ``values[i]`` bound to the i-th polarized variable."""
        terms = [self.residual(E, *(values[v] for v in a)) for a in self.assignments()]
        return reduce(lambda s, t: s + t, terms)


REGISTRY: dict[str, IdentitySpec] = {}


def _identity(name: str, slots: str, kind: str = "binary"):
    def register(fn):
        spec = IdentitySpec(name, tuple(slots.split()), fn, kind)
        REGISTRY[name] = spec
        return spec

    return register


def spec(name: str) -> IdentitySpec:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownIdentity(name) from None


# binary identities


@_identity("anticommutative", "x x")
def _anticommutative(E, a, b):
    # polarizes to a*b + b*a; at a diagonal basis pair this is 2 e_i*e_i
    return E.mul(a, b)


@_identity("commutative", "x y")
def _commutative(E, x, y):
    return E.mul(x, y) - E.mul(y, x)


@_identity("multiplicative", "x y")
def _multiplicative(E, x, y):
    return E.twist(E.mul(x, y)) - E.mul(E.twist(x), E.twist(y))


@_identity("hom-associative", "x y z")
def _hom_associative(E, x, y, z):
    return associator(E, x, y, z)


@_identity("hom-lie", "x y z")
def _hom_jacobi(E, x, y, z):
    return jacobian(E, x, y, z)


@_identity("hom-malcev/direct", "x x y z")
def _malcev_direct(E, x1, x2, y, z):
    return jacobian(E, E.twist(x1), E.twist(y), E.mul(x2, z)) - E.mul(jacobian(E, x1, y, z), E.twist(x2, 2))


@_identity("hom-malcev/eq23", "x y w z")
def _malcev_eq23(E, x, y, w, z):
    return (
        jacobian(E, E.twist(x), E.twist(y), E.mul(w, z))
        + jacobian(E, E.twist(w), E.twist(y), E.mul(x, z))
        - E.mul(jacobian(E, x, y, z), E.twist(w, 2))
        - E.mul(jacobian(E, w, y, z), E.twist(x, 2))
    )


@_identity("hom-malcev/eq24", "x y u v")
def _malcev_eq24(E, x, y, u, v):
    return (
        jacobian(E, E.twist(x), E.twist(y), E.mul(u, v))
        - E.mul(E.twist(u, 2), jacobian(E, x, y, v))
        - E.mul(jacobian(E, x, y, u), E.twist(v, 2))
        + 2 * jacobian(E, E.twist(u), E.twist(v), E.mul(x, y))
    )


@_identity("right-alternative/direct", "x y y")
def _right_alt_direct(E, x, y1, y2):
    return associator(E, x, y1, y2)


@_identity("right-alternative/eq41", "x y z")
def _right_alt_skew(E, x, y, z):
    return associator(E, x, y, z) + associator(E, x, z, y)


@_identity("right-alternative/eq42", "x y z")
def _right_alt_expanded(E, x, y, z):
    return (
        E.mul(E.twist(x), E.mul(y, z) + E.mul(z, y))
        - E.mul(E.mul(x, y), E.twist(z))
        - E.mul(E.mul(x, z), E.twist(y))
    )


@_identity("left-alternative/direct", "x x y")
def _left_alt_direct(E, x1, x2, y):
    return associator(E, x1, x2, y)


@_identity("left-alternative/eq43", "x y z")
def _left_alt_skew(E, x, y, z):
    return associator(E, x, y, z) + associator(E, y, x, z)


@_identity("left-alternative/eq44", "x y z")
def _left_alt_expanded(E, x, y, z):
    # mirror of the right expanded form through x *op y = y * x
    return (
        E.mul(E.mul(x, y) + E.mul(y, x), E.twist(z))
        - E.mul(E.twist(x), E.mul(y, z))
        - E.mul(E.twist(y), E.mul(x, z))
    )


@_identity("hom-jordan", "x x x y")
def _hom_jordan(E, a, b, c, y):
    return associator(E, E.mul(a, b), E.twist(y), E.twist(c))


@_identity("loos-compatibility", "x y u v")
def _loos_compatibility(E, x, y, u, v):
    return (
        loos_bracket(E, E.twist(x), E.twist(y), E.mul(u, v))
        - E.mul(E.twist(u, 2), loos_bracket(E, x, y, v))
        - E.mul(loos_bracket(E, x, y, u), E.twist(v, 2))
        + jacobian(E, E.twist(u), E.twist(v), E.mul(x, y))
    )


@_identity("bracket-associator/right", "u v x y")
def _bracket_associator_right(E, u, v, x, y):
    return (
        associator(E, commutator(E, u, v), E.twist(x), E.twist(y))
        - commutator(E, associator(E, u, x, y), E.twist(v, 2))
        - commutator(E, E.twist(u, 2), associator(E, v, x, y))
        - associator(E, E.twist(v), E.twist(u), commutator(E, x, y))
        + associator(E, E.twist(u), E.twist(v), commutator(E, x, y))
    )


@_identity("bracket-associator/left", "u v x y")
def _bracket_associator_left(E, u, v, x, y):
    return (
        associator(E, E.twist(x), E.twist(y), commutator(E, u, v))
        - commutator(E, associator(E, x, y, u), E.twist(v, 2))
        - commutator(E, E.twist(u, 2), associator(E, x, y, v))
        - associator(E, commutator(E, x, y), E.twist(v), E.twist(u))
        + associator(E, commutator(E, x, y), E.twist(u), E.twist(v))
    )


# ternary identities


@_identity("left-skew", "x y z", "ternary")
def _left_skew(E, x, y, z):
    return E.tri(x, y, z) + E.tri(y, x, z)


@_identity("cyclic", "x y z", "ternary")
def _cyclic(E, x, y, z):
    return E.tri(x, y, z) + E.tri(y, z, x) + E.tri(z, x, y)


@_identity("nambu", "x y u v w", "ternary")
def _nambu(E, x, y, u, v, w):
    return (
        E.tri(E.twist1(x), E.twist2(y), E.tri(u, v, w))
        - E.tri(E.tri(x, y, u), E.twist1(v), E.twist2(w))
        - E.tri(E.twist1(u), E.tri(x, y, v), E.twist2(w))
        - E.tri(E.twist1(u), E.twist2(v), E.tri(x, y, w))
    )


# Bol identities; the engine's ``mul`` is the bracket


@_identity("HB1", "x y", "bol")
def _hb1(E, x, y):
    return E.twist(E.mul(x, y)) - E.mul(E.twist(x), E.twist(y))


@_identity("HB2", "x y z", "bol")
def _hb2(E, x, y, z):
    return E.twist(E.tri(x, y, z)) - E.tri(E.twist(x), E.twist(y), E.twist(z))


@_identity("HB3", "x y", "bol")
def _hb3(E, x, y):
    return E.mul(x, y) + E.mul(y, x)


@_identity("HB4", "x y z", "bol")
def _hb4(E, x, y, z):
    return E.tri(x, y, z) + E.tri(y, x, z)


@_identity("HB5", "x y z", "bol")
def _hb5(E, x, y, z):
    return E.tri(x, y, z) + E.tri(y, z, x) + E.tri(z, x, y)


@_identity("HB6", "x y u v", "bol")
def _hb6(E, x, y, u, v):
    a = E.twist
    return (
        E.tri(a(x), a(y), E.mul(u, v))
        - E.mul(E.tri(x, y, u), a(v, 2))
        - E.mul(a(u, 2), E.tri(x, y, v))
        - E.tri(a(u), a(v), E.mul(x, y))
        + E.mul(E.mul(a(u), a(v)), E.mul(a(x), a(y)))
    )


@_identity("HB7", "x y u v w", "bol")
def _hb7(E, x, y, u, v, w):
    a = E.twist
    return (
        E.tri(a(x, 2), a(y, 2), E.tri(u, v, w))
        - E.tri(E.tri(x, y, u), a(v, 2), a(w, 2))
        - E.tri(a(u, 2), E.tri(x, y, v), a(w, 2))
        - E.tri(a(u, 2), a(v, 2), E.tri(x, y, w))
    )


BOL_CLAUSES = ("HB1", "HB2", "HB3", "HB4", "HB5", "HB6", "HB7")

_KIND_TYPES = {"binary": HomAlgebra, "ternary": TernaryHomAlgebra, "bol": HomBolAlgebra}


def _check_kind(s: IdentitySpec, algebra) -> None:
    if not isinstance(algebra, _KIND_TYPES[s.kind]):
        raise TypeError(f"identity {s.name!r} applies to {s.kind} algebras, got {type(algebra).__name__}")


# ---------------------------------------------------------------------------
# evaluation


def default_workers() -> int:
    raw = os.environ.get("HOMCHECK_THREADS", "").strip()
    if not raw:
        return 1
    value = int(raw)
    if value < 1:
        raise ValueError("HOMCHECK_THREADS must be a positive integer")
    return value


def residual_form(s: IdentitySpec, algebra, first_indices=None) -> forms.Form:
    """Polarized residual on every basis tuple, optionally restricting the first variable."""
    _check_kind(s, algebra)
    E = FormEngine(algebra)
    names = s.variables
    values = [E.var(v, first_indices if i == 0 else None) for i, v in enumerate(names)]
    return s.polarized(E, values)


def _scan_chunk(s: IdentitySpec, algebra, indices):
    f = residual_form(s, algebra, indices)
    hit = forms.first_nonzero(f.aligned(s.variables))
    if hit is None:
        return None
    idx, coords = hit
    return (indices[idx[0]],) + idx[1:], Element(coords)


def scan(s: IdentitySpec, algebra, workers: int | None = None) -> Witness | None:
    """First basis tuple (lexicographic) where the polarized residual is nonzero.

    With several workers the first variable's range is split into contiguous
    chunks; the earliest chunk with a failure supplies the witness, so the
    result never depends on the worker count.
    """
    n = algebra.dim
    workers = min(default_workers() if workers is None else workers, n)
    if workers <= 1:
        hit = _scan_chunk(s, algebra, list(range(n)))
        return None if hit is None else Witness(*hit)
    bounds = [round(k * n / workers) for k in range(workers + 1)]
    chunks = [list(range(bounds[k], bounds[k + 1])) for k in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        hits = list(pool.map(lambda c: _scan_chunk(s, algebra, c), chunks))
    for hit in hits:
        if hit is not None:
            return Witness(*hit)
    return None


def run(s: IdentitySpec, algebra, *, identity: str | None = None, form: str | None = None,
        clause: str | None = None, workers: int | None = None) -> CheckReport:
    name = identity or s.name
    w = scan(s, algebra, workers)
    if w is None:
        return CheckReport.ok(name, form=form)
    return CheckReport.failed(name, w, form=form, clause=clause)


def polarized_residual(s: IdentitySpec, algebra, indices: Sequence[int]) -> Element:
    """Polarized residual at one basis tuple, on the element path."""
    _check_kind(s, algebra)
    if len(indices) != s.arity:
        raise ValueError(f"identity {s.name!r} has arity {s.arity}, got {len(indices)} indices")
    n = algebra.dim
    return s.polarized(ElementEngine(algebra), [Element.basis(n, i) for i in indices])


def evaluate(s: IdentitySpec, algebra, *elements: Element) -> Element:
    """Residual of the original (unpolarized) identity: one element per distinct variable."""
    _check_kind(s, algebra)
    names = s.originals
    if len(elements) != len(names):
        raise ValueError(f"identity {s.name!r} takes variables {names}, got {len(elements)} elements")
    bound = dict(zip(names, elements))
    return s.residual(ElementEngine(algebra), *(bound[v] for v in s.slots))


def random_element(dim: int, rng: random.Random, spread: int = 3) -> Element:
    return Element(
        tuple(Fraction(rng.randint(-spread, spread), rng.choice((1, 1, 2, 3))) for _ in range(dim))
    )


def probe(s: IdentitySpec, algebra, rng: random.Random, count: int = 20) -> list[tuple[tuple[Element, ...], Element]]:
    """Evaluate the unpolarized identity at random elements; return the nonzero residuals."""
    bad = []
    for _ in range(count):
        xs = tuple(random_element(algebra.dim, rng) for _ in s.originals)
        r = evaluate(s, algebra, *xs)
        if r:
            bad.append((xs, r))
    return bad


# ---------------------------------------------------------------------------
# checkers

MALCEV_FORMS = ("direct", "eq23", "eq24")
RIGHT_ALTERNATIVE_FORMS = ("direct", "eq41", "eq42")
LEFT_ALTERNATIVE_FORMS = ("direct", "eq43", "eq44")


def _form(name: str, form: str, allowed: Sequence[str]) -> IdentitySpec:
    if form not in allowed:
        raise ValueError(f"{name} has forms {tuple(allowed)}, not {form!r}")
    return REGISTRY[f"{name}/{form}"]


def check_anticommutative(A: HomAlgebra, workers=None) -> CheckReport:
    return run(REGISTRY["anticommutative"], A, workers=workers)


def check_commutative(A: HomAlgebra, workers=None) -> CheckReport:
    return run(REGISTRY["commutative"], A, workers=workers)


def check_multiplicative(A: HomAlgebra, workers=None) -> CheckReport:
    return run(REGISTRY["multiplicative"], A, workers=workers)


def check_hom_associative(A: HomAlgebra, workers=None) -> CheckReport:
    return run(REGISTRY["hom-associative"], A, workers=workers)


def check_hom_lie(A: HomAlgebra, workers=None) -> CheckReport:
    pre = check_anticommutative(A, workers)
    if not pre.holds:
        return CheckReport.unmet("hom-lie", pre)
    return run(REGISTRY["hom-lie"], A, workers=workers)


def check_hom_malcev(A: HomAlgebra, form: str = "eq23", workers=None) -> CheckReport:
    s = _form("hom-malcev", form, MALCEV_FORMS)
    pre = check_anticommutative(A, workers)
    if not pre.holds:
        return CheckReport.unmet("hom-malcev", pre, form=form)
    return run(s, A, identity="hom-malcev", form=form, workers=workers)


def check_right_hom_alternative(A: HomAlgebra, form: str = "eq42", workers=None) -> CheckReport:
    s = _form("right-alternative", form, RIGHT_ALTERNATIVE_FORMS)
    return run(s, A, identity="right-alternative", form=form, workers=workers)


def check_left_hom_alternative(A: HomAlgebra, form: str = "eq43", workers=None) -> CheckReport:
    s = _form("left-alternative", form, LEFT_ALTERNATIVE_FORMS)
    return run(s, A, identity="left-alternative", form=form, workers=workers)


def check_hom_alternative(A: HomAlgebra, workers=None) -> CheckReport:
    for clause, checker in (("right", check_right_hom_alternative), ("left", check_left_hom_alternative)):
        r = checker(A, workers=workers)
        if not r.holds:
            return CheckReport.failed("hom-alternative", r.witness, clause=clause)
    return CheckReport.ok("hom-alternative")


def check_hom_jordan(A: HomAlgebra, workers=None) -> CheckReport:
    pre = check_commutative(A, workers)
    if not pre.holds:
        return CheckReport.unmet("hom-jordan", pre)
    return run(REGISTRY["hom-jordan"], A, workers=workers)


def check_ternary_hom_nambu(T: TernaryHomAlgebra, workers=None) -> CheckReport:
    return run(REGISTRY["nambu"], T, identity="ternary-hom-nambu", workers=workers)


def _conjunction(name: str, algebra, clauses: Sequence[str], workers) -> CheckReport:
    for clause in clauses:
        w = scan(REGISTRY[clause], algebra, workers)
        if w is not None:
            return CheckReport.failed(name, w, clause=clause)
    return CheckReport.ok(name)


def check_hom_triple(T: TernaryHomAlgebra, workers=None) -> CheckReport:
    return _conjunction("hom-triple", T, ("left-skew", "cyclic"), workers)


def check_hom_lts(T: TernaryHomAlgebra, workers=None) -> CheckReport:
    return _conjunction("hom-lts", T, ("left-skew", "cyclic", "nambu"), workers)


def check_hom_bol(B: HomBolAlgebra, workers=None) -> CheckReport:
    return _conjunction("hom-bol", B, BOL_CLAUSES, workers)


def _multiplicative_malcev(A: HomAlgebra, name: str, workers) -> CheckReport | None:
    pre = core.is_multiplicative(A)
    if not pre.holds:
        return CheckReport.unmet(name, pre)
    pre = check_hom_malcev(A, workers=workers)
    if not pre.holds:
        return CheckReport.unmet(name, pre)
    return None


def check_loos_compatibility(A: HomAlgebra, workers=None) -> CheckReport:
    """The compatibility between the product and the Loos-type ternary bracket of a Hom-Malcev algebra."""
    unmet = _multiplicative_malcev(A, "loos-compatibility", workers)
    if unmet is not None:
        return unmet
    return run(REGISTRY["loos-compatibility"], A, workers=workers)


def check_bracket_associator(A: HomAlgebra, side: str = "right", workers=None) -> CheckReport:
    """Associator of a commutator against commutators of associators, for one-sided Hom-alternative algebras."""
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', not {side!r}")
    pre = core.is_multiplicative(A)
    if pre.holds:
        checker = check_right_hom_alternative if side == "right" else check_left_hom_alternative
        pre = checker(A, workers=workers)
    if not pre.holds:
        return CheckReport.unmet("bracket-associator", pre, form=side)
    return run(REGISTRY[f"bracket-associator/{side}"], A, identity="bracket-associator", form=side, workers=workers)


# aliases matching the operation names used in the docs
check_lemma_3_1 = check_loos_compatibility
check_lemma_4_2 = check_bracket_associator


# name -> (kind, checker, forms) for the CLI and the catalog claims
CHECKERS: dict[str, tuple[str, Callable, tuple[str, ...]]] = {
    "anticommutative": ("binary", check_anticommutative, ()),
    "commutative": ("binary", check_commutative, ()),
    "multiplicative": ("binary", lambda A, workers=None: core.is_multiplicative(A), ()),
    "hom-associative": ("binary", check_hom_associative, ()),
    "hom-lie": ("binary", check_hom_lie, ()),
    "hom-malcev": ("binary", check_hom_malcev, MALCEV_FORMS),
    "right-alternative": ("binary", check_right_hom_alternative, RIGHT_ALTERNATIVE_FORMS),
    "left-alternative": ("binary", check_left_hom_alternative, LEFT_ALTERNATIVE_FORMS),
    "hom-alternative": ("binary", check_hom_alternative, ()),
    "hom-jordan": ("binary", check_hom_jordan, ()),
    "loos-compatibility": ("binary", check_loos_compatibility, ()),
    "bracket-associator": ("binary", check_bracket_associator, ("right", "left")),
    "ternary-multiplicative": ("ternary", lambda T, workers=None: core.is_multiplicative_ternary(T), ()),
    "ternary-hom-nambu": ("ternary", check_ternary_hom_nambu, ()),
    "hom-triple": ("ternary", check_hom_triple, ()),
    "hom-lts": ("ternary", check_hom_lts, ()),
    "hom-bol": ("bol", check_hom_bol, ()),
}

DEFAULT_FORMS = {"hom-malcev": "eq23", "right-alternative": "eq42", "left-alternative": "eq43",
                 "bracket-associator": "right"}


def check(name: str, algebra, form: str | None = None, workers=None) -> CheckReport:
    """Run a checker by its registered name."""
    try:
        kind, checker, forms_ = CHECKERS[name]
    except KeyError:
        raise UnknownIdentity(name) from None
    if not isinstance(algebra, _KIND_TYPES[kind]):
        raise TypeError(f"{name!r} checks {kind} algebras, got {type(algebra).__name__}")
    if forms_:
        form = form or DEFAULT_FORMS[name]
        if name == "bracket-associator":
            return checker(algebra, side=form, workers=workers)
        return checker(algebra, form=form, workers=workers)
    if form is not None:
        raise ValueError(f"{name!r} has no alternative forms")
    return checker(algebra, workers=workers)
