"""Construction functors: Yau twists, Loos-type ternary products, Lie triple and Bol outputs.

Output tensors are obtained by evaluating the defining formula on three
symbolic basis variables with the form engine, so ``T[i, j, k, :]`` is
literally the formula at (e_i, e_j, e_k).  Functors verify their
hypotheses first (``check=False`` skips that) and raise
:class:`PreconditionError` carrying the failed report.
"""
from __future__ import annotations

from collections.abc import Callable
from fractions import Fraction

from homalg import core
from homalg import identities as ids
from homalg.core import CheckReport, HomAlgebra, HomBolAlgebra, LinearMap, TernaryHomAlgebra
from homalg.identities import FormEngine
from homalg.tensor import QTensor

THIRD = Fraction(1, 3)


class PreconditionError(ValueError):
    """A functor's hypothesis failed; ``report`` says which check and where."""

    def __init__(self, functor: str, report: CheckReport):
        self.functor = functor
        self.report = report
        super().__init__(f"{functor}: {report.describe()}")


def _require(functor: str, report: CheckReport) -> None:
    if not report.holds:
        raise PreconditionError(functor, report)


def _name(A) -> str:
    prov = A.provenance or {}
    return str(prov.get("name", "<anonymous>"))


def _provenance(functor: str, *inputs, **extra) -> dict:
    out = {"functor": functor, "inputs": [_name(a) for a in inputs]}
    out.update(extra)
    return out


def ternary_tensor(A, formula: Callable) -> QTensor:
    """The structure tensor of the trilinear operation ``formula(E, x, y, z)`` on ``A``."""
    E = FormEngine(A)
    x, y, z = (E.var(v) for v in "xyz")
    return formula(E, x, y, z).aligned("xyz")


def binary_tensor(A, formula: Callable) -> QTensor:
    E = FormEngine(A)
    x, y = E.var("x"), E.var("y")
    return formula(E, x, y).aligned("xy")


def _classical(A: HomAlgebra, functor: str) -> None:
    if not A.twist.is_identity():
        raise PreconditionError(functor, CheckReport.unmet(functor, note="input twist must be the identity"))


def _multiplicative_malcev(A: HomAlgebra, functor: str) -> None:
    _require(functor, core.is_multiplicative(A))
    _require(functor, ids.check_hom_malcev(A))


# ---------------------------------------------------------------------------
# twisting


def yau_twist(A: HomAlgebra, m: LinearMap, check: bool = True) -> HomAlgebra:
    """Product x*'y = m(x*y) with twist m composed with the input twist."""
    if check:
        _require("yau-twist", core.is_morphism(A, m))
    return HomAlgebra(
        A.product.apply_last(m.matrix),
        core.compose(m, A.twist),
        A.basis,
        _provenance("yau-twist", A),
    )


# ---------------------------------------------------------------------------
# ternary products from Hom-Malcev algebras


def _loos_jacobian_route(E, x, y, z):
    # same operation written as -J(x,y,z) + 3 (xy)a(z)
    return 3 * E.mul(E.mul(x, y), E.twist(z)) - ids.jacobian(E, x, y, z)


LOOS_ROUTES = {"expanded": ids.loos_bracket, "jacobian": _loos_jacobian_route}


def loos_ternary(A: HomAlgebra, route: str = "expanded", check: bool = True) -> TernaryHomAlgebra:
    """Ternary bracket 2(xy)a(z) - (yz)a(x) - (zx)a(y) with twists (a^2, a^2)."""
    if check:
        _multiplicative_malcev(A, "loos-lts")
    try:
        formula = LOOS_ROUTES[route]
    except KeyError:
        raise ValueError(f"route must be one of {tuple(LOOS_ROUTES)}, not {route!r}") from None
    a2 = core.power(A.twist, 2)
    return TernaryHomAlgebra(
        ternary_tensor(A, formula), (a2, a2), A.basis, _provenance("loos-lts", A, twist_power=2, route=route)
    )


def alpha_n_lts(A: HomAlgebra, m: LinearMap, n: int, check: bool = True) -> TernaryHomAlgebra:
    """m^n applied to the classical Loos bracket of a Malcev algebra, twists (m^n, m^n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if check:
        _classical(A, "alpha-n-lts")
        _require("alpha-n-lts", ids.check_hom_malcev(A))
        _require("alpha-n-lts", core.is_morphism(A, m))
    mn = core.power(m, n)
    classical = ternary_tensor(A, ids.loos_bracket)
    return TernaryHomAlgebra(
        classical.apply_last(mn.matrix), (mn, mn), A.basis, _provenance("alpha-n-lts", A, twist_power=n)
    )


def lts_from_malcev_morphism(A: HomAlgebra, m: LinearMap, check: bool = True) -> TernaryHomAlgebra:
    """Yau-twist a Malcev algebra along m, then take its Loos-type bracket."""
    if check:
        _classical(A, "lts-from-morphism")
    T = loos_ternary(yau_twist(A, m, check), check=check)
    return TernaryHomAlgebra(T.product, T.twists, T.basis, _provenance("lts-from-morphism", A, twist_power=2))


def bol_from_malcev(A: HomAlgebra, check: bool = True) -> HomBolAlgebra:
    """Bracket = product, triple = one third of the Loos-type bracket."""
    if check:
        _multiplicative_malcev(A, "bol-malcev")
    triple = ternary_tensor(A, ids.loos_bracket).scale(THIRD)
    return HomBolAlgebra(A.product, triple, A.twist, A.basis, _provenance("bol-malcev", A))


def _hom_alternative_triple(E, x, y, z):
    # -1/3 J(x,y,z) + [x,y]a(z), every product being a commutator of the input
    def br(a, b):
        return ids.commutator(E, a, b)

    jac = br(br(x, y), E.twist(z)) + br(br(y, z), E.twist(x)) + br(br(z, x), E.twist(y))
    return br(br(x, y), E.twist(z)) - THIRD * jac


def bol_from_hom_alternative(A: HomAlgebra, check: bool = True) -> HomBolAlgebra:
    """Bol algebra on the commutator bracket of a multiplicative Hom-alternative algebra."""
    if check:
        _require("bol-hom-alternative", core.is_multiplicative(A))
        _require("bol-hom-alternative", ids.check_hom_alternative(A))
    return HomBolAlgebra(
        binary_tensor(A, ids.commutator),
        ternary_tensor(A, _hom_alternative_triple),
        A.twist,
        A.basis,
        _provenance("bol-hom-alternative", A),
    )


# ---------------------------------------------------------------------------
# ternary products from (one-sided) Hom-alternative and Hom-Jordan structure


def _jordan_triple(E, x, y, z):
    return ids.jordan_associator(E, y, z, x)


def jordan_triple(A: HomAlgebra, check: bool = True) -> TernaryHomAlgebra:
    """(x, y, z) = Jordan associator at (y, z, x), with twists (a, a)."""
    if check:
        _require("jordan-triple", core.is_multiplicative(A))
    return TernaryHomAlgebra(
        ternary_tensor(A, _jordan_triple), (A.twist, A.twist), A.basis, _provenance("jordan-triple", A, twist_power=1)
    )


def _right_alternative_triple(E, x, y, z):
    return ids.commutator(E, ids.commutator(E, x, y), E.twist(z)) - 2 * ids.associator(E, z, x, y)


def _left_alternative_triple(E, x, y, z):
    return ids.commutator(E, ids.commutator(E, x, y), E.twist(z)) - 2 * ids.associator(E, x, y, z)


SIDES = {"right": _right_alternative_triple, "left": _left_alternative_triple}


def _one_sided(A: HomAlgebra, side: str, functor: str) -> None:
    _require(functor, core.is_multiplicative(A))
    checker = ids.check_right_hom_alternative if side == "right" else ids.check_left_hom_alternative
    _require(functor, checker(A))


def _side(side: str) -> Callable:
    try:
        return SIDES[side]
    except KeyError:
        raise ValueError(f"side must be 'right' or 'left', not {side!r}") from None


def ternary_from_alternative(A: HomAlgebra, side: str = "right", check: bool = True) -> TernaryHomAlgebra:
    """[[x,y],a(z)] - 2 as(z,x,y) (right) or - 2 as(x,y,z) (left), twists (a^2, a^2)."""
    formula = _side(side)
    if check:
        _one_sided(A, side, "ternary-alternative")
    a2 = core.power(A.twist, 2)
    return TernaryHomAlgebra(
        ternary_tensor(A, formula), (a2, a2), A.basis,
        _provenance("ternary-alternative", A, side=side, twist_power=2),
    )


def bol_from_one_sided_alternative(A: HomAlgebra, side: str = "right", check: bool = True) -> HomBolAlgebra:
    formula = _side(side)
    if check:
        _one_sided(A, side, "bol-one-sided")
    return HomBolAlgebra(
        binary_tensor(A, ids.commutator),
        ternary_tensor(A, formula),
        A.twist,
        A.basis,
        _provenance("bol-one-sided", A, side=side),
    )


def _jordan_lts(E, x, y, z):
    return 2 * (
        ids.jordan(E, E.twist(x), ids.jordan(E, y, z)) - ids.jordan(E, E.twist(y), ids.jordan(E, x, z))
    )


def jordan_lts(A: HomAlgebra, check: bool = True) -> TernaryHomAlgebra:
    """2(a(x) o (y o z) - a(y) o (x o z)) over the Jordan product, twists (a^2, a^2)."""
    if check:
        _require("jordan-lts", ids.check_hom_jordan(core.plus_algebra(A)))
    a2 = core.power(A.twist, 2)
    return TernaryHomAlgebra(
        ternary_tensor(A, _jordan_lts), (a2, a2), A.basis, _provenance("jordan-lts", A, twist_power=2)
    )


# name -> (callable, arguments beyond the algebra); used by the CLI
FUNCTORS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "yau-twist": (yau_twist, ("morphism",)),
    "loos-lts": (loos_ternary, ()),
    "alpha-n-lts": (alpha_n_lts, ("morphism", "n")),
    "lts-from-morphism": (lts_from_malcev_morphism, ("morphism",)),
    "bol-malcev": (bol_from_malcev, ()),
    "bol-hom-alternative": (bol_from_hom_alternative, ()),
    "jordan-triple": (jordan_triple, ()),
    "ternary-alternative": (ternary_from_alternative, ("side",)),
    "bol-one-sided": (bol_from_one_sided_alternative, ("side",)),
    "jordan-lts": (jordan_lts, ()),
    "commutator": (core.commutator_algebra, ()),
    "plus": (core.plus_algebra, ()),
    "opposite": (core.opposite_algebra, ()),
}
