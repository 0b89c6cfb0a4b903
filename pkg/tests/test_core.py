from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homalg import catalog, core
from homalg.core import (
    CheckReport, DimensionError, Element, HomAlgebra, HomBolAlgebra, LinearMap, TernaryHomAlgebra, Verdict,
    Witness, commutator_algebra, compose, hom_associator, hom_jacobian, hom_jordan_associator, jordan_product,
    multiply, opposite_algebra, plus_algebra, power, ternary_apply,
)

from conftest import elements, random_algebra, rationals
from oracles import Naive, NaiveTernary, loos


def el(*xs):
    return Element(tuple(xs))


# ---------------------------------------------------------------------------
# elements and maps


def test_element_arithmetic():
    x, y = el(1, Fraction(1, 2)), el(-1, 3)
    assert x + y == el(0, Fraction(7, 2))
    assert x - y == el(2, Fraction(-5, 2))
    assert x * 2 == el(2, 1) and -x == el(-1, Fraction(-1, 2))
    assert not Element.zero(3) and Element.basis(3, 1) == el(0, 1, 0)
    with pytest.raises(DimensionError):
        x + el(1, 2, 3)
    with pytest.raises(TypeError):
        el(0.5)


def test_power_examples():
    m = LinearMap.diag([3, Fraction(1, 3)])
    assert power(m, 2) == LinearMap.diag([9, Fraction(1, 9)])
    assert power(m, 0).is_identity()
    assert compose(LinearMap.identity(2), m) == m
    with pytest.raises(ValueError):
        power(m, -1)


def test_map_columns_are_images():
    m = LinearMap.from_rows([[1, 2], [3, 4]])
    assert m(Element.basis(2, 1)) == el(2, 4)


maps = st.lists(rationals, min_size=4, max_size=4).map(lambda v: LinearMap.from_rows([v[:2], v[2:]]))


@given(maps, maps, maps)
def test_compose_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(maps, elements(2))
def test_compose_applies_right_first(a, x):
    b = LinearMap.from_rows([[0, 1], [1, 1]])
    assert compose(a, b)(x) == a(b(x))


def test_bad_shapes():
    with pytest.raises(DimensionError):
        LinearMap.from_rows([[1, 2]])
    with pytest.raises(DimensionError):
        HomAlgebra([[[0, 0], [0, 0]]])
    with pytest.raises(DimensionError):
        HomAlgebra([[[0]]], LinearMap.identity(2))
    with pytest.raises(ValueError):
        HomAlgebra([[[0] * 2] * 2] * 2, basis=("a", "a"))
    with pytest.raises(DimensionError):
        HomBolAlgebra([[[0]]], [[[[0] * 2] * 2] * 2] * 2)


# ---------------------------------------------------------------------------
# the examples for the operators


def test_multiply_sl2(sl2):
    h, e, f = (sl2.element({b: 1}) for b in "hef")
    assert multiply(sl2, h, e) == e * 2
    assert not multiply(sl2, e + f, e + f)
    zero2 = HomAlgebra([[[0] * 2] * 2] * 2)
    assert not multiply(zero2, Element.basis(2, 0), Element.basis(2, 1))
    with pytest.raises(DimensionError):
        multiply(sl2, h, Element.basis(2, 0))


def test_associator_examples(sl2, assoc2):
    h, e, f = (sl2.element({b: 1}) for b in "hef")
    assert hom_associator(sl2, h, e, f) == h * 2
    assert not hom_jacobian(sl2, h, e, f)
    u, v = (assoc2.element({b: 1}) for b in "uv")
    assert not hom_associator(assoc2, v, v, u)
    assert not hom_jordan_associator(assoc2, u, v, v)


def test_jacobian_on_m4_witness(entry):
    e = entry("m4")
    w = e.claim("hom-lie").witness
    A = e.payload
    xs = [Element.basis(A.dim, i) for i in w.indices]
    assert hom_jacobian(A, *xs) == w.residual and w.residual


def test_ternary_apply_loos_sl2(sl2):
    from homalg.constructions import loos_ternary
    T = loos_ternary(sl2)
    h, e, f = (sl2.element({b: 1}) for b in "hef")
    N = Naive.of(sl2)
    assert list(ternary_apply(T, h, e, f)) == loos(N, list(h), list(e), list(f))


@given(elements(3), elements(3), elements(3))
@settings(max_examples=40)
def test_ternary_apply_matches_naive(x, y, z):
    t = [[[[Fraction((i + 2 * j - k + l) % 3 - 1) for l in range(3)] for k in range(3)] for j in range(3)]
         for i in range(3)]
    T = TernaryHomAlgebra(t)
    assert list(ternary_apply(T, x, y, z)) == NaiveTernary(t).tri(list(x), list(y), list(z))


# ---------------------------------------------------------------------------
# multilinearity and structural invariants


A3 = random_algebra(3, 11)
SL2 = catalog.get("sl2").payload


@given(elements(3), elements(3), elements(3), rationals)
def test_multiply_is_bilinear(x, y, z, q):
    assert multiply(A3, x * q + y, z) == multiply(A3, x, z) * q + multiply(A3, y, z)
    assert multiply(A3, z, x * q + y) == multiply(A3, z, x) * q + multiply(A3, z, y)


@given(elements(3), elements(3))
def test_multiply_matches_naive(x, y):
    assert list(multiply(A3, x, y)) == Naive.of(A3).mul(list(x), list(y))


@pytest.mark.parametrize("op", [hom_associator, hom_jacobian, hom_jordan_associator])
@given(x=elements(3), y=elements(3), z=elements(3), w=elements(3), q=rationals)
@settings(max_examples=25)
def test_trilinear_operators(op, x, y, z, w, q):
    for pos in range(3):
        args1, args2, mix = [x, y, z], [x, y, z], [x, y, z]
        args2[pos] = w
        mix[pos] = args1[pos] * q + w
        assert op(A3, *mix) == op(A3, *args1) * q + op(A3, *args2)


@given(elements(3), elements(3), elements(3))
@settings(max_examples=40)
def test_jacobian_cyclic_and_reduces_at_identity(x, y, z):
    assert hom_jacobian(A3, x, y, z) == hom_jacobian(A3, y, z, x)
    B = A3.with_twist(LinearMap.identity(3))
    classical = multiply(B, multiply(B, x, y), z) - multiply(B, x, multiply(B, y, z))
    assert hom_associator(B, x, y, z) == classical


@given(elements(3), elements(3))
def test_derived_algebras(x, y):
    assert multiply(commutator_algebra(A3), x, y) == multiply(A3, x, y) - multiply(A3, y, x)
    assert multiply(plus_algebra(A3), x, y) == jordan_product(A3, x, y)
    assert multiply(opposite_algebra(A3), x, y) == multiply(A3, y, x)


def test_derived_algebra_examples(sl2, assoc2):
    assert commutator_algebra(sl2).product == sl2.product.scale(2)
    assert not any(commutator_algebra(assoc2).product.nonzero())
    assert plus_algebra(assoc2).product == assoc2.product.scale(2)
    assert not any(plus_algebra(sl2).product.nonzero())
    assert opposite_algebra(assoc2) == assoc2
    assert opposite_algebra(opposite_algebra(A3)) == A3


@given(elements(3), elements(3))
def test_jordan_product_vanishes_on_anticommutative(x, y):
    assert not jordan_product(SL2, x, y)


# ---------------------------------------------------------------------------
# reports and multiplicativity


def test_report_invariant():
    w = Witness((0,), el(1))
    with pytest.raises(ValueError):
        CheckReport("x", Verdict.FAILS)
    with pytest.raises(ValueError):
        CheckReport("x", Verdict.HOLDS, w)
    with pytest.raises(ValueError):
        CheckReport("x", Verdict.FAILS, Witness((0,), el(0)))
    assert CheckReport.failed("x", w).describe(("a",)) == "x: fails at (a) residual (1)"


def test_is_multiplicative_examples(sl2):
    assert core.is_multiplicative(sl2.with_twist(LinearMap.identity(3))).holds
    torus = sl2.with_twist(LinearMap.diag([1, 2, Fraction(1, 2)]))
    assert core.is_multiplicative(torus).holds
    bad = sl2.with_twist(LinearMap.diag([2, 1, 1]))
    r = core.is_multiplicative(bad)
    assert r.verdict is Verdict.FAILS
    assert r.witness.labels(sl2.basis) == ("h", "e")
    i, j = r.witness.indices
    N = Naive.of(bad)
    x, y = N.basis(i), N.basis(j)
    expected = [p - q for p, q in zip(N.a(N.mul(x, y)), N.mul(N.a(x), N.a(y)))]
    assert list(r.witness.residual) == expected and any(expected)


def test_is_morphism_does_not_use_twist(entry):
    e = entry("m4")
    for name, m in e.morphisms:
        assert core.is_morphism(e.payload, m).holds, name


def test_multiplicative_ternary_needs_equal_twists():
    t = [[[[0]]]]
    T = TernaryHomAlgebra(t, (LinearMap.diag([1]), LinearMap.diag([2])))
    assert core.is_multiplicative_ternary(T).verdict is Verdict.PRECONDITION
