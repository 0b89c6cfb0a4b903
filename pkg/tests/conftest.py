import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from homalg import catalog
from homalg.core import Element, HomAlgebra, LinearMap


def binary_entries():
    return [e for e in catalog.entries() if e.kind == "binary"]


@pytest.fixture(scope="session")
def entry():
    return catalog.get


@pytest.fixture(scope="session")
def sl2():
    return catalog.get("sl2").payload


@pytest.fixture(scope="session")
def assoc2():
    return catalog.get("assoc2").payload


@pytest.fixture(scope="session")
def m4():
    return catalog.get("m4").payload


@pytest.fixture(scope="session")
def ra_np():
    return catalog.get("ra_np").payload


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def elements(dim: int):
    return st.lists(rationals, min_size=dim, max_size=dim).map(lambda xs: Element(tuple(xs)))


def random_algebra(dim: int, seed: int, twisted: bool = True) -> HomAlgebra:
    """An unconstrained random algebra with an arbitrary (usually non-multiplicative) twist."""
    rng = random.Random(seed)
    c = [[[Fraction(rng.choice((0, 0, 1, -1, 2)), rng.choice((1, 2))) for _ in range(dim)]
          for _ in range(dim)] for _ in range(dim)]
    twist = None
    if twisted:
        twist = LinearMap.from_rows([[rng.choice((0, 0, 1, -1)) for _ in range(dim)] for _ in range(dim)])
    return HomAlgebra(c, twist)
