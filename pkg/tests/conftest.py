import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from higherfusion.ideal import FunctorSpec
from higherfusion.poly import MPoly, UPoly

coefficients = st.one_of(
    st.integers(-5, 5),
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
)


@st.composite
def mpolys(draw, nvars=3, max_terms=4, max_exp=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(0, max_exp)) for _ in range(nvars))
        terms[e] = terms.get(e, 0) + draw(coefficients)
    return MPoly(nvars, terms)


@st.composite
def upolys(draw, max_degree=6, min_degree=1):
    d = draw(st.integers(min_degree, max_degree))
    coeffs = [draw(coefficients) for _ in range(d)]
    lead = draw(coefficients.filter(lambda c: c != 0))
    return UPoly(coeffs + [lead])


def random_spec(rng, n, d):
    coeffs = [Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2, 3))) for _ in range(d)]
    coeffs.append(rng.choice((-3, -2, -1, 1, 2, 3)))
    return FunctorSpec(n, UPoly(coeffs))


def spec_grid():
    """Fixed grid of functor specs: classical ones plus seeded random F."""
    rng = random.Random(20240611)
    grid = [FunctorSpec.classical(n, k) for n in (2, 3, 4) for k in (0, 2)]
    grid += [FunctorSpec(2, UPoly([1, 1])), FunctorSpec(2, UPoly([0, 1])),
             FunctorSpec(3, UPoly([1, 1])), FunctorSpec(3, UPoly([1, 2, 1]))]
    for n in (2, 3, 4, 5):
        for d in (1, 3, 6):
            grid.append(random_spec(rng, n, d))
    return grid


@pytest.fixture(scope="session")
def grid():
    return spec_grid()
