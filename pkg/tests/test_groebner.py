import random
from fractions import Fraction

import pytest
import sympy

from higherfusion import linalg
from higherfusion.errors import DimensionError
from higherfusion.groebner import (
    GroebnerBasis,
    buchberger,
    hilbert_function_affine,
    ideal_quotient,
    is_regular_sequence,
    localize_artinian,
    normal_form,
    quotient_algebra,
    saturation,
)
from higherfusion.ideal import FunctorSpec, generators_elem_basis
from higherfusion.poly import MPoly


def sympy_gb(polys, nvars):
    syms = sympy.symbols(f"x1:{nvars + 1}")
    exprs = [sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
                 * sympy.prod([s ** k for s, k in zip(syms, e)]) for e, c in p.terms.items())
             for p in polys]
    gb = sympy.groebner(exprs, *syms, order="grevlex")
    out = set()
    for g in gb.exprs:
        poly = sympy.Poly(g, *syms)
        lc = poly.coeffs(order="grevlex")[0]
        terms = {m: Fraction(int(c.p), int(c.q)) / Fraction(int(lc.p), int(lc.q))
                 for m, c in zip(poly.monoms(), poly.coeffs())}
        out.add(MPoly(nvars, terms))
    return out


def test_examples():
    c = MPoly.var(1, 0)
    gb = buchberger([2 * c ** 2 - 2])
    assert gb.generators == [c ** 2 - 1]
    x, y = MPoly.gens(2)
    assert set(buchberger([x - 1, y - x]).generators) == {x - 1, y - 1}
    A = quotient_algebra(gb)
    assert A.dimension == 2
    assert normal_form(c ** 2, gb) == 1


def test_against_sympy():
    rng = random.Random(11)
    for trial in range(25):
        nvars = rng.choice((2, 3))
        polys = []
        for _ in range(rng.randint(2, 3)):
            terms = {}
            for _ in range(rng.randint(2, 4)):
                e = tuple(rng.randint(0, 3) for _ in range(nvars))
                terms[e] = rng.randint(-4, 4)
            p = MPoly(nvars, terms)
            if p:
                polys.append(p)
        if not polys:
            continue
        ours = buchberger(polys, nvars)
        assert set(ours.generators) == sympy_gb(polys, nvars), trial


def test_normal_form_properties():
    x, y, z = MPoly.gens(3)
    gb = buchberger([x ** 2 - y * z, y ** 2 - x * z + 1, z ** 3 - x])
    for g in gb.generators:
        assert not normal_form(g, gb)
    p = x ** 3 * y + z ** 4
    q = y ** 5 - 3 * x
    assert normal_form(p + q, gb) == normal_form(p, gb) + normal_form(q, gb)
    assert normal_form(normal_form(p, gb), gb) == normal_form(p, gb)


@pytest.mark.parametrize("n,k,dim", [(2, 0, 1), (2, 1, 2), (2, 3, 4), (3, 1, 3), (3, 2, 6), (4, 1, 4)])
def test_classical_dimensions(n, k, dim):
    gb = buchberger(generators_elem_basis(FunctorSpec.classical(n, k)))
    A = quotient_algebra(gb)
    assert A.dimension == dim
    assert A.commute_check()


def test_unit_and_infinite():
    x, y = MPoly.gens(2)
    assert quotient_algebra(buchberger([x + 1, x])).dimension == 0
    with pytest.raises(DimensionError) as info:
        quotient_algebra(buchberger([x ** 2]))
    assert info.value.witness == 1


def test_ideal_quotient_examples():
    x, y = MPoly.gens(2)
    assert ideal_quotient(buchberger([x ** 2]), x) == buchberger([x])
    assert ideal_quotient(buchberger([x * y]), y) == buchberger([x])
    assert ideal_quotient(buchberger([x * y]), x * y).is_unit()
    assert ideal_quotient(GroebnerBasis(2, []), x).is_zero()


def test_saturation_examples():
    x, y = MPoly.gens(2)
    I = buchberger([x ** 2 * y])
    assert saturation(I, x) == buchberger([y])
    assert saturation(I, x, method="iterate") == buchberger([y])
    J = buchberger([x ** 3 * (y - 1), x * y ** 2])
    assert saturation(J, x) == saturation(J, x, method="iterate")


def test_regular_sequence():
    x, y, z = MPoly.gens(3)
    ok, steps, proper = is_regular_sequence([x, y, z])
    assert ok and proper
    ok, steps, _ = is_regular_sequence([x * y, x * z])
    assert not ok and not steps[1]["quotient_equal"]


def test_localize_examples():
    c = MPoly.var(1, 0)
    A = quotient_algebra(buchberger([c ** 2]))
    assert localize_artinian(A, c).dimension == 0
    loc = localize_artinian(A, c + 1)
    assert loc.dimension == 2 and loc.kernel == []
    # SU(2)_1 with u = F(t1)F(t2) = (t1 t2)^3 = 1
    A = quotient_algebra(buchberger(generators_elem_basis(FunctorSpec.classical(2, 1))))
    assert localize_artinian(A, MPoly.const(1, 1)).dimension == 2


def test_localize_splits_off_nilpotent_part():
    x = MPoly.var(1, 0)
    # Q[x]/(x^2 (x - 1)) localized at x keeps only the x = 1 factor
    A = quotient_algebra(buchberger([x ** 2 * (x - 1)]))
    loc = localize_artinian(A, x)
    assert loc.dimension == 1
    Mu = loc.algebra.element_matrix(loc.coords(x))
    assert linalg.determinant(Mu) != 0
    assert loc.coords(x) == loc.coords(MPoly.const(1, 1))


def test_structure_constants_associative():
    A = quotient_algebra(buchberger(generators_elem_basis(FunctorSpec.classical(3, 2))))
    units = [[1 if i == j else 0 for i in range(A.dimension)] for j in range(A.dimension)]
    for a in units:
        for b in units:
            assert A.mul(a, b) == A.mul(b, a)
            for c in units[:3]:
                assert A.mul(A.mul(a, b), c) == A.mul(a, A.mul(b, c))


def test_hilbert_function():
    x, y = MPoly.gens(2)
    gb = buchberger([x ** 2, y ** 3])
    assert [hilbert_function_affine(gb, d) for d in range(5)] == [1, 3, 5, 6, 6]


def test_json_shape():
    gb = buchberger(generators_elem_basis(FunctorSpec.classical(3, 1)))
    doc = quotient_algebra(gb).to_json()
    assert doc["dimension"] == 3
    assert doc["variables"] == ["c1", "c2"]
    assert all(isinstance(x, str) for m in doc["mul_matrices"] for row in m for x in row)
