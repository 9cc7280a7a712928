from fractions import Fraction

import pytest
import sympy

from higherfusion.errors import DomainError
from higherfusion.poly import MPoly, UPoly
from higherfusion.symmetric import (
    antisymmetrize,
    complete,
    divide_by_vandermonde,
    elementary,
    extended_a,
    from_elem_basis,
    is_antisymmetric,
    pieri_check,
    power_sum,
    schur,
    to_elem_basis,
    vandermonde,
)
from higherfusion.torus import SignedAction, act


def test_basic_bases():
    a, b = MPoly.gens(2)
    assert elementary(1, 2) == a + b
    assert complete(2, 2) == a ** 2 + a * b + b ** 2
    assert not complete(-1, 3)
    assert complete(0, 3) == 1
    assert power_sum(0, 4) == 4


def test_complete_against_generating_function():
    # coefficient of x^3 in prod 1/(1 - t_i x)
    x, *ts = sympy.symbols("x a b c")
    series = sympy.prod([sum((ti * x) ** j for j in range(4)) for ti in ts])
    want = sympy.expand(series).coeff(x, 3)
    got = complete(3, 3)
    syms = ts
    expr = sum(c * sympy.prod([s ** k for s, k in zip(syms, e)]) for e, c in got.terms.items())
    assert sympy.expand(expr - want) == 0


def test_vandermonde():
    a, b = MPoly.gens(2)
    assert vandermonde(2) == a - b
    t1, t2, t3 = MPoly.gens(3)
    assert vandermonde(3) == (t1 - t2) * (t1 - t3) * (t2 - t3)
    assert act(SignedAction((1, 0, 2), signed=True), vandermonde(3)) == vandermonde(3)


def test_schur_examples():
    assert schur((4,), 3) == complete(4, 3)
    a, b = MPoly.gens(2)
    assert schur((1, 1), 2) == a * b
    assert schur((2, 1), 3) == schur((2, 1), 3, method="jacobi_trudi")
    assert not schur((1, 1, 1), 2)


def test_extended_a_examples():
    n = 4
    for m in range(n - 1):
        assert not extended_a(UPoly.monomial(m), (), n)
    assert extended_a(UPoly.monomial(n - 1), (), n) == vandermonde(n)
    F = UPoly([2, -1, 0, 3])
    a, b = MPoly.gens(2)
    f = lambda x: 2 - x + 3 * x ** 3
    assert extended_a(F, (0,), 2) == f(a) - f(b)


def test_antisymmetrize_examples():
    a, b = MPoly.gens(2)
    assert antisymmetrize(a) == Fraction(1, 2) * (a - b)
    F = lambda x: 1 + x + x ** 3
    q0 = F(a) - F(b)
    assert antisymmetrize(F(b) - F(a), normalized=False) == -2 * q0
    assert not antisymmetrize(a + b)


def test_divide_by_vandermonde():
    n = 3
    assert divide_by_vandermonde(vandermonde(n)) == 1
    for m in range(4):
        assert divide_by_vandermonde(extended_a(UPoly.monomial(n - 1 + m), (), n)) == complete(m, n)
    a, b = MPoly.gens(2)
    assert divide_by_vandermonde(a ** 3 - b ** 3) == a ** 2 + a * b + b ** 2
    with pytest.raises(DomainError):
        divide_by_vandermonde(a)


def test_to_elem_basis_examples():
    for n in (2, 3, 4):
        c = to_elem_basis(power_sum(2, n), n)
        c1, c2 = MPoly.var(n, 0), MPoly.var(n, 1)
        assert c == c1 ** 2 - 2 * c2
        for k in range(1, n + 1):
            assert to_elem_basis(elementary(k, n), n) == MPoly.var(n, k - 1)
    c1, c2 = MPoly.gens(2)
    assert to_elem_basis(complete(2, 2), 2) == c1 ** 2 - c2
    with pytest.raises(DomainError):
        to_elem_basis(MPoly.var(2, 0), 2)


def test_newton_identity_p3():
    # p3 = e1^3 - 3 e1 e2 + 3 e3
    c1, c2, c3 = MPoly.gens(3)
    assert to_elem_basis(power_sum(3, 3), 3) == c1 ** 3 - 3 * c1 * c2 + 3 * c3


def test_from_elem_basis_round_trip():
    p = schur((3, 1), 3) * complete(2, 3) + power_sum(4, 3)
    assert from_elem_basis(to_elem_basis(p, 3), 3) == p


def test_pieri_examples():
    n = 5
    for k in range(n - 2):
        assert not extended_a(UPoly.monomial(k), (1,), n)
        assert pieri_check(UPoly.monomial(k), n)
    assert pieri_check(UPoly.monomial(n - 2), n)
    assert pieri_check(UPoly.monomial(n + 1), n)


def test_antisymmetric_check():
    assert is_antisymmetric(vandermonde(4))
    assert not is_antisymmetric(elementary(2, 4))
