import pytest

from higherfusion.errors import StructuralError
from higherfusion.poly import MPoly, UPoly
from higherfusion.symmetric import vandermonde
from higherfusion.torus import (
    LocalizedElem,
    SignedAction,
    TorusElem,
    act,
    canonicalize,
    functor_product,
    is_invariant,
    lattice_unit,
    localized_arith,
)


def laurent(n, terms):
    return MPoly(n, terms)


def test_canonicalize_examples():
    assert canonicalize(laurent(2, {(-1, 0): 1}), 2) == TorusElem.var(2, 1)
    assert canonicalize(laurent(3, {(1, 1, 1): 1}), 3) == 1
    a, b = MPoly.gens(2)
    assert canonicalize(a ** 2 + a * b, 2) == canonicalize(a ** 2 + 1, 2)


def test_canonicalize_idempotent():
    x = canonicalize(laurent(3, {(2, -1, 0): 3, (5, 5, 6): 1}), 3)
    assert canonicalize(x.poly, 3) == x
    assert x.poly.terms == {(3, 0, 1): 3, (0, 0, 1): 1}


def test_rank_one_rejected():
    with pytest.raises(StructuralError):
        canonicalize(MPoly.var(1, 0), 1)


def test_actions():
    t1 = TorusElem.var(2, 0)
    swap = SignedAction.from_cycle(2, (1, 2))
    assert act(swap, t1) == TorusElem.var(2, 1)
    signed = SignedAction.from_cycle(2, (1, 2), signed=True)
    x = t1 - TorusElem.var(2, 1)
    assert act(signed, x) == x
    cyc = SignedAction.from_cycle(3, (1, 2, 3))
    y = TorusElem.var(3, 0, 2) * TorusElem.var(3, 1)
    assert act(cyc, y) == TorusElem.var(3, 1, 2) * TorusElem.var(3, 2)


def test_group_action_composition():
    x = canonicalize(laurent(3, {(3, 1, 0): 1, (0, 2, 1): -2}), 3)
    s = SignedAction((1, 0, 2), signed=True)
    t = SignedAction((0, 2, 1), signed=True)
    assert act(s.compose(t), x) == act(s, act(t, x))
    assert act(s.inverse(), act(s, x)) == x


def test_invariance():
    e1 = TorusElem.from_poly(sum(MPoly.gens(3), MPoly.zero(3)))
    assert is_invariant(e1)
    assert is_invariant(TorusElem.from_poly(vandermonde(3)), signed=True)
    assert not is_invariant(TorusElem.var(2, 0))


def test_localized_examples():
    F = UPoly([1, 1])
    P = functor_product(2, F)
    a = LocalizedElem(TorusElem.var(2, 0), F, 1)
    b = LocalizedElem(TorusElem.var(2, 1), F, 1)
    s = localized_arith(a, b, "add")
    assert s == LocalizedElem(TorusElem.var(2, 0) + TorusElem.var(2, 1), F, 1)
    reduced = LocalizedElem(P * TorusElem.var(2, 0), F, 1)
    assert reduced.f_power == 0 and reduced.numerator == TorusElem.var(2, 0)
    # F(t) = t: P = t1*t2 = 1 in R(T)
    G = UPoly([0, 1])
    one = LocalizedElem(TorusElem.const(2, 1), G, 1)
    assert one.f_power == 0


def test_localized_mismatch():
    a = LocalizedElem(TorusElem.const(2, 1), UPoly([1, 1]))
    b = LocalizedElem(TorusElem.const(2, 1), UPoly([2, 1]))
    with pytest.raises(StructuralError):
        a + b


def test_lattice_unit_inverse():
    F = UPoly([1, 1])
    u = lattice_unit(F, 3, (1, -1, 0))
    v = lattice_unit(F, 3, (-1, 1, 0))
    assert u * v == LocalizedElem(TorusElem.const(3, 1), F)


def test_localized_equality_cross_multiplication():
    F = UPoly([1, 2])
    P = functor_product(2, F)
    x = TorusElem.var(2, 0)
    a = LocalizedElem(x, F, 0)
    b = LocalizedElem(x * P, F, 1, reduce=False)
    assert a == b
    with pytest.raises(TypeError):
        hash(a)
