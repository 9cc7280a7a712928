from fractions import Fraction

import pytest
import sympy

from higherfusion.errors import NotDivisible, StructuralError
from higherfusion.poly import (
    MPoly,
    UPoly,
    format_rational,
    grevlex_key,
    mpoly_arith,
    mpoly_exact_div,
    rational,
    upoly_antiderivative_shifted,
    upoly_eval_subst,
)

t1, t2, t3 = MPoly.gens(3)


def to_sympy(p, names):
    syms = sympy.symbols(names)
    return sympy.expand(sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
                            * sympy.prod([s ** k for s, k in zip(syms, e)])
                            for e, c in p.terms.items()))


def test_rational_normalization():
    assert rational(Fraction(4, 2)) == 2 and isinstance(rational(Fraction(4, 2)), int)
    assert rational("3/6") == Fraction(1, 2)
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(0) == "0"
    with pytest.raises(TypeError):
        rational(True)


def test_difference_of_squares():
    a, b = MPoly.gens(2)
    assert mpoly_arith(a + b, a - b, "mul") == a ** 2 - b ** 2


def test_zero_identity():
    p = t1 * t2 + 3
    assert mpoly_arith(p, MPoly.zero(3), "add") == p


def test_square_of_linear_form():
    sq = (t1 + t2 + t3) ** 2
    assert len(sq) == 6
    assert sq.coefficient((1, 1, 0)) == 2
    assert to_sympy(sq, "x y z") == sympy.expand(sympy.sympify("(x+y+z)**2"))


def test_mismatched_rings():
    with pytest.raises(StructuralError):
        mpoly_arith(MPoly.var(2, 0), t1, "add")


def test_exact_division_examples():
    a, b = MPoly.gens(2)
    assert mpoly_exact_div(a ** 2 - b ** 2, a - b) == a + b
    delta = (t1 - t2) * (t1 - t3) * (t2 - t3)
    assert mpoly_exact_div(delta, t1 - t2) == (t1 - t3) * (t2 - t3)
    with pytest.raises(NotDivisible) as info:
        mpoly_exact_div(a + b, a - b)
    assert info.value.remainder


def test_grevlex_order():
    # x1 > x2 > x3 in degree 1; x1*x3 < x2^2 in grevlex
    assert grevlex_key((1, 0, 0)) > grevlex_key((0, 1, 0))
    assert grevlex_key((0, 2, 0)) > grevlex_key((1, 0, 1))
    assert grevlex_key((0, 0, 2)) > grevlex_key((1, 0, 0))


def test_eval_subst():
    assert upoly_eval_subst(UPoly([0, 0, 1]), t3) == t3 ** 2
    a = MPoly.var(2, 0)
    assert upoly_eval_subst(UPoly([1, 1]), a) == a + 1
    F = UPoly.monomial(4, (-1) ** 4)
    assert upoly_eval_subst(F, MPoly.var(2, 1)) == MPoly.var(2, 1) ** 4


def test_antiderivative_examples():
    assert upoly_antiderivative_shifted(UPoly([1, 2, 1])) == UPoly([0, 2, Fraction(1, 2)])
    n, k = 3, 2
    G = upoly_antiderivative_shifted(UPoly.monomial(n + k, (-1) ** (n + k)))
    assert G == UPoly.monomial(n + k, Fraction((-1) ** (n + k), n + k))
    assert not upoly_antiderivative_shifted(UPoly([7]))


def test_text_round_trip():
    p = t1 ** 2 * t3 - Fraction(3, 4) * t2 + 5
    text = p.to_text()
    assert text == "1 * t1^2*t2^0*t3^1 + -3/4 * t1^0*t2^1*t3^0 + 5 * t1^0*t2^0*t3^0"
    assert MPoly.from_text(text, 3) == p
    assert MPoly.zero(3).to_text() == "0"


def test_diff_and_permute():
    p = t1 ** 3 * t2 + t3
    assert p.diff(0) == 3 * t1 ** 2 * t2
    assert p.permute((1, 2, 0)) == t2 ** 3 * t3 + t1


def test_primitive_content():
    p = Fraction(2, 3) * t1 - Fraction(4, 9) * t2
    q = p.primitive()
    assert q == 3 * t1 - 2 * t2
