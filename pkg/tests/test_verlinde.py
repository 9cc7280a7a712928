import cmath
import math
from itertools import permutations

import pytest

from higherfusion.symmetric import normalize_partition, schur
from higherfusion.torus import permutation_sign
from higherfusion.verlinde import (
    compare_with_quotient,
    fusion_table,
    integrable_weights,
    kac_walton_fusion,
    lr_coefficient,
    lr_product,
)


def test_integrable_weights():
    assert integrable_weights(2, 2) == [(0,), (1,), (2,)]
    assert sorted(integrable_weights(3, 1)) == [(0, 0), (1, 0), (1, 1)]
    assert len(integrable_weights(4, 2)) == 10


def test_lr_examples():
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (), (2, 1)) == 1
    assert lr_coefficient((2, 1), (), (3,)) == 0
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2


def schur_decompose(p, n):
    """Coefficients of p in the Schur basis by peeling off lex-leading terms."""
    out = {}
    while p:
        lead = max(p.terms)
        c = p.terms[lead]
        lam = normalize_partition(lead)
        out[lam] = c
        p = p - schur(lam, n).scale(c)
    return out


@pytest.mark.parametrize("lam,mu", [((1,), (1,)), ((2, 1), (1,)), ((2, 1), (2, 1)),
                                    ((2,), (2, 2)), ((3, 1), (2, 1))])
def test_lr_against_schur_products(lam, mu):
    n = len(lam) + len(mu)
    prod = schur(lam, n) * schur(mu, n)
    assert schur_decompose(prod, n) == lr_product(lam, mu, n)


def test_kac_walton_examples():
    assert kac_walton_fusion(2, 1, (1,), (1,)) == {(0,): 1}
    assert kac_walton_fusion(2, 2, (1,), (1,)) == {(0,): 1, (2,): 1}
    for lam in integrable_weights(3, 2):
        assert kac_walton_fusion(3, 2, lam, (0, 0)) == {lam: 1}


@pytest.mark.parametrize("k", range(6))
def test_su2_closed_form(k):
    for a in range(k + 1):
        for b in range(k + 1):
            want = {(c,): 1 for c in range(abs(a - b), min(a + b, 2 * k - a - b) + 1, 2)}
            assert kac_walton_fusion(2, k, (a,), (b,)) == want


def verlinde_numeric(n, k):
    """Fusion rules from the Kac-Peterson S-matrix, in floating point."""
    K = n + k
    weights = integrable_weights(n, k)
    rho = list(range(n - 1, -1, -1))

    def shifted(lam):
        v = [x + r for x, r in zip(list(lam) + [0], rho)]
        mean = sum(v) / n
        return [x - mean for x in v]

    perms = list(permutations(range(n)))
    signs = [permutation_sign(p) for p in perms]

    def s_entry(a, b):
        va, vb = shifted(a), shifted(b)
        total = 0
        for p, s in zip(perms, signs):
            dot = sum(va[p[i]] * vb[i] for i in range(n))
            total += s * cmath.exp(-2j * math.pi * dot / K)
        return total

    S = [[s_entry(a, b) for b in weights] for a in weights]
    norm = math.sqrt(sum(abs(x) ** 2 for x in S[0]))
    S = [[x / norm for x in row] for row in S]
    N = {}
    m = len(weights)
    for i in range(m):
        for j in range(m):
            for l in range(m):
                v = sum(S[i][s] * S[j][s] * S[l][s].conjugate() / S[0][s] for s in range(m))
                r = round(v.real)
                assert abs(v - r) < 1e-8
                if r:
                    N[(weights[i], weights[j], weights[l])] = r
    return N


@pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (3, 3), (4, 1), (4, 2)])
def test_kac_walton_against_verlinde_formula(n, k):
    assert fusion_table(n, k).coefficients == verlinde_numeric(n, k)


def test_table_symmetry_and_unit():
    table = fusion_table(3, 3)
    zero = (0, 0)
    for (a, b, c), v in table.coefficients.items():
        assert v > 0
        assert table.entry(b, a, c) == v
    for lam in table.basis:
        assert table.entry(lam, zero, lam) == 1


def test_large_level_is_lr():
    lam, mu = (2, 1), (1, 1)
    k = sum(lam) + sum(mu)
    fused = kac_walton_fusion(3, k, lam, mu)
    plain = {}
    for nu, c in lr_product(lam, mu, 3).items():
        nu = tuple(x - nu[-1] for x in nu[:2]) if len(nu) == 3 else tuple(nu) + (0,) * (2 - len(nu))
        plain[nu] = plain.get(nu, 0) + c
    assert fused == plain


@pytest.mark.parametrize("n,k,dim", [(2, 0, 1), (2, 2, 3), (2, 4, 5), (3, 1, 3), (3, 2, 6), (4, 1, 4)])
def test_compare_with_quotient(n, k, dim):
    report = compare_with_quotient(n, k)
    assert report["match"], report["differences"]
    assert report["dimension"] == dim


def test_json_order_stable():
    doc = fusion_table(2, 2).to_json()
    assert doc["basis"] == [[0], [1], [2]]
    assert doc["coefficients"][0] == [[0], [0], [0], 1]
