"""Verlinde fusion rules of SU(n) at level k, computed combinatorially.

Littlewood-Richardson coefficients come from LR tableaux; fusion
coefficients from the Kac-Walton algorithm (affine Weyl reflections of the
rho-shifted weight).  None of this touches the Groebner machinery, so it
serves as an independent check on the quotient algebra.
"""

from dataclasses import dataclass, field
from math import comb

from . import linalg
from .groebner import buchberger, quotient_algebra
from .ideal import FunctorSpec, generators_elem_basis
from .symmetric import normalize_partition, schur, to_elem_basis

__all__ = [
    "FusionTable",
    "integrable_weights",
    "lr_coefficient",
    "lr_product",
    "kac_walton_fusion",
    "fusion_table",
    "quotient_fusion_table",
    "compare_with_quotient",
]


def _pad(lam, length):
    lam = tuple(lam)
    while len(lam) > length and lam[-1] == 0:
        lam = lam[:-1]
    return lam + (0,) * (length - len(lam))


def integrable_weights(n, k):
    """Partitions in the (n-1) x k box, padded to length n-1."""
    if n < 2 or k < 0:
        raise ValueError("need n >= 2 and k >= 0")
    out = []

    def rec(prefix, bound, left):
        if left == 0:
            out.append(tuple(prefix))
            return
        for x in range(bound, -1, -1):
            rec(prefix + [x], x, left - 1)

    rec([], k, n - 1)
    out.sort(key=lambda lam: (sum(lam), tuple(-x for x in lam)))
    assert len(out) == comb(n + k - 1, n - 1)
    return out


def lr_coefficient(lam, mu, nu):
    """Number of LR tableaux of shape nu/lam and content mu."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    nu = normalize_partition(nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if len(lam) > len(nu) or any(a > b for a, b in zip(lam, nu)):
        return 0
    if not mu:
        return 1
    lam = _pad(lam, len(nu))
    # cells in reading order: rows top to bottom, each row right to left
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam[r] - 1, -1)]
    filling = {}
    counts = [0] * (len(mu) + 1)

    def rec(pos):
        if pos == len(cells):
            return 1
        r, c = cells[pos]
        hi = filling.get((r, c + 1), len(mu))
        lo = filling.get((r - 1, c), 0) + 1
        # an entry v in row r needs v <= r + 1
        hi = min(hi, r + 1)
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += rec(pos + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return rec(0)


def _partitions(total, max_parts, max_part=None):
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def lr_product(lam, mu, max_rows=None):
    """``{nu: c^nu_{lam,mu}}`` over partitions with at most ``max_rows`` rows."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    size = sum(lam) + sum(mu)
    rows = size if max_rows is None else max_rows
    out = {}
    for nu in _partitions(size, rows):
        if len(nu) < max(len(lam), len(mu)):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def _affine_cartan(n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        a[i][(i + 1) % n] -= 1
        a[i][(i - 1) % n] -= 1
    return a


def _to_alcove(nu, n, k):
    """Reflect the rho-shifted weight of ``nu`` into the level-k alcove.

    Returns ``(sign, weight)`` or ``None`` when the weight lies on a wall.
    """
    nu = _pad(nu, n)
    labels = [nu[i] - nu[i + 1] + 1 for i in range(n - 1)]
    b = [k - (nu[0] - nu[-1]) + 1] + labels  # index 0 is the affine node
    cartan = _affine_cartan(n)
    sign = 1
    while True:
        if any(x == 0 for x in b):
            return None
        neg = next((i for i, x in enumerate(b) if x < 0), None)
        if neg is None:
            break
        bi = b[neg]
        b = [b[j] - bi * cartan[neg][j] for j in range(n)]
        sign = -sign
    dynkin = [x - 1 for x in b[1:]]
    weight = tuple(sum(dynkin[i:]) for i in range(n - 1))
    return sign, weight


def kac_walton_fusion(n, k, lam, mu):
    """Fusion product ``lam x mu`` at level k as ``{nu: N}``."""
    lam = _pad(normalize_partition(lam), n - 1)
    mu = _pad(normalize_partition(mu), n - 1)
    for w in (lam, mu):
        if len(w) != n - 1 or w and w[0] > k:
            raise ValueError(f"{w} is not integrable at level {k}")
    out = {}
    for nu, c in lr_product(lam, mu, n).items():
        hit = _to_alcove(nu, n, k)
        if hit is None:
            continue
        sign, weight = hit
        out[weight] = out.get(weight, 0) + sign * c
    return {w: c for w, c in sorted(out.items()) if c}


@dataclass
class FusionTable:
    rank: int
    level: int
    basis: list
    coefficients: dict = field(default_factory=dict)

    def entry(self, lam, mu, nu):
        return self.coefficients.get((tuple(lam), tuple(mu), tuple(nu)), 0)

    def to_json(self):
        pos = {w: i for i, w in enumerate(self.basis)}
        rows = sorted(self.coefficients.items(),
                      key=lambda kv: (pos[kv[0][0]], pos[kv[0][1]], pos[kv[0][2]]))
        return {
            "rank": self.rank,
            "level": self.level,
            "basis": [list(w) for w in self.basis],
            "coefficients": [[list(a), list(b), list(c), _num(v)] for (a, b, c), v in rows],
        }


def _num(v):
    from .poly import format_rational
    return v if isinstance(v, int) else format_rational(v)


def fusion_table(n, k):
    basis = integrable_weights(n, k)
    coeffs = {}
    for lam in basis:
        for mu in basis:
            for nu, c in kac_walton_fusion(n, k, lam, mu).items():
                coeffs[(lam, mu, nu)] = c
    return FusionTable(n, k, basis, coeffs)


def _schur_image(lam, n, algebra):
    s = schur(_pad(lam, n), n)
    return algebra.coords(to_elem_basis(s, n, check=False).drop_last_var(1))


def quotient_fusion_table(n, k, algebra=None):
    """Structure constants of the classical quotient in the Schur-image basis.

    Returns ``(table, basis_ok)``; ``basis_ok`` is False when the Schur
    images fail to form a basis (then the table is empty).
    """
    if algebra is None:
        spec = FunctorSpec.classical(n, k)
        algebra = quotient_algebra(buchberger(generators_elem_basis(spec)))
    weights = integrable_weights(n, k)
    images = [_schur_image(w, n, algebra) for w in weights]
    table = FusionTable(n, k, weights)
    if algebra.dimension != len(weights):
        return table, False
    S = linalg.transpose(images)
    if linalg.rank(S) != len(weights):
        return table, False
    S_inv = linalg.inverse(S)
    for a, lam in enumerate(weights):
        for b, mu in enumerate(weights):
            prod = algebra.mul(images[a], images[b])
            for c, x in enumerate(linalg.matvec(S_inv, prod)):
                if x:
                    table.coefficients[(lam, mu, weights[c])] = x
    return table, True


def compare_with_quotient(n, k):
    """Compare the classical quotient algebra with the Kac-Walton fusion table."""
    spec = FunctorSpec.classical(n, k)
    algebra = quotient_algebra(buchberger(generators_elem_basis(spec)))
    expected_dim = comb(n + k - 1, n - 1)
    oracle = fusion_table(n, k)
    quotient, basis_ok = quotient_fusion_table(n, k, algebra)
    diffs = []
    if basis_ok:
        keys = set(oracle.coefficients) | set(quotient.coefficients)
        for key in sorted(keys):
            a = quotient.coefficients.get(key, 0)
            b = oracle.coefficients.get(key, 0)
            if a != b:
                diffs.append({"lambda": list(key[0]), "mu": list(key[1]), "nu": list(key[2]),
                              "quotient": _num(a), "oracle": b})
    match = basis_ok and not diffs and algebra.dimension == expected_dim
    return {
        "rank": n,
        "level": k,
        "dimension": algebra.dimension,
        "expected_dimension": expected_dim,
        "schur_basis": basis_ok,
        "match": match,
        "differences": diffs,
        "table": oracle.to_json(),
    }
