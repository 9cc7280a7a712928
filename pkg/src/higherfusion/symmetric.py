"""Symmetric and antisymmetric polynomials in n variables.

Partitions are plain tuples of nonnegative integers in weakly decreasing
order.  Polynomials in the elementary basis are MPolys in the variables
``c1..cn`` where ``ck`` stands for the k-th elementary symmetric polynomial.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import factorial

from .errors import DomainError, InvariantViolation, NotDivisible
from .poly import MPoly, mpoly_exact_div
from .torus import is_invariant, permutation_sign

__all__ = [
    "normalize_partition",
    "elementary",
    "complete",
    "power_sum",
    "vandermonde",
    "alternant",
    "schur",
    "extended_a",
    "antisymmetrize",
    "divide_by_vandermonde",
    "to_elem_basis",
    "from_elem_basis",
    "pieri_check",
    "poly_det",
]


def normalize_partition(parts, n=None):
    """Validate ``parts`` and pad with zeros (or strip trailing zeros) to length ``n``.

    Returns ``None`` when the partition has more than ``n`` nonzero parts.
    """
    parts = [int(x) for x in parts]
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts.pop()
    if n is None:
        return tuple(parts)
    if len(parts) > n:
        return None
    return tuple(parts) + (0,) * (n - len(parts))


@lru_cache(maxsize=None)
def elementary(k, n):
    if k < 0 or k > n:
        return MPoly.zero(n)
    terms = {}
    for idx in combinations(range(n), k):
        e = [0] * n
        for i in idx:
            e[i] = 1
        terms[tuple(e)] = 1
    return MPoly(n, terms, _trusted=True)


@lru_cache(maxsize=None)
def complete(k, n):
    """Complete homogeneous symmetric polynomial; zero for ``k < 0``."""
    if k < 0:
        return MPoly.zero(n)
    terms = {}
    for idx in combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in idx:
            e[i] += 1
        terms[tuple(e)] = 1
    return MPoly(n, terms, _trusted=True)


@lru_cache(maxsize=None)
def power_sum(m, n):
    if m < 0:
        raise ValueError("power sums need m >= 0")
    if m == 0:
        return MPoly.const(n, n)
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = m
        terms[tuple(e)] = 1
    return MPoly(n, terms, _trusted=True)


def alternant(exps, n=None):
    """``det(t_j ** exps[i])``, expanded by the Leibniz formula."""
    exps = tuple(exps)
    n = len(exps) if n is None else n
    if len(set(exps)) < len(exps):
        return MPoly.zero(n)
    terms = {}
    for perm in permutations(range(n)):
        e = [0] * n
        for row, col in enumerate(perm):
            e[col] = exps[row]
        terms[tuple(e)] = permutation_sign(perm)
    return MPoly(n, terms, _trusted=True)


@lru_cache(maxsize=None)
def vandermonde(n):
    """``det(t_i ** (n - j)) = prod_{i<j} (t_i - t_j)``."""
    return alternant(tuple(range(n - 1, -1, -1)), n)


def poly_det(matrix):
    """Determinant of a square matrix of MPolys by memoized Laplace expansion."""
    size = len(matrix)
    if size == 0:
        raise ValueError("empty matrix")
    nvars = matrix[0][0].nvars
    memo = {}

    def minor(row, cols):
        if row == size:
            return MPoly.const(nvars, 1)
        if cols in memo:
            return memo[cols]
        total = MPoly.zero(nvars)
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if not entry:
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if not sub:
                continue
            term = entry * sub
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(size)))


def schur(lam, n, method="bialternant"):
    """Schur polynomial ``s_lam(t1..tn)``; zero if ``lam`` has more than ``n`` parts."""
    parts = normalize_partition(lam)
    if len(parts) > n:
        return MPoly.zero(n)
    if method == "bialternant":
        return _schur_bialternant(parts, n)
    if method == "jacobi_trudi":
        return _schur_jacobi_trudi(parts, n)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def _schur_bialternant(parts, n):
    lam = parts + (0,) * (n - len(parts))
    num = alternant(tuple(lam[i] + n - 1 - i for i in range(n)), n)
    return mpoly_exact_div(num, vandermonde(n))


def _schur_jacobi_trudi(parts, n):
    ell = len(parts)
    if ell == 0:
        return MPoly.const(n, 1)
    matrix = [[complete(parts[i] - i + j, n) for j in range(ell)] for i in range(ell)]
    return poly_det(matrix)


def extended_a(p, tail, n):
    """Determinant with first row ``p(t_j)`` and row ``i >= 2`` equal to ``t_j ** (lam_i + n - i)``.

    ``tail`` is ``(lam_2, ..., lam_n)``.  The determinant is linear in ``p``,
    so it is assembled from monomial alternants.
    """
    tail = tuple(tail) + (0,) * (n - 1 - len(tuple(tail)))
    if len(tail) != n - 1:
        raise ValueError("tail must have n - 1 entries")
    rows = tuple(tail[i] + n - 2 - i for i in range(n - 1))
    out = MPoly.zero(n)
    for m, mu in enumerate(p.coeffs):
        if mu:
            out = out + alternant((m,) + rows, n).scale(mu)
    return out


def antisymmetrize(p, normalized=True):
    """Signed sum of ``sign(s) * s(p)`` over the symmetric group, divided by n! if ``normalized``."""
    n = p.nvars
    out = MPoly.zero(n)
    for perm in permutations(range(n)):
        q = p.permute(perm)
        out = out - q if permutation_sign(perm) < 0 else out + q
    if normalized:
        out = out.scale(Fraction(1, factorial(n)))
    return out


def is_antisymmetric(p):
    return is_invariant(p, signed=True)


def divide_by_vandermonde(p):
    """The symmetric polynomial ``p / Delta`` for antisymmetric ``p``."""
    if not is_antisymmetric(p):
        raise DomainError("polynomial is not antisymmetric")
    try:
        return mpoly_exact_div(p, vandermonde(p.nvars))
    except NotDivisible as exc:
        raise InvariantViolation("antisymmetric polynomial not divisible by the Vandermonde") from exc


class _ElemProducts:
    """Cache of products e_1^b_1 * ... * e_n^b_n."""

    def __init__(self, n):
        self.n = n
        self.cache = {(0,) * n: MPoly.const(n, 1)}

    def get(self, b):
        b = tuple(b)
        hit = self.cache.get(b)
        if hit is not None:
            return hit
        k = max(i for i, x in enumerate(b) if x)
        smaller = list(b)
        smaller[k] -= 1
        out = self.get(smaller) * elementary(k + 1, self.n)
        self.cache[b] = out
        return out


_ELEM_CACHE = {}


def to_elem_basis(p, n=None, check=True):
    """Rewrite a symmetric polynomial in the elementary symmetric polynomials.

    Repeatedly removes the lex-leading monomial t^a (a is a partition) by
    subtracting the matching product of elementary polynomials.
    """
    n = p.nvars if n is None else n
    if check and not is_invariant(p):
        raise DomainError("polynomial is not symmetric")
    products = _ELEM_CACHE.setdefault(n, _ElemProducts(n))
    out = {}
    rest = p
    while rest:
        a = max(rest.terms)
        c = rest.terms[a]
        b = tuple(a[i] - (a[i + 1] if i + 1 < n else 0) for i in range(n))
        if any(x < 0 for x in b):
            raise InvariantViolation("leading exponent is not a partition")
        out[b] = c
        rest = rest - products.get(b).scale(c)
    return MPoly(n, out)


def from_elem_basis(q, n=None):
    """Substitute ``ck -> elementary(k, n)``; ``q`` may omit trailing variables."""
    n = q.nvars if n is None else n
    images = [elementary(k + 1, n) for k in range(q.nvars)]
    return q.substitute(images, nvars=n)


def pieri_check(p, n):
    """``a_(p,1,0..) == a_(p,0..) * e1 - a_(q,0..)`` with ``q(t) = t * p(t)``."""
    lhs = extended_a(p, (1,), n)
    rhs = extended_a(p, (), n) * elementary(1, n) - extended_a(p.shift(1), (), n)
    return lhs == rhs

