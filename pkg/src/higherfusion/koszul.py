"""Regular-sequence checks and truncated Koszul cohomology for the sequence x_F.

Everything happens in S = Q[t1..t_{n-1}] after eliminating
t_n = (t1*...*t_{n-1})^-1.  The last entry F(t_n) - F(t_{n-1}) is cleared
by multiplying with (t1*...*t_{n-1})^d, d = deg F.  Its constant term is
mu_d != 0, so t1*...*t_{n-1} is already a unit modulo the sequence.

The Koszul complex K^p = wedge^p S^l (l = n - 1) with d(y) = x ∧ y is
filtered by total degree: e_I carries weight w(I) = sum of deg f_j over
j in I, and F_D K^p is spanned by m e_I with deg m <= D + w(I).  Each F_D
is a finite complex of Q-vector spaces whose cohomology is computed from
exact ranks.
"""

import warnings
from itertools import combinations, combinations_with_replacement, permutations
from math import factorial

from . import linalg
from .errors import BoundaryWarning
from .groebner import (
    buchberger,
    hilbert_function_affine,
    is_regular_sequence,
    localize_artinian,
    quotient_algebra,
)
from .ideal import generators_elem_basis
from .poly import MPoly, upoly_eval_subst
from .symmetric import to_elem_basis
from .torus import permutation_sign

__all__ = [
    "KoszulComplex",
    "regseq1_sequence",
    "regseq1_check",
    "regseq2_sequence",
    "regseq2_check",
    "truncated_koszul_cohomology",
    "antisymmetric_dimension_check",
    "symmetric_side_dimension",
    "koszul_report",
]


def _product(gens):
    out = MPoly.const(gens[0].nvars, 1)
    for g in gens:
        out = out * g
    return out


def regseq1_sequence(n, m):
    """(t2^m - t1^m, ..., t_{n-1}^m - t_{n-2}^m, -t1^m*...*t_{n-2}^m*t_{n-1}^(2m))."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    t = MPoly.gens(n - 1)
    seq = [t[i + 1] ** m - t[i] ** m for i in range(n - 2)]
    last = t[n - 2] ** (2 * m)
    for i in range(n - 2):
        last = last * t[i] ** m
    seq.append(-last)
    return seq


def regseq2_sequence(spec):
    """F(t_{i+1}) - F(t_i) for i < n - 1, then the cleared last difference."""
    n = spec.rank
    F = spec.F
    d = F.degree()
    t = MPoly.gens(n - 1)
    u = _product(t)
    seq = [upoly_eval_subst(F, t[i + 1]) - upoly_eval_subst(F, t[i]) for i in range(n - 2)]
    # u^d F(1/u) = sum_i mu_i u^(d-i)
    cleared = MPoly.zero(n - 1)
    for i, mu in enumerate(F.coeffs):
        if mu:
            cleared = cleared + (u ** (d - i)).scale(mu)
    seq.append(cleared - u ** d * upoly_eval_subst(F, t[n - 2]))
    return seq


def _report(name, seq, overall, steps, proper):
    return {
        "check": name,
        "sequence": [f.to_text() for f in seq],
        "steps": steps,
        "proper": proper,
        "pass": overall,
    }


def regseq1_check(n, m):
    seq = regseq1_sequence(n, m)
    overall, steps, proper = is_regular_sequence(seq, n - 1)
    return dict(_report("regseq1", seq, overall, steps, proper), n=n, m=m)


def regseq2_check(spec):
    """Regularity in the Laurent ring, tested by saturating with t1*...*t_{n-1}."""
    seq = regseq2_sequence(spec)
    u = _product(MPoly.gens(spec.rank - 1))
    overall, steps, proper = is_regular_sequence(seq, spec.rank - 1, saturate_by=u)
    return dict(_report("regseq2", seq, overall, steps, proper), spec=spec.label)


class KoszulComplex:
    """Filtered Koszul complex of a polynomial sequence."""

    def __init__(self, seq):
        self.seq = list(seq)
        self.length = len(self.seq)
        self.nvars = self.seq[0].nvars
        self.degrees = [f.total_degree() for f in self.seq]
        self.subsets = [list(combinations(range(self.length), p)) for p in range(self.length + 1)]

    def weight(self, subset):
        return sum(self.degrees[j] for j in subset)

    @property
    def total_weight(self):
        return sum(self.degrees)

    def _monomials(self, bound):
        out = []
        for deg in range(bound + 1):
            for idx in combinations_with_replacement(range(self.nvars), deg):
                e = [0] * self.nvars
                for i in idx:
                    e[i] += 1
                out.append(tuple(e))
        return out

    def basis(self, p, level):
        """Basis of F_level K^p as a list of (subset, exponent) pairs."""
        out = []
        for subset in self.subsets[p]:
            bound = level + self.weight(subset)
            if bound >= 0:
                out.extend((subset, e) for e in self._monomials(bound))
        return out

    def differential_columns(self, p, level):
        """Images of the basis of F_level K^p under d, as sparse dicts keyed by target index."""
        target = {b: i for i, b in enumerate(self.basis(p + 1, level))}
        cols = []
        for subset, e in self.basis(p, level):
            col = {}
            for j in range(self.length):
                if j in subset:
                    continue
                sign = -1 if sum(1 for i in subset if i < j) % 2 else 1
                new = tuple(sorted(subset + (j,)))
                for f, c in self.seq[j].terms.items():
                    key = target[(new, tuple(a + b for a, b in zip(e, f)))]
                    v = col.get(key, 0) + sign * c
                    if v:
                        col[key] = v
                    else:
                        col.pop(key, None)
            cols.append(col)
        return cols

    def d_squared_zero(self, level):
        for p in range(self.length - 1):
            first = self.differential_columns(p, level)
            second = self.differential_columns(p + 1, level)
            for col in first:
                acc = {}
                for i, c in col.items():
                    for k, v in second[i].items():
                        acc[k] = acc.get(k, 0) + c * v
                if any(acc.values()):
                    return False
        return True

    def cohomology(self, level):
        """``[dim H^0, ..., dim H^l]`` of F_level K."""
        dims = [len(self.basis(p, level)) for p in range(self.length + 1)]
        ranks = []
        for p in range(self.length):
            ranks.append(linalg.sparse_rank(self.differential_columns(p, level)))
        out = []
        for p in range(self.length + 1):
            r_out = ranks[p] if p < self.length else 0
            r_in = ranks[p - 1] if p > 0 else 0
            out.append(dims[p] - r_out - r_in)
        return out


def truncated_koszul_cohomology(spec, window=None):
    """Cohomology dimensions of the filtered Koszul complex over a degree window.

    ``window = (lo, hi)`` ranges over the internal degree E of the top term:
    the piece at E is F_D K with D = E - W (W = sum of generator degrees).
    Its top cohomology is compared with the number of standard monomials of
    degree <= E, the filtered Hilbert function of S / (x_F).  Negative
    degrees are empty and only reported; a window ending below W misses the
    stable range, and both cases raise :class:`BoundaryWarning`.
    """
    seq = regseq2_sequence(spec)
    cx = KoszulComplex(seq)
    W = cx.total_weight
    lo, hi = (0, W) if window is None else window
    if lo > hi:
        raise ValueError("empty degree window")
    ell = cx.length
    gb = buchberger(seq)
    flagged = [E for E in range(lo, hi + 1) if E < 0]
    if flagged:
        warnings.warn(f"degrees {flagged} are negative and not checked", BoundaryWarning,
                      stacklevel=2)
    if hi < W:
        warnings.warn(f"window ends at {hi}, below the stable degree {W}", BoundaryWarning,
                      stacklevel=2)
    rows = []
    for E in range(lo, hi + 1):
        D = E - W
        h = cx.cohomology(D)
        hf = hilbert_function_affine(gb, E) if E >= 0 else 0
        interior = E >= 0
        ok = all(x == 0 for x in h[:ell]) and h[ell] == hf
        rows.append({
            "degree": E,
            "level": D,
            "h": h,
            "hilbert": hf,
            "interior": interior,
            "pass": ok if interior else None,
        })
    # F_hi K contains every smaller piece, so one check covers the window
    dd = cx.d_squared_zero(hi - W)
    interior_ok = all(r["pass"] for r in rows if r["interior"])
    return {
        "spec": spec.label,
        "length": ell,
        "generator_degrees": cx.degrees,
        "total_weight": W,
        "window": [lo, hi],
        "d_squared_zero": dd,
        "degrees": rows,
        "flagged": flagged,
        "pass": dd and interior_ok,
    }


def _localized_koszul_quotient(spec):
    """``S / (x_F)`` with t1*...*t_{n-1} and every F(t_i) inverted."""
    n = spec.rank
    seq = regseq2_sequence(spec)
    A = quotient_algebra(buchberger(seq))
    t = MPoly.gens(n - 1)
    u = _product(t)
    d = spec.F.degree()
    unit = u
    for ti in t:
        unit = unit * upoly_eval_subst(spec.F, ti)
    cleared = MPoly.zero(n - 1)
    for i, mu in enumerate(spec.F.coeffs):
        if mu:
            cleared = cleared + (u ** (d - i)).scale(mu)
    return localize_artinian(A, unit * cleared)


def _permutation_matrix(L, perm, gens_matrices):
    """Matrix of the algebra automorphism t_i -> t_perm[i] on L."""
    alg = L.algebra
    images = [gens_matrices[perm[i]] for i in range(len(perm) - 1)]
    cache = {}

    def image(e):
        hit = cache.get(e)
        if hit is not None:
            return hit
        if not any(e):
            out = list(alg.one)
        else:
            i = max(j for j, x in enumerate(e) if x)
            smaller = list(e)
            smaller[i] -= 1
            out = linalg.matvec(images[i], image(tuple(smaller)))
        cache[e] = out
        return out

    cols = [image(e) for e in alg.basis]
    dim = alg.dimension
    return [[cols[j][i] for j in range(dim)] for i in range(dim)]


def antisymmetric_dimension_check(spec):
    """Sign-isotypic dimension of R_F / (x_F) against dim R_F^W / J_F.

    The first number comes from the S_n action on the localized Koszul
    quotient (a character computation); the second from the Groebner
    quotient of the symmetric generators localized at F(t1)*...*F(tn).
    """
    n = spec.rank
    L = _localized_koszul_quotient(spec)
    alg = L.algebra
    dim = alg.dimension
    if dim:
        mats = list(alg.mul_matrices)
        prod = linalg.identity(dim)
        for m in mats:
            prod = linalg.matmul(prod, m)
        mats.append(linalg.inverse(prod))
        total = 0
        for perm in permutations(range(n)):
            phi = _permutation_matrix(L, perm, mats)
            total += permutation_sign(perm) * linalg.trace(phi)
        anti = total / factorial(n)
    else:
        anti = 0
    sym_dim = symmetric_side_dimension(spec)
    anti = int(anti) if anti == int(anti) else anti
    return {
        "spec": spec.label,
        "koszul_quotient_dimension": dim,
        "antisymmetric_dimension": anti,
        "symmetric_dimension": sym_dim,
        "pass": anti == sym_dim,
    }


def symmetric_side_dimension(spec):
    """``dim Q[c1..c_{n-1}] / J_F`` localized at F(t1)*...*F(tn)."""
    n = spec.rank
    gens = generators_elem_basis(spec)
    gb = buchberger(gens, n - 1)
    A = quotient_algebra(gb)
    if not A.dimension:
        return 0
    P = MPoly.const(n, 1)
    for ti in MPoly.gens(n):
        P = P * upoly_eval_subst(spec.F, ti)
    P_elem = to_elem_basis(P, n, check=False).drop_last_var(1)
    return localize_artinian(A, P_elem).dimension


def koszul_report(spec, window=None):
    return {
        "regularity": regseq2_check(spec),
        "cohomology": truncated_koszul_cohomology(spec, window),
        "theorem": antisymmetric_dimension_check(spec),
    }

