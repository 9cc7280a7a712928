"""Groebner bases over Q, normal forms and finite-dimensional quotient algebras.

Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
selection strategy.  Intermediate polynomials are kept primitive (integer
coefficients, content removed).
"""

from fractions import Fraction
from operator import add, sub

from . import linalg
from .errors import DimensionError, StructuralError
from .poly import (
    MPoly,
    TermQueue,
    _grevlex_heap_key,
    grevlex_key,
    rational,
)

__all__ = [
    "GroebnerBasis",
    "QuotientAlgebra",
    "LocalizedQuotient",
    "buchberger",
    "normal_form",
    "quotient_algebra",
    "ideal_quotient",
    "saturation",
    "localize_artinian",
    "is_regular_sequence",
    "hilbert_function_affine",
]


def elimination_key(k):
    """Product order: total degree in the first ``k`` variables, then grevlex."""
    def key(e):
        return (sum(e[:k]), grevlex_key(e[k:]))

    def heap_key(e):
        return (-sum(e[:k]), _grevlex_heap_key(e[k:]))

    key.heap_key = heap_key
    return key


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class _Divisor:
    __slots__ = ("lm", "lc", "rest", "poly")

    def __init__(self, poly, key):
        self.poly = poly
        self.lm, self.lc = poly.lead(key)
        self.rest = [(e, c) for e, c in poly.terms.items() if e != self.lm]


def _reduce(terms, divisors, key, nvars):
    """Full reduction of ``terms`` by ``divisors``; returns the remainder MPoly."""
    work = TermQueue(terms, key)
    rem = {}
    while work:
        e, c = work.pop_max()
        for d in divisors:
            if _divides(d.lm, e):
                lc = d.lc
                if lc == 1:
                    f = c
                elif isinstance(c, int) and isinstance(lc, int) and c % lc == 0:
                    f = c // lc
                else:
                    f = Fraction(c) / lc
                shift = tuple(map(sub, e, d.lm))
                for eb, cb in d.rest:
                    work.add_term(tuple(map(add, eb, shift)), -f * cb)
                break
        else:
            rem[e] = c
    return MPoly(nvars, {e: rational(c) for e, c in rem.items() if c})


def _spoly(f, g, key):
    lf, cf = f.lm, f.lc
    lg, cg = g.lm, g.lc
    m = _lcm(lf, lg)
    a = tuple(map(sub, m, lf))
    b = tuple(map(sub, m, lg))
    out = {}
    for e, c in f.rest:
        out[tuple(map(add, e, a))] = c * cg
    for e, c in g.rest:
        k = tuple(map(add, e, b))
        v = out.get(k, 0) - c * cf
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _buchberger(gens, key, nvars):
    polys = []
    basis = []  # indices into polys currently in G
    pairs = []  # (lcm, i, j)

    def update(h):
        nonlocal basis, pairs
        lh = polys[h].lm
        cand = [(_lcm(polys[g].lm, lh), g) for g in basis]
        kept = []
        for idx, (m, g) in enumerate(cand):
            if _coprime(polys[g].lm, lh):
                kept.append((m, g))
                continue
            others = cand[idx + 1:] + kept
            if any(_divides(m2, m) for m2, _ in others):
                continue
            kept.append((m, g))
        new_pairs = [(m, g, h) for m, g in kept if not _coprime(polys[g].lm, lh)]
        survivors = []
        for m, a, b in pairs:
            if (_divides(lh, m) and _lcm(polys[a].lm, lh) != m
                    and _lcm(polys[b].lm, lh) != m):
                continue
            survivors.append((m, a, b))
        pairs = survivors + new_pairs
        basis = [g for g in basis if not _divides(lh, polys[g].lm)] + [h]

    def add_poly(p):
        polys.append(_Divisor(p, key))
        update(len(polys) - 1)

    for g in sorted((g for g in gens if g), key=lambda p: key(p.lead(key)[0])):
        r = _reduce(g.terms, [polys[i] for i in basis], key, nvars)
        if r:
            add_poly(r.primitive())
    while pairs:
        # normal strategy: smallest lcm first, ties by index for determinism
        best = min(range(len(pairs)), key=lambda i: (key(pairs[i][0]), pairs[i][1], pairs[i][2]))
        _, a, b = pairs.pop(best)
        s = _spoly(polys[a], polys[b], key)
        if not s:
            continue
        r = _reduce(s, [polys[i] for i in basis], key, nvars)
        if r:
            add_poly(r.primitive())
            if r.total_degree() == 0:
                break
    return _interreduce([polys[i].poly for i in basis], key, nvars)


def _interreduce(gens, key, nvars):
    gens = [g for g in gens if g]
    if any(g.total_degree() == 0 for g in gens):
        return [MPoly.const(nvars, 1)]
    lead = {id(g): g.lead(key)[0] for g in gens}
    minimal = []
    for g in sorted(gens, key=lambda p: key(lead[id(p)])):
        if not any(_divides(lead[id(h)], lead[id(g)]) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = [_Divisor(h, key) for j, h in enumerate(minimal) if j != i]
        lm, lc = g.lead(key)
        tail = {e: c for e, c in g.terms.items() if e != lm}
        r = _reduce(tail, others, key, nvars)
        out.append((MPoly(nvars, {lm: lc}) + r).monic(key))
    out.sort(key=lambda p: key(p.lead(key)[0]))
    return out


class GroebnerBasis:
    """Reduced, monic Groebner basis; generators sorted by increasing leading monomial."""

    __slots__ = ("nvars", "generators", "key", "_divisors")

    def __init__(self, nvars, generators, key=grevlex_key):
        self.nvars = nvars
        self.generators = list(generators)
        self.key = key
        self._divisors = [_Divisor(g, key) for g in self.generators]

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.nvars == other.nvars and self.generators == other.generators

    def __hash__(self):
        return hash((self.nvars, tuple(self.generators)))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        return f"GroebnerBasis({self.nvars}, {[g.pretty() for g in self.generators]})"

    @property
    def leading_monomials(self):
        return [d.lm for d in self._divisors]

    def is_unit(self):
        return any(g.total_degree() == 0 for g in self.generators)

    def is_zero(self):
        return not self.generators

    def normal_form(self, p):
        if p.nvars != self.nvars:
            raise StructuralError(f"variable count mismatch: {p.nvars} vs {self.nvars}")
        return _reduce(p.terms, self._divisors, self.key, self.nvars)

    def contains(self, p):
        return not self.normal_form(p)

    def to_json(self, prefix="c"):
        return {
            "variables": [f"{prefix}{i + 1}" for i in range(self.nvars)],
            "generators": [g.to_text(prefix) for g in self.generators],
        }


def buchberger(gens, nvars=None):
    """Reduced Groebner basis of the ideal generated by ``gens`` (grevlex)."""
    gens = list(gens)
    if nvars is None:
        if not gens:
            raise StructuralError("cannot infer the variable count of an empty list")
        nvars = gens[0].nvars
    if any(g.nvars != nvars for g in gens):
        raise StructuralError("generators live in different rings")
    return GroebnerBasis(nvars, _buchberger(gens, grevlex_key, nvars))


def normal_form(p, gb):
    return gb.normal_form(p)


def _basis_from(gens, nvars):
    return GroebnerBasis(nvars, _buchberger(gens, grevlex_key, nvars))


def ideal_quotient(I, f):
    """``(I : f)`` via ``I ∩ (f)`` computed by elimination of an auxiliary variable."""
    if not f:
        raise ValueError("ideal quotient by zero")
    n = I.nvars
    if I.is_zero():
        return GroebnerBasis(n, [])
    if I.contains(f):
        return GroebnerBasis(n, [MPoly.const(n, 1)])
    w = MPoly.var(n + 1, 0)
    gens = [w * g.extend_vars(1, front=True) for g in I.generators]
    gens.append((1 - w) * f.extend_vars(1, front=True))
    key = elimination_key(1)
    elim = _buchberger(gens, key, n + 1)
    inter = [MPoly(n, {e[1:]: c for e, c in g.terms.items()}) for g in elim
             if all(e[0] == 0 for e in g.terms)]
    from .poly import mpoly_exact_div
    return _basis_from([mpoly_exact_div(g, f) for g in inter], n)


def saturation(I, f, method="elimination"):
    """``(I : f^oo)``; ``method`` is ``"elimination"`` (1 - w f) or ``"iterate"``."""
    if not f:
        raise ValueError("saturation by zero")
    n = I.nvars
    if method == "iterate":
        cur = I
        while True:
            nxt = ideal_quotient(cur, f)
            if nxt == cur:
                return cur
            cur = nxt
    if method != "elimination":
        raise ValueError(f"unknown method {method!r}")
    if I.is_zero():
        return I
    w = MPoly.var(n + 1, 0)
    gens = [g.extend_vars(1, front=True) for g in I.generators]
    gens.append(1 - w * f.extend_vars(1, front=True))
    elim = _buchberger(gens, elimination_key(1), n + 1)
    kept = [MPoly(n, {e[1:]: c for e, c in g.terms.items()}) for g in elim
            if all(e[0] == 0 for e in g.terms)]
    return _basis_from(kept, n)


def is_regular_sequence(seq, nvars=None, saturate_by=None):
    """Check ``(I_k : x_{k+1}) == I_k`` step by step.

    Returns ``(overall, steps, proper)``; ``proper`` says whether the whole
    sequence generates a proper ideal.  With
    ``saturate_by`` the ideals I_k are replaced by their saturations, which
    is the same test in the localization at that element.
    """
    seq = list(seq)
    nvars = seq[0].nvars if nvars is None else nvars
    steps = []
    current = []
    for k, x in enumerate(seq):
        I = _basis_from(current, nvars)
        if saturate_by is not None:
            I = saturation(I, saturate_by)
        Q = ideal_quotient(I, x) if x else GroebnerBasis(nvars, [MPoly.const(nvars, 1)])
        ok = bool(x) and Q == I
        steps.append({"step": k, "ideal_size": len(I), "quotient_equal": ok})
        current.append(x)
    final = _basis_from(current, nvars)
    if saturate_by is not None:
        final = saturation(final, saturate_by)
    proper = not final.is_unit()
    return all(s["quotient_equal"] for s in steps), steps, proper


class QuotientAlgebra:
    """Finite-dimensional commutative algebra with a monomial basis.

    ``mul_matrices[i]`` is the matrix of multiplication by variable i,
    acting on coordinate column vectors.  ``one`` holds the coordinates of 1.
    """

    def __init__(self, nvars, basis, mul_matrices, one, gb=None):
        self.nvars = nvars
        self.basis = list(basis)
        self.mul_matrices = mul_matrices
        self.one = one
        self.gb = gb
        self.index = {e: i for i, e in enumerate(self.basis)}
        self._mono_cache = {}

    @property
    def dimension(self):
        return len(self.basis)

    def coords(self, p):
        """Coordinates of the image of ``p``."""
        if p.nvars != self.nvars:
            raise StructuralError(f"variable count mismatch: {p.nvars} vs {self.nvars}")
        if self.gb is not None:
            v = [0] * self.dimension
            for e, c in self.gb.normal_form(p).terms.items():
                v[self.index[e]] = c
            return v
        v = [0] * self.dimension
        for e, c in p.terms.items():
            w = self._monomial_vector(e)
            v = [rational(x + c * y) for x, y in zip(v, w)]
        return v

    def _monomial_vector(self, e):
        e = tuple(e)
        hit = self._mono_cache.get(e)
        if hit is not None:
            return hit
        if not any(e):
            out = list(self.one)
        else:
            i = max(j for j, x in enumerate(e) if x)
            smaller = list(e)
            smaller[i] -= 1
            out = linalg.matvec(self.mul_matrices[i], self._monomial_vector(smaller))
        self._mono_cache[e] = out
        return out

    def element_matrix(self, v):
        """Matrix of multiplication by the element with coordinates ``v`` (or an MPoly)."""
        if isinstance(v, MPoly):
            v = self.coords(v)
        dim = self.dimension
        cols = [self.basis_times(j, v) for j in range(dim)]
        return [[cols[j][i] for j in range(dim)] for i in range(dim)]

    def basis_times(self, j, u):
        """Coordinates of ``basis[j] * u``; the j-th basis monomial is the j-th unit vector."""
        w = u
        for i, k in enumerate(self.basis[j]):
            for _ in range(k):
                w = linalg.matvec(self.mul_matrices[i], w)
        return w

    def mul(self, u, v):
        """Product of two coordinate vectors."""
        out = [0] * self.dimension
        for j, b in enumerate(v):
            if b:
                col = self.basis_times(j, u)
                out = [rational(x + b * y) for x, y in zip(out, col)]
        return out

    def structure_constants(self):
        """``table[i][j]`` = coordinates of ``basis[i] * basis[j]``."""
        dim = self.dimension
        units = [[1 if a == b else 0 for a in range(dim)] for b in range(dim)]
        return [[self.mul(units[i], units[j]) for j in range(dim)] for i in range(dim)]

    def commute_check(self):
        mats = self.mul_matrices
        for a in range(len(mats)):
            for b in range(a + 1, len(mats)):
                if linalg.matmul(mats[a], mats[b]) != linalg.matmul(mats[b], mats[a]):
                    return False
        return True

    def to_json(self, prefix="c"):
        out = {
            "variables": [f"{prefix}{i + 1}" for i in range(self.nvars)],
            "dimension": self.dimension,
            "basis": [MPoly.monomial(e).to_text(prefix) if self.nvars else "1" for e in self.basis],
            "mul_matrices": [linalg.format_matrix(m) for m in self.mul_matrices],
        }
        if self.gb is not None:
            out["generators"] = [g.to_text(prefix) for g in self.gb.generators]
        return out


def quotient_algebra(gb):
    """Standard monomials and multiplication matrices of ``Q[x] / I``."""
    n = gb.nvars
    if gb.is_unit():
        return QuotientAlgebra(n, [], [[] for _ in range(n)], [], gb)
    lms = gb.leading_monomials
    for i in range(n):
        if not any(m[i] > 0 and sum(m) == m[i] for m in lms):
            raise DimensionError(i)
    seen = {(0,) * n}
    frontier = [(0,) * n]
    while frontier:
        nxt = []
        for e in frontier:
            for i in range(n):
                f = list(e)
                f[i] += 1
                f = tuple(f)
                if f in seen or any(_divides(m, f) for m in lms):
                    continue
                seen.add(f)
                nxt.append(f)
        frontier = nxt
    basis = sorted(seen, key=grevlex_key)
    index = {e: i for i, e in enumerate(basis)}
    dim = len(basis)
    mats = []
    for i in range(n):
        m = linalg.zeros(dim, dim)
        for j, e in enumerate(basis):
            f = list(e)
            f[i] += 1
            f = tuple(f)
            if f in index:
                m[index[f]][j] = 1
                continue
            for g, c in gb.normal_form(MPoly.monomial(f)).terms.items():
                m[index[g]][j] = c
        mats.append(m)
    one = [0] * dim
    one[index[(0,) * n]] = 1
    return QuotientAlgebra(n, basis, mats, one, gb)


class LocalizedQuotient:
    """``A / K`` where K is the generalized 0-eigenspace of multiplication by u."""

    def __init__(self, parent, kernel, pivots, algebra):
        self.parent = parent
        self.kernel = kernel
        self.pivots = pivots
        self.algebra = algebra
        self.keep = [j for j in range(parent.dimension) if j not in set(pivots)]

    @property
    def dimension(self):
        return self.algebra.dimension

    def project(self, v):
        """Coordinates in A/K of a parent coordinate vector."""
        v = list(v)
        for row, p in zip(self.kernel, self.pivots):
            f = v[p]
            if f:
                v = [rational(x - f * y) for x, y in zip(v, row)]
        return [v[j] for j in self.keep]

    def coords(self, p):
        return self.project(self.parent.coords(p))

    def to_json(self, prefix="c"):
        return {
            "parent_dimension": self.parent.dimension,
            "kernel_dimension": len(self.kernel),
            "dimension": self.dimension,
            "algebra": self.algebra.to_json(prefix),
        }


def localize_artinian(A, u):
    """Invert ``u`` (MPoly or coordinate vector) in the finite-dimensional algebra ``A``."""
    Mu = A.element_matrix(u)
    dim = A.dimension
    power = linalg.identity(dim)
    kernel_dim = -1
    kernel = []
    # ker(M^j) grows until it stabilizes, at the latest at j = dim
    for _ in range(max(dim, 1)):
        power = linalg.matmul(Mu, power)
        kernel = linalg.nullspace(power, dim)
        if len(kernel) == kernel_dim:
            break
        kernel_dim = len(kernel)
    red, pivots = linalg.rref(kernel, dim) if kernel else ([], [])
    keep = [j for j in range(dim) if j not in set(pivots)]
    loc = LocalizedQuotient(A, red, pivots, None)
    mats = []
    for M in A.mul_matrices:
        cols = [loc.project([M[i][j] for i in range(dim)]) for j in keep]
        mats.append([[cols[c][r] for c in range(len(keep))] for r in range(len(keep))])
    one = loc.project(A.one) if dim else []
    loc.algebra = QuotientAlgebra(A.nvars, [A.basis[j] for j in keep], mats, one, None)
    return loc


def hilbert_function_affine(gb, degree):
    """Number of standard monomials of total degree <= ``degree``."""
    from itertools import combinations_with_replacement
    n = gb.nvars
    lms = gb.leading_monomials
    count = 0
    for d in range(degree + 1):
        for idx in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in idx:
                e[i] += 1
            if not any(_divides(m, e) for m in lms):
                count += 1
    return count
