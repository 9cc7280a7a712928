"""The ring Q[t1..tn]/(t1*...*tn - 1), its permutation actions and its
localization at P = F(t1)*...*F(tn).

Elements are stored as polynomials in ``n`` variables whose monomials are
shifted by a multiple of (1, ..., 1) so that the smallest exponent is 0.
That representative is unique, so equality is equality of dicts.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .errors import NotDivisible, StructuralError
from .poly import MPoly, mpoly_exact_div, rational, upoly_eval_subst

__all__ = [
    "TorusElem",
    "LocalizedElem",
    "SignedAction",
    "canonicalize",
    "act",
    "is_invariant",
    "permutation_sign",
    "localized_arith",
    "functor_product",
    "lattice_unit",
]


def _shift_exps(e):
    m = min(e)
    if m == 0:
        return e
    return tuple(x - m for x in e)


def canonicalize(p, rank=None):
    """Canonical :class:`TorusElem` for a polynomial (negative exponents allowed)."""
    if rank is None:
        rank = p.nvars
    if p.nvars != rank:
        raise StructuralError(f"polynomial has {p.nvars} variables, rank is {rank}")
    if rank < 2:
        raise StructuralError("rank must be at least 2")
    out = {}
    for e, c in p.terms.items():
        f = _shift_exps(e)
        v = out.get(f, 0) + c
        if v:
            out[f] = v
        else:
            out.pop(f, None)
    return TorusElem(rank, MPoly(rank, out))


class TorusElem:
    """Element of R(T) (x) Q for SU(rank) in canonical form."""

    __slots__ = ("rank", "poly")

    def __init__(self, rank, poly):
        self.rank = rank
        self.poly = poly

    @classmethod
    def from_poly(cls, p):
        return canonicalize(p, p.nvars)

    @classmethod
    def const(cls, rank, c):
        return cls(rank, MPoly.const(rank, c))

    @classmethod
    def var(cls, rank, i, power=1):
        e = [0] * rank
        e[i] = power
        return canonicalize(MPoly.monomial(e), rank)

    def _other(self, other):
        if isinstance(other, TorusElem):
            if other.rank != self.rank:
                raise StructuralError(f"rank mismatch: {self.rank} vs {other.rank}")
            return other
        if isinstance(other, MPoly):
            return canonicalize(other, self.rank)
        return TorusElem.const(self.rank, rational(other))

    def __add__(self, other):
        return TorusElem(self.rank, self.poly + self._other(other).poly)

    __radd__ = __add__

    def __sub__(self, other):
        return TorusElem(self.rank, self.poly - self._other(other).poly)

    def __rsub__(self, other):
        return self._other(other) - self

    def __neg__(self):
        return TorusElem(self.rank, -self.poly)

    def __mul__(self, other):
        return canonicalize(self.poly * self._other(other).poly, self.rank)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = TorusElem.const(self.rank, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (TorusElem, MPoly, int, Fraction)):
            try:
                o = self._other(other)
            except StructuralError:
                return False
            return self.poly == o.poly
        return NotImplemented

    def __hash__(self):
        return hash((self.rank, self.poly))

    def __bool__(self):
        return bool(self.poly)

    def __repr__(self):
        return f"TorusElem({self.rank}, {self.poly.pretty()!r})"

    def to_laurent(self):
        """Exponent map in t1..t_{n-1} after eliminating tn = (t1*...*t_{n-1})^-1."""
        out = {}
        for e, c in self.poly.terms.items():
            last = e[-1]
            out[tuple(x - last for x in e[:-1])] = c
        return out

    @classmethod
    def from_laurent(cls, rank, terms):
        out = {}
        for e, c in terms.items():
            f = _shift_exps(tuple(e) + (0,))
            out[f] = out.get(f, 0) + c
        return cls(rank, MPoly(rank, out))

    def exact_div(self, other):
        """Quotient in the Laurent ring; raises :class:`NotDivisible`."""
        other = self._other(other)
        if not other:
            raise ZeroDivisionError("division by zero in R(T)")
        if not self:
            return self
        a, sa = _monomial_free(self.to_laurent(), self.rank - 1)
        b, sb = _monomial_free(other.to_laurent(), self.rank - 1)
        q = mpoly_exact_div(a, b)
        shift = tuple(x - y for x, y in zip(sa, sb))
        return TorusElem.from_laurent(
            self.rank, {tuple(x + s for x, s in zip(e, shift)): c for e, c in q.terms.items()})

    def to_text(self):
        return f"rank {self.rank}; {self.poly.to_text()}"


def _monomial_free(terms, nvars):
    """Split a Laurent polynomial into (polynomial with no monomial factor, shift)."""
    shift = tuple(min(e[i] for e in terms) for i in range(nvars))
    poly = MPoly(nvars, {tuple(x - s for x, s in zip(e, shift)): c for e, c in terms.items()})
    return poly, shift


def permutation_sign(perm):
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


class SignedAction:
    """A permutation of the variables, optionally twisted by its sign.

    ``perm[i]`` is the image of index ``i`` (0-based): the action sends
    ``t_i`` to ``t_perm[i]``.
    """

    __slots__ = ("perm", "signed")

    def __init__(self, perm, signed=False):
        perm = tuple(perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"{perm} is not a permutation")
        self.perm = perm
        self.signed = signed

    @classmethod
    def from_cycle(cls, n, cycle, signed=False):
        """Build from a 1-based cycle such as ``(1, 2, 3)``."""
        perm = list(range(n))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            perm[a - 1] = b - 1
        return cls(perm, signed)

    @property
    def sign(self):
        return permutation_sign(self.perm) if self.signed else 1

    def compose(self, other):
        """``self`` after ``other``."""
        return SignedAction(tuple(self.perm[other.perm[i]] for i in range(len(self.perm))),
                            self.signed)

    def inverse(self):
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return SignedAction(inv, self.signed)


def act(a, x):
    """Apply a :class:`SignedAction` to a TorusElem or an MPoly."""
    if isinstance(x, TorusElem):
        p = x.poly.permute(a.perm)
        if a.sign < 0:
            p = -p
        # permuting variables keeps the minimum exponent, so the result is canonical
        return TorusElem(x.rank, p)
    p = x.permute(a.perm)
    return -p if a.sign < 0 else p


def adjacent_transpositions(n, signed=False):
    out = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        out.append(SignedAction(perm, signed))
    return out


def all_actions(n, signed=False):
    return [SignedAction(p, signed) for p in permutations(range(n))]


def is_invariant(x, signed=False):
    """Fixed by every permutation; checking adjacent transpositions suffices."""
    n = x.rank if isinstance(x, TorusElem) else x.nvars
    return all(act(s, x) == x for s in adjacent_transpositions(n, signed))


@lru_cache(maxsize=None)
def functor_product(rank, F):
    """P = F(t1) * ... * F(tn) as a TorusElem."""
    gens = MPoly.gens(rank)
    p = MPoly.const(rank, 1)
    for g in gens:
        p = p * upoly_eval_subst(F, g)
    return canonicalize(p, rank)


class LocalizedElem:
    """``numerator / P**f_power`` in R_F(T) (x) Q with P = F(t1)*...*F(tn)."""

    __slots__ = ("rank", "F", "numerator", "f_power")

    def __init__(self, numerator, F, f_power=0, reduce=True):
        if isinstance(numerator, MPoly):
            numerator = canonicalize(numerator, numerator.nvars)
        if F.degree() < 1:
            raise StructuralError("F must have positive degree")
        if f_power < 0:
            raise ValueError("f_power must be nonnegative")
        self.rank = numerator.rank
        self.F = F
        self.numerator = numerator
        self.f_power = f_power
        if reduce:
            self._reduce()

    def _reduce(self):
        if not self.numerator:
            self.f_power = 0
            return
        P = functor_product(self.rank, self.F)
        while self.f_power > 0:
            try:
                q = self.numerator.exact_div(P)
            except NotDivisible:
                break
            self.numerator = q
            self.f_power -= 1

    @property
    def denominator(self):
        return functor_product(self.rank, self.F) ** self.f_power

    def _check(self, other):
        if not isinstance(other, LocalizedElem):
            return LocalizedElem(other if isinstance(other, TorusElem)
                                 else TorusElem.const(self.rank, rational(other)), self.F)
        if other.rank != self.rank:
            raise StructuralError(f"rank mismatch: {self.rank} vs {other.rank}")
        if other.F != self.F:
            raise StructuralError("localized elements for different F")
        return other

    def _common(self, other):
        P = functor_product(self.rank, self.F)
        m = max(self.f_power, other.f_power)
        a = self.numerator * P ** (m - self.f_power)
        b = other.numerator * P ** (m - other.f_power)
        return a, b, m

    def __add__(self, other):
        other = self._check(other)
        a, b, m = self._common(other)
        return LocalizedElem(a + b, self.F, m)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        a, b, m = self._common(other)
        return LocalizedElem(a - b, self.F, m)

    def __neg__(self):
        return LocalizedElem(-self.numerator, self.F, self.f_power, reduce=False)

    def __mul__(self, other):
        other = self._check(other)
        return LocalizedElem(self.numerator * other.numerator, self.F,
                             self.f_power + other.f_power)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LocalizedElem):
            try:
                other = self._check(other)
            except (StructuralError, TypeError):
                return NotImplemented
        if other.rank != self.rank or other.F != self.F:
            return False
        P = functor_product(self.rank, self.F)
        return self.numerator * P ** other.f_power == other.numerator * P ** self.f_power

    def __hash__(self):
        raise TypeError("LocalizedElem is unhashable (equality is by cross-multiplication)")

    def __repr__(self):
        return f"LocalizedElem({self.numerator.poly.pretty()!r} / P^{self.f_power})"

    def to_text(self):
        return f"rank {self.rank}; fPower {self.f_power}; {self.numerator.poly.to_text()}"


def localized_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def lattice_unit(F, rank, k):
    """The unit prod_i F(t_i)**k_i for an integer vector ``k``."""
    k = list(k)
    if len(k) != rank:
        raise StructuralError("need one exponent per variable")
    shift = max(0, -min(k))
    num = TorusElem.const(rank, 1)
    for i, ki in enumerate(k):
        num = num * canonicalize(upoly_eval_subst(F, MPoly.var(rank, i)), rank) ** (ki + shift)
    return LocalizedElem(num, F, shift)

