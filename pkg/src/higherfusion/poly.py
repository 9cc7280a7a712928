"""Exact sparse polynomials over the rationals.

Coefficients are Python ints when integral and ``fractions.Fraction``
otherwise, so integer-heavy workloads stay on the fast path.  Every
polynomial ring in the package uses the graded reverse lexicographic
order (see :func:`grevlex_key`).
"""

import heapq
from fractions import Fraction
from operator import add, sub

from .errors import NotDivisible, StructuralError

__all__ = [
    "MPoly",
    "UPoly",
    "rational",
    "grevlex_key",
    "mpoly_arith",
    "mpoly_exact_div",
    "upoly_eval_subst",
    "upoly_antiderivative_shifted",
]


def rational(x):
    """Normalize ``x`` (int, Fraction, or ``"p/q"`` text) to int-or-Fraction."""
    if isinstance(x, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        x = Fraction(x.strip())
    elif not isinstance(x, Fraction):
        x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return x


def format_rational(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def grevlex_key(e):
    """Sort key for exponent vectors; larger key means larger monomial."""
    return (sum(e), tuple(-x for x in reversed(e)))


def _grevlex_heap_key(e):
    return (-sum(e), e[::-1])


# min-first companion of the key, used by heap-based loops
grevlex_key.heap_key = _grevlex_heap_key


def _clean(terms):
    out = {}
    for e, c in terms.items():
        if c:
            if type(c) is Fraction and c.denominator == 1:
                c = c.numerator
            out[e] = c
    return out


_BITS = 24
_LIMIT = 1 << (_BITS - 1)


def _packed_mul(a, b, n):
    """Product with exponent vectors packed into ints; None if exponents do not fit."""
    shifts = [_BITS * i for i in range(n)]
    pa = {}
    for e, c in a.items():
        if min(e) < 0 or max(e) >= _LIMIT:
            return None
        pa[sum(x << s for x, s in zip(e, shifts))] = c
    pb = {}
    for e, c in b.items():
        if min(e) < 0 or max(e) >= _LIMIT:
            return None
        pb[sum(x << s for x, s in zip(e, shifts))] = c
    out = {}
    get = out.get
    items = list(pa.items())
    for kb, cb in pb.items():
        for ka, ca in items:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    mask = (1 << _BITS) - 1
    res = {}
    for k, c in out.items():
        if c:
            if type(c) is Fraction and c.denominator == 1:
                c = c.numerator
            res[tuple((k >> s) & mask for s in shifts)] = c
    return res


class MPoly:
    """Sparse polynomial in ``nvars`` variables with rational coefficients.

    ``terms`` maps exponent tuples to nonzero coefficients.  Instances are
    treated as immutable.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None, _trusted=False):
        if nvars < 0:
            raise StructuralError("variable count must be nonnegative")
        self.nvars = nvars
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = terms
        else:
            clean = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise StructuralError(f"exponent {e} does not have length {nvars}")
                c = rational(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
            self.terms = _clean(clean)
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {}, _trusted=True)

    @classmethod
    def const(cls, nvars, c):
        c = rational(c)
        return cls(nvars, {(0,) * nvars: c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, nvars, i):
        """The ``i``-th variable (0-based)."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, _trusted=True)

    @classmethod
    def monomial(cls, exps, c=1):
        exps = tuple(exps)
        c = rational(c)
        return cls(len(exps), {exps: c} if c else {}, _trusted=True)

    @classmethod
    def gens(cls, nvars):
        return [cls.var(nvars, i) for i in range(nvars)]

    # -- basic protocol ---------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise StructuralError(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MPoly.const(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MPoly(self.nvars, _clean(out), _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) > 1 and self.nvars > 1:
            packed = _packed_mul(a, b, self.nvars)
            if packed is not None:
                return MPoly(self.nvars, packed, _trusted=True)
        out = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(add, ea, eb))
                out[e] = get(e, 0) + ca * cb
        return MPoly(self.nvars, _clean(out), _trusted=True)

    __rmul__ = __mul__

    def scale(self, c):
        c = rational(c)
        if not c:
            return MPoly.zero(self.nvars)
        return MPoly(self.nvars, _clean({e: v * c for e, v in self.terms.items()}), _trusted=True)

    def __truediv__(self, c):
        if isinstance(c, MPoly):
            return mpoly_exact_div(self, c)
        return self.scale(Fraction(1) / rational(c))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, exps, c=1):
        c = rational(c)
        exps = tuple(exps)
        return MPoly(self.nvars, {tuple(map(add, e, exps)): v * c for e, v in self.terms.items()}
                     if c else {}, _trusted=True)

    # -- ordering and inspection ------------------------------------------

    def sorted_terms(self, key=grevlex_key):
        """Terms in decreasing monomial order."""
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def lead(self, key=grevlex_key):
        """``(exponent, coefficient)`` of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i):
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    # -- transformations --------------------------------------------------

    def diff(self, i):
        """Formal partial derivative with respect to variable ``i``."""
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return MPoly(self.nvars, out, _trusted=True)

    def permute(self, perm):
        """Rename variable ``i`` to ``perm[i]``."""
        n = self.nvars
        out = {}
        for e, c in self.terms.items():
            f = [0] * n
            for i, x in enumerate(e):
                f[perm[i]] = x
            out[tuple(f)] = c
        return MPoly(n, out, _trusted=True)

    def substitute(self, images, nvars=None):
        """Replace variable ``i`` by ``images[i]`` (MPolys in a common ring)."""
        if len(images) != self.nvars:
            raise StructuralError("need one image per variable")
        if nvars is None:
            nvars = images[0].nvars if images else 0
        images = [im if isinstance(im, MPoly) else MPoly.const(nvars, im) for im in images]
        powers = [{0: MPoly.const(nvars, 1)} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        out = MPoly.zero(nvars)
        for e, c in self.sorted_terms():
            term = MPoly.const(nvars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def evaluate(self, values):
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(values, e):
                if k:
                    v = v * x ** k
            total += v
        return rational(total)

    def content(self):
        """Positive rational ``g`` such that ``self / g`` is a primitive integer polynomial."""
        from math import gcd
        if not self.terms:
            return 1
        num = 0
        den = 1
        for c in self.terms.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return rational(Fraction(num, den))

    def primitive(self):
        """Primitive integer multiple with positive leading coefficient."""
        if not self.terms:
            return self
        g = self.content()
        if self.lead()[1] < 0:
            g = -g
        return self.scale(Fraction(1) / Fraction(g))

    def monic(self, key=grevlex_key):
        if not self.terms:
            return self
        return self.scale(Fraction(1) / Fraction(self.lead(key)[1]))

    def drop_last_var(self, value=1):
        """Substitute ``value`` for the last variable, returning a poly in one fewer variable."""
        out = {}
        value = rational(value)
        for e, c in self.terms.items():
            f = e[:-1]
            out[f] = out.get(f, 0) + c * value ** e[-1]
        return MPoly(self.nvars - 1, _clean(out), _trusted=True)

    def extend_vars(self, extra=1, front=False):
        pad = (0,) * extra
        if front:
            return MPoly(self.nvars + extra, {pad + e: c for e, c in self.terms.items()}, _trusted=True)
        return MPoly(self.nvars + extra, {e + pad: c for e, c in self.terms.items()}, _trusted=True)

    # -- text -------------------------------------------------------------

    def to_text(self, prefix="t"):
        """Canonical serialization: ``c * t1^a1*...*tn^an`` joined by `` + ``."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"{prefix}{i + 1}^{k}" for i, k in enumerate(e))
            parts.append(f"{format_rational(c)} * {mono}" if mono else format_rational(c))
        return " + ".join(parts)

    @classmethod
    def from_text(cls, text, nvars, prefix="t"):
        text = text.strip()
        if text == "0":
            return cls.zero(nvars)
        terms = {}
        for part in text.split(" + "):
            if " * " in part:
                coef, mono = part.split(" * ", 1)
                exps = [0] * nvars
                for factor in mono.split("*"):
                    name, k = factor.split("^")
                    if not name.startswith(prefix):
                        raise ValueError(f"unexpected variable {name!r}")
                    exps[int(name[len(prefix):]) - 1] = int(k)
            else:
                coef, exps = part, [0] * nvars
            terms[tuple(exps)] = terms.get(tuple(exps), 0) + rational(coef)
        return cls(nvars, terms)

    def pretty(self, names=None):
        if not self.terms:
            return "0"
        names = names or [f"t{i + 1}" for i in range(self.nvars)]
        out = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{format_rational(a)}*{mono}"
            else:
                body = format_rational(a)
            if idx == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"MPoly({self.nvars}, {self.pretty()!r})"

    __str__ = pretty


def mpoly_arith(a, b, op):
    """Exact ``add``, ``sub`` or ``mul`` of two polynomials in the same ring."""
    if a.nvars != b.nvars:
        raise StructuralError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def _divides(e, f):
    return all(x <= y for x, y in zip(e, f))


def _negate_key(k):
    if isinstance(k, tuple):
        return tuple(_negate_key(x) for x in k)
    return -k


class TermQueue:
    """Working polynomial that hands out its terms largest-first.

    Used by the division and reduction loops; stale heap entries are skipped.
    """

    __slots__ = ("terms", "heap", "key")

    def __init__(self, terms, key=grevlex_key):
        self.terms = dict(terms)
        self.key = getattr(key, "heap_key", None) or (lambda e: _negate_key(key(e)))
        self.heap = [(self.key(e), e) for e in self.terms]
        heapq.heapify(self.heap)

    def __bool__(self):
        return bool(self.terms)

    def pop_max(self):
        heap, terms = self.heap, self.terms
        while heap:
            _, e = heapq.heappop(heap)
            c = terms.pop(e, None)
            if c is not None:
                return e, c
        raise IndexError("empty")

    def add_term(self, e, c):
        terms = self.terms
        old = terms.get(e)
        if old is None:
            terms[e] = c
            heapq.heappush(self.heap, (self.key(e), e))
            return
        v = old + c
        if v:
            terms[e] = v
        else:
            del terms[e]


def mpoly_divmod(a, b, key=grevlex_key):
    """Division of ``a`` by the single polynomial ``b``; returns ``(q, r)``.

    With one divisor the remainder is unique, so ``r == 0`` exactly when
    ``b`` divides ``a``.
    """
    if a.nvars != b.nvars:
        raise StructuralError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    lb, cb = b.lead(key)
    inv = Fraction(1) / Fraction(cb)
    rest = [(e, -c) for e, c in b.terms.items() if e != lb]
    work = TermQueue(a.terms, key)
    quot = {}
    rem = {}
    while work:
        e, c = work.pop_max()
        if not _divides(lb, e):
            rem[e] = c
            continue
        shift = tuple(map(sub, e, lb))
        f = rational(c * inv)
        quot[shift] = f
        for eb, c2 in rest:
            work.add_term(tuple(map(add, eb, shift)), f * c2)
    n = a.nvars
    return MPoly(n, _clean(quot), _trusted=True), MPoly(n, _clean(rem), _trusted=True)


def mpoly_exact_div(a, b):
    """``q`` with ``q * b == a``; raises :class:`NotDivisible` otherwise."""
    q, r = mpoly_divmod(a, b)
    if r:
        raise NotDivisible(r)
    return q


class UPoly:
    """Dense univariate polynomial; ``coeffs[i]`` is the coefficient of ``t**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def parse(cls, text):
        """Parse ``"mu0,mu1,...,mud"``."""
        return cls(rational(x) for x in text.split(","))

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        m = max(len(self.coeffs), len(other.coeffs))
        return UPoly(self[i] + other[i] for i in range(m))

    def __sub__(self, other):
        m = max(len(self.coeffs), len(other.coeffs))
        return UPoly(self[i] - other[i] for i in range(m))

    def __neg__(self):
        return UPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, UPoly):
            if not self.coeffs or not other.coeffs:
                return UPoly()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return UPoly(out)
        c = rational(other)
        return UPoly(a * c for a in self.coeffs)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by ``t**k``."""
        return UPoly([0] * k + list(self.coeffs))

    def derivative(self):
        return UPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_text(self):
        return ",".join(format_rational(c) for c in self.coeffs) or "0"

    def __repr__(self):
        return f"UPoly([{self.to_text()}])"


def upoly_eval_subst(f, arg):
    """``f(arg)`` by Horner's rule, ``arg`` an MPoly."""
    acc = MPoly.zero(arg.nvars)
    for c in reversed(f.coeffs):
        acc = acc * arg + c
    return acc


def upoly_antiderivative_shifted(F):
    """``G`` with ``G(0) = 0`` and ``G'(t) = (F(t) - F(0)) / t``."""
    return UPoly([0] + [Fraction(c, i) for i, c in enumerate(F.coeffs) if i])
