"""Generators of the fusion ideal J_F and the potential V for SU(n).

A :class:`FunctorSpec` fixes the rank n and the character polynomial
F(t) = mu_0 + mu_1 t + ... + mu_d t^d.  Everything else is derived from it.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvariantViolation, StructuralError
from .poly import MPoly, UPoly, upoly_antiderivative_shifted
from .symmetric import (
    complete,
    divide_by_vandermonde,
    elementary,
    extended_a,
    from_elem_basis,
    power_sum,
    to_elem_basis,
)
from .torus import LocalizedElem, TorusElem, canonicalize, is_invariant

__all__ = [
    "FunctorSpec",
    "IdealPresentation",
    "Potential",
    "generators_antisym",
    "generators_sym",
    "generators_elem_basis",
    "ideal_presentation",
    "su2_character",
    "potential",
    "potential_derivative_check",
    "vm_derivative_check",
]


@dataclass(frozen=True)
class FunctorSpec:
    rank: int
    F: UPoly
    label: str = ""

    def __post_init__(self):
        if not isinstance(self.F, UPoly):
            object.__setattr__(self, "F", UPoly(self.F))
        if self.rank < 2:
            raise StructuralError("rank must be at least 2")
        if self.F.degree() < 1:
            raise StructuralError("F must have positive degree")
        if not self.label:
            object.__setattr__(self, "label", f"n={self.rank} F={self.F.to_text()}")

    @classmethod
    def classical(cls, n, k):
        """F(t) = (-t)^(n+k), expanded into its single coefficient."""
        if n < 2 or k < 0:
            raise StructuralError("classical spec needs n >= 2 and k >= 0")
        m = n + k
        return cls(n, UPoly.monomial(m, (-1) ** m), f"classical n={n} k={k}")

    @classmethod
    def parse(cls, rank, text, label=""):
        return cls(int(rank), UPoly.parse(text), label)

    def classical_level(self):
        """k when F(t) = (-t)^(n+k) with k >= 0, else None."""
        m = self.F.degree()
        if m < self.rank or any(self.F.coeffs[:m]) or self.F.coeffs[m] != (-1) ** m:
            return None
        return m - self.rank

    @property
    def degree(self):
        return self.F.degree()

    @property
    def mu(self):
        return self.F.coeffs

    def to_json(self):
        from .poly import format_rational
        return {"rank": self.rank, "functor": [format_rational(c) for c in self.F.coeffs],
                "label": self.label}


def generators_antisym(spec):
    """q_i = det with first row F(t_j) t_j^i and rows t_j^(n-2), ..., 1 below."""
    n = spec.rank
    return [extended_a(spec.F.shift(i), (), n) for i in range(n - 1)]


def _sym_by_formula(spec, j):
    n = spec.rank
    out = MPoly.zero(n)
    for i, mu in enumerate(spec.F.coeffs):
        if i >= 1 and mu:
            out = out + complete(i + j - (n - 1), n).scale(mu)
    return out


def generators_sym(spec, validate=True):
    """c_{F,j} = sum_i mu_i h_{i+j-(n-1)}, checked against q_j / Delta."""
    out = [_sym_by_formula(spec, j) for j in range(spec.rank - 1)]
    if validate:
        for j, q in enumerate(generators_antisym(spec)):
            if divide_by_vandermonde(q) != out[j]:
                raise InvariantViolation(f"q_{j} / Delta differs from c_F,{j} for {spec.label}")
    return out


def generators_elem_basis(spec, sym=None, check=True):
    """c_{F,j} rewritten in c1..c_{n-1}, with c_n set to 1."""
    n = spec.rank
    sym = generators_sym(spec) if sym is None else sym
    out = [to_elem_basis(c, n, check=False).drop_last_var(1) for c in sym]
    if check:
        for j, (g, c) in enumerate(zip(out, sym)):
            if not elem_consistency(g, c, n):
                raise InvariantViolation(f"elementary form of c_F,{j} does not evaluate back")
    return out


def elem_consistency(g, c, n):
    """Substitute ck -> e_k(t) (k < n) and compare with ``c`` modulo t1*...*tn - 1."""
    images = [elementary(k + 1, n) for k in range(g.nvars)]
    return canonicalize(g.substitute(images, nvars=n), n) == canonicalize(c, n)


@dataclass
class IdealPresentation:
    rank: int
    generators_antisym: list
    generators_sym: list
    generators_elem_basis: list
    spec: FunctorSpec = field(default=None, repr=False)

    def to_json(self):
        return {
            "rank": self.rank,
            "generators_antisym": [q.to_text() for q in self.generators_antisym],
            "generators_sym": [c.to_text() for c in self.generators_sym],
            "generators_elem_basis": [g.to_text("c") for g in self.generators_elem_basis],
        }


def ideal_presentation(spec):
    anti = generators_antisym(spec)
    sym = generators_sym(spec)
    for q in anti:
        if not is_invariant(q, signed=True):
            raise InvariantViolation("generator q is not antisymmetric")
    for c in sym:
        if not is_invariant(c):
            raise InvariantViolation("generator c_F is not symmetric")
    return IdealPresentation(spec.rank, anti, sym, generators_elem_basis(spec, sym), spec)


def su2_character(spec):
    """chi_F = (F(t) - F(1/t)) / (t - 1/t) with t = t1, 1/t = t2."""
    if spec.rank != 2:
        raise StructuralError("the character polynomial is defined for rank 2")
    # F(t) and F(1/t) as Laurent polynomials in the single variable t
    num = {}
    for i, mu in enumerate(spec.F.coeffs):
        if mu:
            for e, s in ((i, 1), (-i, -1)):
                v = num.get((e,), 0) + s * mu
                if v:
                    num[(e,)] = v
                else:
                    num.pop((e,), None)
    den = TorusElem.from_laurent(2, {(1,): 1, (-1,): -1})
    chi = TorusElem.from_laurent(2, num).exact_div(den)
    return LocalizedElem(chi, spec.F, 0)


@dataclass
class Potential:
    rank: int
    G: UPoly
    V_power_sum: MPoly
    V_elem_basis: MPoly

    def to_json(self):
        return {
            "rank": self.rank,
            "G": self.G.to_text(),
            "V_power_sum": self.V_power_sum.to_text(),
            "V_elem_basis": self.V_elem_basis.to_text("c"),
        }


def potential(spec):
    """V = sum_i G(t_i) with G' = (F - F(0)) / t and G(0) = 0."""
    n = spec.rank
    G = upoly_antiderivative_shifted(spec.F)
    V = MPoly.zero(n)
    for i, g in enumerate(G.coeffs):
        if g:
            V = V + power_sum(i, n).scale(g)
    return Potential(n, G, V, to_elem_basis(V, n, check=False))


def potential_derivative_check(spec, pot=None, sym=None):
    """Per-j comparison of c_{F,j} with (-1)^(n-j) dV/dc_{n-j-1}.

    The derivative is taken with c1..cn free; the result is compared in the
    t variables and again after setting c_n = 1.
    """
    n = spec.rank
    pot = potential(spec) if pot is None else pot
    sym = generators_sym(spec, validate=False) if sym is None else sym
    elem = [to_elem_basis(c, n, check=False).drop_last_var(1) for c in sym]
    rows = []
    for j in range(n - 1):
        d = pot.V_elem_basis.diff(n - j - 2)
        if (n - j) % 2:
            d = -d
        residual = from_elem_basis(d, n) - sym[j]
        reduced = d.drop_last_var(1) - elem[j]
        rows.append({
            "j": j,
            "pass": not residual and not reduced,
            "residual": residual.to_text(),
            "residual_elem": reduced.to_text("c"),
        })
    return {"spec": spec.label, "pass": all(r["pass"] for r in rows), "rows": rows}


def vm_derivative_check(m, n, j):
    """d(p_m / m)/dc_j == (-1)^(j-1) h_(m-j), computed in the free elementary basis."""
    vm = to_elem_basis(power_sum(m, n).scale(Fraction(1, m)), n, check=False)
    lhs = from_elem_basis(vm.diff(j - 1), n)
    rhs = complete(m - j, n)
    if j % 2 == 0:
        rhs = -rhs
    return lhs == rhs
