"""Exact computations with higher fusion ideals of SU(n).

Given a rank n and a character polynomial F(t), the package builds the
ideal J_F in the symmetric functions, its finite-dimensional quotient, the
potential V whose derivatives generate J_F, and verification tools: a
Kac-Walton oracle for the classical case F(t) = (-t)^(n+k) and Koszul
complex computations for the regularity statements behind the quotient.
"""

from .errors import (
    BoundaryWarning,
    DimensionError,
    DomainError,
    InvariantViolation,
    NotDivisible,
    StructuralError,
)
from .groebner import (
    GroebnerBasis,
    LocalizedQuotient,
    QuotientAlgebra,
    buchberger,
    ideal_quotient,
    localize_artinian,
    normal_form,
    quotient_algebra,
    saturation,
)
from .ideal import (
    FunctorSpec,
    IdealPresentation,
    Potential,
    generators_antisym,
    generators_elem_basis,
    generators_sym,
    ideal_presentation,
    potential,
    potential_derivative_check,
    su2_character,
)
from .koszul import (
    antisymmetric_dimension_check,
    regseq1_check,
    regseq2_check,
    truncated_koszul_cohomology,
)
from .poly import MPoly, UPoly, mpoly_arith, mpoly_exact_div, upoly_antiderivative_shifted, upoly_eval_subst
from .symmetric import (
    antisymmetrize,
    complete,
    divide_by_vandermonde,
    elementary,
    extended_a,
    from_elem_basis,
    pieri_check,
    power_sum,
    schur,
    to_elem_basis,
    vandermonde,
)
from .torus import LocalizedElem, SignedAction, TorusElem, act, canonicalize, is_invariant, localized_arith
from .verlinde import (
    FusionTable,
    compare_with_quotient,
    integrable_weights,
    kac_walton_fusion,
    lr_coefficient,
)

__version__ = "0.1.0"
