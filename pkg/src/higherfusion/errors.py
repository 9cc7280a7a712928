"""Exception and warning types shared across the package."""


class StructuralError(ValueError):
    """Operands that do not live in the same ring (variable count, rank, F)."""


class DomainError(ValueError):
    """An argument is outside the domain of an operation (e.g. not symmetric)."""


class NotDivisible(ArithmeticError):
    """Exact division failed; ``remainder`` holds the nonzero remainder."""

    def __init__(self, remainder, message="polynomial is not divisible"):
        super().__init__(message)
        self.remainder = remainder


class DimensionError(ValueError):
    """A quotient ring that was expected to be finite-dimensional is not.

    ``witness`` is the index of a variable with no pure power among the
    leading monomials of the Groebner basis.
    """

    def __init__(self, witness, message=None):
        super().__init__(message or f"quotient is infinite-dimensional (variable {witness})")
        self.witness = witness


class InvariantViolation(RuntimeError):
    """Two construction routes that must agree did not."""


class BoundaryWarning(UserWarning):
    """Some degrees of a truncated computation are too close to the window edge."""
