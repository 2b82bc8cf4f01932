"""Shared exception types."""


class ParseError(ValueError):
    """Malformed polynomial/matrix text or JSON."""


class NotCubicError(ValueError):
    """Operation requires a homogeneous cubic form."""


class SymmetryError(ValueError):
    """Slice family violates the symmetric-tensor identities."""


class SingularMatrixError(ArithmeticError):
    """Inverse (or another nonsingularity precondition) hit a singular matrix."""


class NotHomogeneousError(ValueError):
    """Operation requires a (nonzero) homogeneous form."""
