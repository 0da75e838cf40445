"""Exception hierarchy shared across the package.

Structural errors (bad shapes, mismatched instances, malformed tables) are
kept distinct from numerical verification failures: a verifier returns a
failing report for the latter and raises for the former.
"""


class PivotfunError(Exception):
    """Base class for all package errors."""


class StructuralError(PivotfunError):
    """Shapes, instances or table layouts do not line up."""


class ShapeMismatchError(StructuralError):
    pass


class InstanceMismatchError(StructuralError):
    """FHilb and GHilb values were mixed in one operation."""


class UnsupportedInstanceError(StructuralError):
    """Operation is only defined for one concrete category instance."""


class SizeError(StructuralError):
    """Requested matrix would exceed the configured size limit."""


class NotAnIdempotentError(PivotfunError):
    """Input to a splitting routine is not a dagger idempotent within tolerance."""


class NonInvertibleError(PivotfunError):
    """Matrix is singular within tolerance."""


class DegenerateDimensionError(PivotfunError):
    """A categorical dimension scalar is too close to zero to normalise by."""
