"""Exception hierarchy for equivariant-ehrhart.

Every error raised by the library derives from :class:`EhrhartError`. The
command line maps errors flagged ``internal`` to exit code 1 and every other
library error to exit code 2 (a validation failure of the input).
"""


class EhrhartError(Exception):
    """Base class for all library errors.

    Attributes:
        message: Human-readable description
        details: Structured data describing the failure (JSON-serializable)
    """

    internal = False

    def __init__(self, message: str, details: dict | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> dict:
        """Structured violation report used by the command line."""
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


class InvalidInput(EhrhartError):
    """Input data is malformed or inconsistent with other inputs."""


# Groups and characters


class OrderCapExceeded(EhrhartError):
    """Group generated by the supplied elements exceeds the configured order cap."""


class GroupMismatch(EhrhartError):
    """Two class functions (or a class function and a table) live on different groups."""


class NotASubgroup(EhrhartError):
    """Some generator of the proposed subgroup is not an element of the parent group."""


class OutOfRange(EhrhartError):
    """A parameter lies outside the supported range."""


# Polytopes and actions


class NotInvariant(EhrhartError):
    """A group element maps a vertex outside the vertex set."""


class Inconsistent(EhrhartError):
    """No single lattice-preserving affine map realizes the vertex permutation."""


class DimensionTooLarge(EhrhartError):
    """Face enumeration or certification requested above the supported dimension."""


class DegreeExceedsDimension(EhrhartError):
    """An h*-polynomial has degree larger than the polytope dimension."""


class NotInCone(EhrhartError):
    """A point does not belong to the cone over the polytope."""


class HypothesisViolated(EhrhartError):
    """The hypotheses of a closed-form theorem do not hold for the input."""


class VerificationFailed(EhrhartError):
    """An exact consistency check of a computed result failed."""

    internal = True


class NonstandardDenominator(EhrhartError):
    """A rational series cannot be rewritten over (1 - z^N)^D."""


# Graphs and zonotopes


class NotAutomorphism(EhrhartError):
    """The permutation does not preserve the edge set of the graph."""


class DegreeInconsistent(EhrhartError):
    """Cycle-to-cycle degree is not constant along a cycle."""

    internal = True


class TooLarge(EhrhartError):
    """Input exceeds the size handled by an exhaustive enumeration."""


class TooManyGenerators(EhrhartError):
    """Zonotope has more generators than the subset enumeration handles."""


class Dependent(EhrhartError):
    """Vectors spanning a parallelepiped are linearly dependent."""


# Special families


class NotPrime(EhrhartError):
    """Parameter is required to be prime."""


class TNotFixed(EhrhartError):
    """Subset T is not a union of cycles of the cyclic shift."""


class TSizeNotMultiple(EhrhartError):
    """Size of T is not a multiple of the shift order."""


__all__ = [
    "EhrhartError",
    "InvalidInput",
    "OrderCapExceeded",
    "GroupMismatch",
    "NotASubgroup",
    "OutOfRange",
    "NotInvariant",
    "Inconsistent",
    "DimensionTooLarge",
    "DegreeExceedsDimension",
    "NotInCone",
    "HypothesisViolated",
    "VerificationFailed",
    "NonstandardDenominator",
    "NotAutomorphism",
    "DegreeInconsistent",
    "TooLarge",
    "TooManyGenerators",
    "Dependent",
    "NotPrime",
    "TNotFixed",
    "TSizeNotMultiple",
]
