"""Typed errors shared across the toolkit.

Every mathematically meaningful rejection gets its own class so that the
family scanner can turn failures into skip-with-reason bookkeeping instead
of crashes.
"""

from __future__ import annotations


class G2Error(Exception):
    """Base class; ``code`` is the stable machine-readable reason."""

    code = "error"

    def __init__(self, message: str, **payload):
        super().__init__(message)
        self.payload = payload


class FieldMismatchError(G2Error):
    """Two quadratic-field elements with different radicands d."""

    code = "incompatible-field"


class DomainError(G2Error):
    """Input outside an operation's mathematical domain (e.g. disc of 0)."""

    code = "domain-error"


class ArityError(G2Error):
    code = "arity-mismatch"


class UnsupportedSplittingError(G2Error):
    """Cubic with no rational root; we do not do cubic-field arithmetic.

    Carries the offending polynomial's coefficients for diagnostics.
    """

    code = "unsupported-splitting"


class InvalidDecompositionError(G2Error):
    """P**2 - Q**3 fails to be a separable degree-6 sextic."""

    code = "invalid-decomposition"


class DegenerateModelError(G2Error):
    """A model conversion produced a non-separable sextic (disc = 0)."""

    code = "degenerate-model"


class SingularQuotientError(G2Error):
    code = "singular-quotient"


class NoRationalPointError(G2Error):
    """Rational-point search on a plane cubic exhausted its height bound."""

    code = "no-rational-point"


class ConstraintError(G2Error):
    code = "constraint-violated"


class InternalConsistencyError(G2Error):
    code = "internal-consistency"


class RadicandTooLargeError(G2Error):
    """Could not certify a squarefree radicand within the factoring budget."""

    code = "radicand-too-large"
