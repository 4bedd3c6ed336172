"""Exception taxonomy shared by all modules.

Every error raised on a violated precondition or a failed search derives
from LefschetzError, so callers (and the CLI) can map them to exit codes.
"""


class LefschetzError(Exception):
    """Base class for all library errors."""


# ---- input / structure errors ------------------------------------------


class ParseError(LefschetzError):
    """Malformed complex or fan file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class EmptyFace(LefschetzError):
    """An operation received the empty face where a nonempty one is required."""


class NotAFace(LefschetzError):
    """The given vertex set is not a face of the complex."""


class VertexCollision(LefschetzError):
    """Join operands share vertex labels."""


class NotPure(LefschetzError):
    """The complex is not pure (facets of unequal dimension)."""


class BadIndex(LefschetzError):
    """Move or degree index out of range."""


class InvalidMove(LefschetzError):
    """Bistellar move preconditions fail on this complex."""


class NoMoveAvailable(LefschetzError):
    """No valid bistellar move exists under the walk policy."""


class DegreeOutOfRange(LefschetzError):
    """Requested graded piece outside the computed range."""


class ShapeMismatch(LefschetzError):
    """Matrix or vector dimensions are incompatible."""


class LengthMismatch(LefschetzError):
    """Graded vector has the wrong length."""


class InvalidFan(LefschetzError):
    """Fan is not simplicial, not complete, or structurally broken."""


# ---- algebraic precondition errors -------------------------------------


class NotLsop(LefschetzError):
    """The linear system is not a linear system of parameters."""


class NotCohenMacaulay(LefschetzError):
    """Complex fails the Reisner criterion over the requested field."""


class NotGorensteinStar(LefschetzError):
    """Complex is not a homology sphere over the requested field."""


class NotBuchsbaum(LefschetzError):
    """Complex is not Buchsbaum over the requested field."""


class NotAManifold(LefschetzError):
    """Complex is not a homology manifold over the requested field."""


class NotConnected(LefschetzError):
    """Operation requires a connected complex."""


class NotOrientableManifold(LefschetzError):
    """Operation requires an orientable homology manifold."""


class HypothesisViolated(LefschetzError):
    """Structural hypothesis of a lemma check fails for the given input."""


# ---- search / verification failures -------------------------------------


class GenericityExhausted(LefschetzError):
    """Random sampling failed to produce a valid system within the retry cap."""


class SearchExhausted(LefschetzError):
    """Randomized search used up its trial budget without success."""


class TransferFailed(LefschetzError):
    """Lefschetz transfer across a bistellar move failed."""

    def __init__(self, message, tried=None):
        super().__init__(message)
        self.tried = tuple(tried or ())


class CertificationFailed(LefschetzError):
    """A lifted witness did not re-verify over the rationals."""


class SchenzelMismatch(LefschetzError):
    """Ring dimensions disagree with the Betti-corrected h-vector formula."""


class FormulaMismatch(LefschetzError):
    """Computed socle dimensions disagree with the predicted values."""


class LawViolated(LefschetzError):
    """A g-vector increment law fails across a bistellar move."""
