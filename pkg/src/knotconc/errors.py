"""Exception types shared across the library."""


class KnotConcError(Exception):
    """Base class for all library errors."""


class ZeroPolynomial(KnotConcError):
    """An operation received the zero polynomial where a nonzero one is required."""


class DivisorNotMonicUnit(KnotConcError):
    """Exact polynomial division requires a divisor with leading coefficient +-1."""


class FactorizationLimit(KnotConcError):
    """A cofactor survived trial division beyond the configured bound."""


class InvalidSeifertMatrix(KnotConcError):
    """The matrix fails a Seifert-matrix invariant (see validate for details)."""


class BadTorusParameter(KnotConcError):
    """T(2,q) needs odd q >= 3."""


class NotAKnotPolynomial(KnotConcError):
    """An Alexander polynomial must satisfy Delta(1) = +-1."""


class NotAPrimePower(KnotConcError):
    """The argument is not of the form p^k with p prime, k >= 1."""


class WitnessSearchExhausted(KnotConcError):
    """No witness cover found within the search bound (indicates a bug)."""


class IdentityViolation(KnotConcError):
    """The cyclotomic product identity failed its self-check (indicates a bug)."""


class DegenerateCase(KnotConcError):
    """The closed-form product degenerates (m = 1); no prediction is made."""


class JumpPoint(KnotConcError):
    """The signature is not defined at a root of the Alexander polynomial."""


class TrivialAngle(KnotConcError):
    """The signature form is identically zero at omega = 1; angle 0 is excluded."""


class SignatureUncertified(KnotConcError):
    """Interval refinement hit the precision ceiling without certifying inertia."""


class PreconditionUnverifiable(KnotConcError):
    """Jump analysis needs all unit-circle Alexander roots at known rational angles."""


class LemmaViolation(KnotConcError):
    """A torus-knot signature assertion failed (indicates a bug)."""


class SeparationFailure(KnotConcError):
    """A witness schedule violates its range-separation invariants."""


class HypothesisNotSatisfied(KnotConcError):
    """The Alexander polynomial does not obstruct: every prime power cover
    is a homology sphere, so no separating family can be built this way."""

    def __init__(self, message, classification=None):
        super().__init__(message)
        self.classification = classification
