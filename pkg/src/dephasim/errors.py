"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside an operation's documented domain."""


class ParticleKindError(DomainError):
    """Particle species does not match the requested operation."""


class PathValidationError(DomainError):
    """A two-arm path violates a geometric invariant; message names it."""


class QuadratureConvergenceError(RuntimeError):
    """Panel refinement exhausted without meeting the tolerance.

    Carries the last two estimates so callers can judge how far apart
    they were.
    """

    def __init__(self, message, coarse, fine):
        super().__init__(message)
        self.coarse = coarse
        self.fine = fine


class PhaseFormError(RuntimeError):
    """Extracted coefficients fail to reconstruct the sampled phase.

    Signals a field/geometry combination whose emission-time dependence
    is not a single-harmonic cosine/sine pair.
    """


class PatternSpanError(DomainError):
    """Fringe pattern does not span a full period."""
