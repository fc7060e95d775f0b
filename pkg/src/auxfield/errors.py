"""Exception hierarchy.

Validation problems derive from :class:`SpecError` (a ``ValueError``); numerical
failures derive from :class:`SolverError` (a ``RuntimeError``). The CLI maps the
first family to exit code 1 and the second to exit code 2.
"""


class AuxFieldError(Exception):
    """Base class for every error raised by this package."""


class SpecError(AuxFieldError, ValueError):
    """An input specification is malformed or inconsistent."""


class SolverError(AuxFieldError, RuntimeError):
    """A numerical procedure failed to produce an answer."""


class NonrelZeroMass(SpecError):
    pass


class DegenerateTangent(SpecError):
    pass


class CoulombAuxManyBody(SpecError):
    """A non-quadratic auxiliary form was requested for N >= 3."""


class NonSWave(SpecError):
    pass


class OutOfTableRange(SpecError):
    pass


class NotLowerBoundable(SpecError):
    pass


class NotShortRange(SpecError):
    pass


class OracleUnavailable(SpecError):
    pass


class NoRoot(SolverError):
    pass


class MultipleRoots(SolverError):
    """Several admissible solutions were found; ``brackets`` lists them."""

    def __init__(self, message, brackets=()):
        super().__init__(message)
        self.brackets = list(brackets)


class NonConvergence(SolverError):
    pass


class NotConverged(SolverError):
    pass


class NoBoundState(SolverError):
    pass


class NoTangency(SolverError):
    pass


class ZeroDenominator(SolverError):
    pass
