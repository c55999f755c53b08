"""Exception hierarchy.

Every error carries an optional ``step`` (the pipeline stage that raised it)
and maps onto one of three CLI exit codes through its base class.
"""


class TwistError(Exception):
    """Base class. ``exit_code`` is what the command line reports."""

    exit_code = 4

    def __init__(self, message="", step=None):
        super().__init__(message)
        self.step = step

    def __str__(self):
        msg = super().__str__()
        if self.step is not None:
            return "step %s: %s" % (self.step, msg)
        return msg


class InvalidInput(TwistError, ValueError):
    exit_code = 2


class Unsupported(TwistError):
    exit_code = 3


class InternalError(TwistError, AssertionError):
    exit_code = 4


# field layer
class FieldMismatch(InvalidInput):
    pass


class NotInSubfield(InvalidInput):
    pass


class NotFoundInCyclotomicTower(Unsupported):
    pass


# curves, conics, automorphisms
class NotSeparable(InvalidInput):
    pass


class SingularInput(InvalidInput):
    pass


class NoRationalPoint(InvalidInput):
    pass


class DegenerateConic(InvalidInput):
    pass


class ConstantNotMinusFourthPower(InvalidInput):
    pass


class TransportError(InvalidInput):
    pass


class InconsistentGenerators(InvalidInput):
    pass


class NotProportional(InvalidInput):
    pass


class InvalidOverride(InvalidInput):
    pass


# internal
class AllCandidatesSingular(InternalError):
    pass


class ZeroScalar(InternalError):
    pass


class NoCharacterMatch(InternalError):
    pass


class VerificationFailed(InternalError):
    pass
