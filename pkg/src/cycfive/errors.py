"""Exception hierarchy shared by every module.

The CLI maps these onto stable exit codes, so new errors should subclass the
closest existing category rather than ``CycFiveError`` directly.
"""


class CycFiveError(Exception):
    """Base class for all library errors."""


class MalformedInput(CycFiveError):
    pass


class DegreeViolation(MalformedInput):
    pass


class PreconditionViolated(CycFiveError):
    pass


class EmptyOrFullSet(PreconditionViolated):
    pass


class Disconnected(PreconditionViolated):
    pass


class NotCubic(PreconditionViolated):
    pass


class NotMinimumCut(PreconditionViolated):
    pass


class NotAPermutation(PreconditionViolated):
    pass


class InvariantViolation(PreconditionViolated):
    """A cyclic part failed validation. ``clause`` names the failed check."""

    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        msg = clause if not detail else f"{clause}: {detail}"
        super().__init__(msg)


class NotAValidPart(InvariantViolation):
    pass


class IsFiveCycle(CycFiveError):
    def __init__(self, msg: str = "five-cycle part"):
        super().__init__(msg)


class InternalContradiction(CycFiveError):
    """A constructive step found nothing although the theory guarantees a result."""


class DistributionViolated(CycFiveError):
    pass


class RepairFailed(CycFiveError):
    pass


class TooLarge(CycFiveError):
    pass
