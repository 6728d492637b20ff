"""Exception hierarchy for solvrad.

Every error raised on purpose by the library derives from :class:`GroupError`.
Theorem-violation signals are kept apart from ordinary failures so that callers
(and the CLI) can never confuse them with a plain ``False``.
"""


class GroupError(Exception):
    """Base class for all solvrad errors."""


class MalformedCycle(GroupError, ValueError):
    pass


class PointOutOfRange(GroupError, ValueError):
    pass


class DegreeMismatch(GroupError, ValueError):
    pass


class EmptyGeneratorList(GroupError, ValueError):
    pass


class GroupTooLarge(GroupError):
    pass


class NotNormal(GroupError, ValueError):
    pass


class NotSolvable(GroupError, ValueError):
    pass


class TrivialGroup(GroupError, ValueError):
    pass


class QuotientNotSolvable(GroupError, ValueError):
    pass


class VNotMinimalNormal(GroupError, ValueError):
    pass


class BudgetExceeded(GroupError):
    pass


class SearchBudgetExceeded(BudgetExceeded):
    pass


class EmptyClass(GroupError, ValueError):
    pass


class NotPrimeOrder(GroupError, ValueError):
    pass


class OrderConditionViolated(GroupError, ValueError):
    pass


class ElementNotInGroup(GroupError, ValueError):
    pass


class ZeroVector(GroupError, ValueError):
    pass


class ModularCharacteristic(GroupError, ValueError):
    pass


class HypothesisNotMet(GroupError, ValueError):
    """A precondition of the fixed-space bound check failed.

    ``which`` names the failed hypothesis.
    """

    def __init__(self, which, message=None):
        self.which = which
        super().__init__(message or f"hypothesis not met: {which}")


class ParameterOutOfRange(GroupError, ValueError):
    pass


class OrderMismatch(GroupError):
    pass


class MalformedFile(GroupError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TheoremViolationSuspected(GroupError):
    """A computation contradicted one of the verified theorems.

    This is the headline event of a verification run and is never reported as
    an ordinary negative answer.
    """

    def __init__(self, message, details=None):
        self.details = details or {}
        super().__init__(message)
