"""Exception hierarchy shared by all polyrook modules."""


class PolyrookError(Exception):
    """Base class for every error raised by this package."""


class InvalidPolyomino(PolyrookError, ValueError):
    pass


class Empty(InvalidPolyomino):
    pass


class Disconnected(InvalidPolyomino):
    pass


class RankOutOfRange(PolyrookError, ValueError):
    pass


class NotParallelogram(PolyrookError, ValueError):
    pass


class PathsCross(PolyrookError, ValueError):
    pass


class EndpointMismatch(PolyrookError, ValueError):
    pass


class InvalidPair(PolyrookError, ValueError):
    pass


class InvalidWord(PolyrookError, ValueError):
    pass


class Incomparable(PolyrookError, ValueError):
    pass


class IsRectangle(PolyrookError, ValueError):
    pass


class ChainExplosion(PolyrookError, RuntimeError):
    pass


class SwitchBrokeInvariant(PolyrookError, AssertionError):
    """A switch produced an attacking rook set; indicates a modelling bug."""


class NonBinomialEncountered(PolyrookError, AssertionError):
    pass


class InexactDivision(PolyrookError, ArithmeticError):
    pass


class NegativeCoefficient(PolyrookError, ArithmeticError):
    pass


class MethodsDisagree(PolyrookError, AssertionError):
    """Independent Gorenstein tests returned different verdicts.

    ``report`` holds the polyomino cells, each method's verdict and witnesses.
    """

    def __init__(self, report):
        super().__init__(f"Gorenstein methods disagree: {report['verdicts']}")
        self.report = report
