"""Exception types raised across the package."""


class FatPointsError(Exception):
    """Base class for every error raised by :mod:`fatpoints`."""


class InvalidDelta(FatPointsError, ValueError):
    """A sequence is not the first difference of a Hilbert function of points.

    ``condition`` is ``"a"`` (the initial staircase ``h_i = i + 1`` breaks
    upwards) or ``"b"`` (an increase after the staircase), ``index`` the
    offending position.
    """

    def __init__(self, message, condition=None, index=None):
        super().__init__(message)
        self.condition = condition
        self.index = index


class NotNondecreasing(FatPointsError, ValueError):
    pass


class ExceptionalT(FatPointsError, ValueError):
    """Raised for t = 2 and t = 5, where generic double points are defective."""


class IdenticalLines(FatPointsError, ValueError):
    pass


class GenerationExhausted(FatPointsError, RuntimeError):
    pass


class NotStrictlyDecreasing(FatPointsError, ValueError):
    pass


class NotFullReduction(FatPointsError, ValueError):
    pass


class CapExceeded(FatPointsError, RuntimeError):
    pass


class ArityMismatch(FatPointsError, ValueError):
    pass


class HypothesisViolation(FatPointsError, ValueError):
    """A merge was requested on a scheme that breaks one of its preconditions.

    ``condition`` is one of ``"a"`` .. ``"e"`` in the usual labelling of the
    merge hypotheses (support on the lines, doubles at intersections, reduced
    points off intersections, strictly decreasing reduction vector, and the
    availability of the three reduced points and of the intersection).
    """

    def __init__(self, condition, message):
        super().__init__(f"hypothesis ({condition}) violated: {message}")
        self.condition = condition
