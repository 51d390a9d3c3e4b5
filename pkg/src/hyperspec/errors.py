"""Exception hierarchy.

Every error raised on purpose by this package derives from
:class:`HyperspecError`, which is itself a :class:`ValueError` so callers that
only care about "bad input" can catch the builtin.
"""


class HyperspecError(ValueError):
    pass


# hypergraph construction / surgery
class NonUniformEdge(HyperspecError):
    pass


class VertexOutOfRange(HyperspecError):
    pass


class DuplicateEdge(HyperspecError):
    pass


class InputNotATree(HyperspecError):
    pass


class UniformityMismatch(HyperspecError):
    pass


class VertexNotInBase(HyperspecError):
    pass


class ParseError(HyperspecError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# parity
class OddUniformity(HyperspecError):
    pass


class TooLarge(HyperspecError):
    pass


class InvalidBipartition(HyperspecError):
    pass


# tensor evaluation
class DimensionMismatch(HyperspecError):
    pass


class ZeroVector(HyperspecError):
    pass


# solver
class NotConnected(HyperspecError):
    pass


class WrongUniformity(HyperspecError):
    pass


class NoConvergence(HyperspecError):
    """Raised only on request; the solver normally flags non-convergence."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


# structure lab
class BranchNotOddBipartite(HyperspecError):
    pass


class NotPowerHypertree(HyperspecError):
    pass


class ZeroRootEntry(HyperspecError):
    pass


class HypothesisNotMet(HyperspecError):
    pass


class BudgetExceeded(HyperspecError):
    pass
