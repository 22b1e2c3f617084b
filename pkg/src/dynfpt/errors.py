"""Exception hierarchy shared by every structure in the package."""


class DynFptError(Exception):
    """Base class for all errors raised by dynfpt."""


class GraphError(DynFptError, ValueError):
    pass


class DuplicateEdge(GraphError):
    pass


class MissingEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class OutOfRange(GraphError, IndexError):
    pass


class DegreeBoundExceeded(GraphError):
    pass


class DuplicateElement(DynFptError, KeyError):
    pass


class MissingElement(DynFptError, KeyError):
    pass


class ForestError(DynFptError):
    pass


class NotARoot(ForestError):
    pass


class SameTree(ForestError):
    pass


class NoSuchForestEdge(ForestError):
    pass


class DifferentTrees(ForestError):
    pass


class NotFree(DynFptError):
    """The vertex is already in the maintained solution."""


class NotInX(DynFptError):
    """The vertex is not in the maintained solution."""


class AssumptionViolated(DynFptError):
    """A removal from the solution would leave an induced P3 behind."""


class StaleLabel(DynFptError, KeyError):
    pass


class CapExceeded(DynFptError):
    pass


class BudgetExceeded(DynFptError):
    pass


class InvariantError(DynFptError, AssertionError):
    """Internal bookkeeping disagrees with a from-scratch recomputation."""


class ParseError(DynFptError, ValueError):
    """Malformed input line; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvalidOp(DynFptError, ValueError):
    """A well-formed line that the current state cannot accept."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
