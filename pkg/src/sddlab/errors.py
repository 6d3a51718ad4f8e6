"""Exception hierarchy shared by every module.

Errors split into two families so the CLI can map them onto exit codes:
``ParseError`` (bad input text, exit 2) and ``PreconditionError`` (a valid
object that an operation refuses, exit 3).
"""


class SddLabError(Exception):
    """Base class for all library errors."""


class ParseError(SddLabError, ValueError):
    pass


class PreconditionError(SddLabError, ValueError):
    pass


class MalformedGraph6(ParseError):
    pass


class MalformedEdgeList(ParseError):
    pass


class LoopEdge(PreconditionError):
    pass


class DuplicateEdge(PreconditionError):
    pass


class VertexOutOfRange(PreconditionError):
    pass


class EmptyGraph(PreconditionError):
    pass


class BadParameter(PreconditionError):
    pass


class NoEdges(PreconditionError):
    pass


class TooSmall(PreconditionError):
    pass


class TooLarge(PreconditionError):
    pass


class IsolatedVertex(PreconditionError):
    pass


class ZeroDegreeNegativeExponent(PreconditionError):
    pass


class HypothesisNotMet(PreconditionError):
    """The graph lies outside a theorem's scope. Not a violation."""


class NotMinimalEdge(PreconditionError):
    pass


class Infeasible(PreconditionError):
    pass
