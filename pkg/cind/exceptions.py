"""
Exceptions raised by cind
"""

__all__ = ['GraphError', 'VertexRangeError', 'SelfLoopError',
           'DuplicateEdgeError', 'PreconditionError',
           'NotRegularError', 'ExceptionalGraphError',
           'BudgetExceededError', 'InternalConsistencyError',
           'GraphFormatError']


class GraphError(ValueError):
    """
    Edges passed to the graph constructor are invalid
    """


class VertexRangeError(GraphError):
    """
    An edge endpoint is outside ``0..n-1``
    """


class SelfLoopError(GraphError):
    """
    An edge joins a vertex to itself
    """


class DuplicateEdgeError(GraphError):
    """
    The same unordered pair was given twice
    """


class PreconditionError(ValueError):
    """
    The input does not satisfy the requirements of an operation

    Parameters
    ----------
    check : str
        Short name of the check that failed, e.g.
        ``'not cubic'``.
    detail : str, optional
        Extra information appended to the message.
    """
    def __init__(self, check, detail=None):
        self.check = check
        msg = check if detail is None else '{}: {}'.format(check, detail)
        super().__init__(msg)


class NotRegularError(PreconditionError):
    """
    The graph is not regular
    """
    def __init__(self, detail=None):
        super().__init__('not regular', detail)


class ExceptionalGraphError(PreconditionError):
    """
    The graph is one of K4, K3,3 or the prism
    """
    def __init__(self, name):
        self.name = name
        super().__init__('2-connected exceptional', name)


class BudgetExceededError(RuntimeError):
    """
    A search visited more nodes than it was allowed to

    Parameters
    ----------
    budget : int
        The node budget that was in force.
    """
    def __init__(self, budget):
        self.budget = budget
        super().__init__(
            "Search exceeded the node budget of {}".format(budget))


class InternalConsistencyError(AssertionError):
    """
    A computation reached a state the theory rules out

    These are bugs, not input errors.
    """


class GraphFormatError(ValueError):
    """
    Malformed graph encoding

    Parameters
    ----------
    msg : str
        What went wrong.
    offset : int, optional
        Byte offset (graph6) of the offending character.
    line : int, optional
        1-based line number (edge list) of the offending line.
    """
    def __init__(self, msg, offset=None, line=None):
        self.offset = offset
        self.line = line
        if offset is not None:
            msg = '{} at offset {}'.format(msg, offset)
        elif line is not None:
            msg = '{} on line {}'.format(msg, line)
        super().__init__(msg)
