"""
Exact solvers for induced regular subgraph problems

All solvers share one branch-and-bound over in/out decisions on
the vertices. Problems differ only in the :class:`Constraint`
that propagates forced decisions, bounds the attainable order
and accepts complete assignments.
"""
import logging
from collections import namedtuple

from .exceptions import BudgetExceededError, NotRegularError
from .graph import VertexSet
from .options import resolve
from .utils import iter_bits

__all__ = ['OracleResult', 'c_ind_exact', 'independence_number',
           'max_induced_regular', 'fair_domination_number_regular',
           'min_fair_dominating_set', 'max_mixed_regular',
           'branch_and_bound']

logger = logging.getLogger(__name__)


class OracleResult(namedtuple('OracleResult',
                              ['value', 'certificate', 'explored'])):
    """
    Optimum of an exact solver

    Parameters
    ----------
    value : int
        Optimum order.
    certificate : VertexSet
        The lexicographically smallest optimal vertex set.
    explored : int
        Number of search nodes visited.
    """
    __slots__ = ()


class Constraint:
    """
    Feasibility rules of a vertex selection problem

    The search state is a pair of bitmasks ``(S, U)``, the
    selected and the undecided vertices. Everything else is
    excluded.
    """
    name = 'constraint'

    def propagate(self, rows, S, U):
        """
        Apply forced decisions

        Returns the new ``(S, U)`` or ``None`` if no completion
        of the state is feasible.
        """
        return S, U

    def bound(self, rows, S, U):
        """
        Upper bound on the order of any completion
        """
        return S.bit_count() + U.bit_count()

    def accept(self, rows, S):
        """
        Whether a complete selection is feasible
        """
        raise NotImplementedError


class ExactDegree(Constraint):
    """
    Every selected vertex has exactly ``s`` selected neighbors
    """

    def __init__(self, s):
        self.s = s
        self.name = 'induced {}-regular'.format(s)

    def propagate(self, rows, S, U):
        s = self.s
        changed = True
        while changed:
            changed = False
            for v in iter_bits(S):
                ds = (rows[v] & S).bit_count()
                if ds > s:
                    return None
                free = rows[v] & U
                avail = free.bit_count()
                if ds + avail < s:
                    return None
                if free and ds == s:
                    U &= ~free
                    changed = True
                elif free and ds + avail == s:
                    S |= free
                    U &= ~free
                    changed = True
            for u in iter_bits(U):
                if ((rows[u] & S).bit_count() > s
                        or (rows[u] & (S | U)).bit_count() < s):
                    U &= ~(1 << u)
                    changed = True
        return S, U

    def accept(self, rows, S):
        s = self.s
        return all((rows[v] & S).bit_count() == s for v in iter_bits(S))


class IndependentSet(ExactDegree):
    """
    No two selected vertices are adjacent

    The bound subtracts a greedy matching of the undecided
    vertices; at most one end of each matched edge is selected.
    """

    def __init__(self):
        super().__init__(0)
        self.name = 'independent set'

    def bound(self, rows, S, U):
        free = U
        matched = 0
        while free:
            u = free & -free
            free ^= u
            partners = rows[u.bit_length() - 1] & free
            if partners:
                free ^= partners & -partners
                matched += 1
        return S.bit_count() + U.bit_count() - matched


class MixedDegree(Constraint):
    """
    Every component of the selection is K1, K2 or a cycle

    Equivalently every selected vertex has at most two selected
    neighbors and adjacent selected vertices have equal degree
    in the selection.
    """
    name = 'K1/K2/cycle'

    def propagate(self, rows, S, U):
        changed = True
        while changed:
            changed = False
            lo = {}
            hi = {}
            for v in iter_bits(S):
                ds = (rows[v] & S).bit_count()
                if ds > 2:
                    return None
                free = rows[v] & U
                if free and ds == 2:
                    U &= ~free
                    free = 0
                    changed = True
                lo[v] = ds
                hi[v] = min(2, ds + free.bit_count())
            for v in lo:
                for w in iter_bits(rows[v] & S):
                    if hi[w] < lo[v] or hi[v] < lo[w]:
                        return None
            for u in iter_bits(U):
                if (rows[u] & S).bit_count() > 2:
                    U &= ~(1 << u)
                    changed = True
        return S, U

    def accept(self, rows, S):
        degree = {v: (rows[v] & S).bit_count() for v in iter_bits(S)}
        for v, d in degree.items():
            if d > 2:
                return False
            for w in iter_bits(rows[v] & S):
                if degree[w] != d:
                    return False
        return True


def branch_and_bound(G, constraint, budget=None):
    """
    Maximum order selection satisfying a constraint

    Branches on the least undecided vertex, selecting it first,
    and only replaces the incumbent by strictly larger
    selections. The result is therefore the lexicographically
    smallest optimal selection.

    Parameters
    ----------
    G : Graph
        Host graph.
    constraint : Constraint
        Problem definition.
    budget : int, optional
        Node budget. Defaults to the ``node_budget`` option.

    Returns
    -------
    out : OracleResult

    Raises
    ------
    BudgetExceededError
        If more than ``budget`` nodes are visited.
    """
    budget = resolve('node_budget', budget)
    rows = G.rows
    best, best_bits = -1, 0
    explored = 0
    stack = [(0, G.vertex_bits)]
    while stack:
        S, U = stack.pop()
        explored += 1
        if explored > budget:
            raise BudgetExceededError(budget)
        state = constraint.propagate(rows, S, U)
        if state is None:
            continue
        S, U = state
        if not U:
            size = S.bit_count()
            if size > best and constraint.accept(rows, S):
                best, best_bits = size, S
            continue
        if constraint.bound(rows, S, U) <= best:
            continue
        low = U & -U
        stack.append((S, U ^ low))
        stack.append((S | low, U ^ low))

    logger.debug('%s on %r: value=%d explored=%d',
                 constraint.name, G, best, explored)
    return OracleResult(best, VertexSet.from_bits(best_bits), explored)


def c_ind_exact(G, budget=None):
    """
    Maximum order of an induced 2-regular subgraph

    Parameters
    ----------
    G : Graph
        Any graph.
    budget : int, optional
        Node budget. Defaults to the ``node_budget`` option.

    Returns
    -------
    out : OracleResult
        Value 0 with the empty certificate if ``G`` is a forest.

    Examples
    --------
    >>> from cind.generators import named
    >>> res = c_ind_exact(named('K4'))
    >>> res.value, res.certificate
    (3, VertexSet([0, 1, 2]))
    >>> c_ind_exact(named('Petersen')).value
    6
    """
    return branch_and_bound(G, ExactDegree(2), budget)


def independence_number(G, budget=None):
    """
    Maximum independent set

    Examples
    --------
    >>> from cind.generators import named
    >>> independence_number(named('Petersen')).value
    4
    """
    return branch_and_bound(G, IndependentSet(), budget)


def max_induced_regular(G, s, budget=None):
    """
    Maximum order of an induced s-regular subgraph

    Parameters
    ----------
    G : Graph
        Any graph.
    s : int
        Required degree. ``s=0`` gives the independence number,
        ``s=2`` gives :func:`c_ind_exact`.
    budget : int, optional
        Node budget. Defaults to the ``node_budget`` option.

    Examples
    --------
    >>> from cind.generators import named
    >>> max_induced_regular(named('K4'), 1).value
    2
    >>> max_induced_regular(named('K33'), 0).value
    3
    """
    if s < 0:
        raise ValueError("Degree must be non-negative, got {}".format(s))
    if s == 0:
        return independence_number(G, budget)
    return branch_and_bound(G, ExactDegree(s), budget)


def _regular_degree(G):
    degrees = set(G.degrees())
    if len(degrees) > 1:
        raise NotRegularError('degrees {}'.format(sorted(degrees)))
    return degrees.pop() if degrees else 0


def _best_lower_regular(G, budget):
    r = _regular_degree(G)
    best = OracleResult(0, VertexSet(), 0)
    for s in range(r):
        res = max_induced_regular(G, s, budget)
        if res.value > best.value:
            best = res
    return best


def fair_domination_number_regular(G, budget=None):
    """
    Fair domination number of a regular graph

    For an r-regular graph it is ``n`` minus the largest order of
    an induced s-regular subgraph with ``s < r``.

    Raises
    ------
    NotRegularError
        If ``G`` is not regular.

    Examples
    --------
    >>> from cind.generators import named
    >>> fair_domination_number_regular(named('K4'))
    1
    >>> fair_domination_number_regular(named('Petersen'))
    4
    """
    return G.n - _best_lower_regular(G, budget).value


def min_fair_dominating_set(G, budget=None):
    """
    A minimum fair dominating set of a regular graph

    The complement of a largest induced s-regular subgraph with
    ``s < r``. Every vertex outside it has exactly ``r - s``
    neighbors inside it.

    Returns
    -------
    out : VertexSet
    """
    best = _best_lower_regular(G, budget)
    return VertexSet.from_bits(G.vertex_bits & ~best.certificate.bits)


def max_mixed_regular(G, budget=None):
    """
    Largest induced subgraph whose components are K1, K2 or cycles

    Examples
    --------
    >>> from cind.generators import named
    >>> max_mixed_regular(named('Petersen')).value
    7
    """
    return branch_and_bound(G, MixedDegree(), budget)
