"""
Lower bounds on c_ind and their checkers

All arithmetic is exact, with :class:`fractions.Fraction`.
"""
from collections import namedtuple
from fractions import Fraction
from numbers import Integral

from .cycles import ACYCLIC, chordality
from .greedy import greedy_decompose
from .oracle import c_ind_exact, independence_number

__all__ = ['chordal_bound', 'regular_bound', 'check_chordal_bound',
           'check_independence_bound', 'ChordalBoundReport',
           'IndependenceBoundReport']


ChordalBoundReport = namedtuple('ChordalBoundReport', [
    'n', 'k', 'bound', 'greedy_order', 'oracle_order', 'verdict'])


class IndependenceBoundReport(namedtuple('IndependenceBoundReport', [
        'n', 'eps', 'alpha', 'alpha_limit', 'c_ind', 'c_ind_limit',
        'greedy_order', 'status'])):
    """
    Outcome of :func:`check_independence_bound`

    ``status`` is ``'pass'``, ``'fail'`` or ``'hypothesis not met'``.
    When the hypothesis holds, ``greedy_order`` must exceed
    ``c_ind_limit`` as well; a greedy shortfall is a failure.
    """
    __slots__ = ()

    @property
    def hypothesis(self):
        return self.status != 'hypothesis not met'

    @property
    def verdict(self):
        return self.status != 'fail'


def chordal_bound(n, k):
    """
    Lower bound ``(n-2)/(4-4/k)`` for connected cubic k-chordal graphs

    Parameters
    ----------
    n : int
        Order, at least 2.
    k : int
        Chordality, at least 3.

    Returns
    -------
    out : Fraction

    Examples
    --------
    >>> chordal_bound(12, 4)
    Fraction(10, 3)
    >>> chordal_bound(26, 3)
    Fraction(9, 1)
    """
    if k is ACYCLIC or not isinstance(k, Integral) or k < 3:
        raise ValueError("k must be an integer >= 3, got {!r}".format(k))
    if n < 2:
        raise ValueError("n must be at least 2, got {}".format(n))
    return Fraction(n - 2) / (4 - Fraction(4, k))


def regular_bound(n, r):
    """
    Lower bound ``n/(2(r-1)) + 1/((r-1)(r-2))`` for r-regular graphs

    For ``r = 3`` this is ``(n+2)/4``.

    Examples
    --------
    >>> regular_bound(10, 3)
    Fraction(3, 1)
    >>> regular_bound(12, 4)
    Fraction(13, 6)
    """
    if r < 3:
        raise ValueError("r must be at least 3, got {}".format(r))
    return Fraction(n, 2 * (r - 1)) + Fraction(1, (r - 1) * (r - 2))


def check_chordal_bound(G, oracle=False, budget=None):
    """
    Compare the greedy order with the chordality bound

    Parameters
    ----------
    G : Graph
        Connected cubic graph.
    oracle : bool
        If ``True``, also compute the exact ``c_ind``.
    budget : int, optional
        Node budget of the oracle.

    Returns
    -------
    out : ChordalBoundReport
        ``verdict`` is ``True`` iff the greedy order reaches the
        bound (and the oracle, when computed, is not smaller than
        the greedy order).

    Examples
    --------
    >>> from cind.generators import named
    >>> report = check_chordal_bound(named('K4'))
    >>> report.k, report.bound, report.greedy_order, report.verdict
    (3, Fraction(3, 4), 3, True)
    """
    trace = greedy_decompose(G)
    k = chordality(G)
    bound = chordal_bound(G.n, k)
    order = trace.order
    verdict = order >= bound
    oracle_order = None
    if oracle:
        oracle_order = c_ind_exact(G, budget).value
        verdict = verdict and oracle_order >= order
    return ChordalBoundReport(G.n, k, bound, order, oracle_order, verdict)


def check_independence_bound(G, eps, budget=None):
    """
    Check ``c_ind > (1/4+eps)n - 1`` when ``alpha <= (3/8-eps)n``

    Both sides are computed with the exact oracles. The greedy
    order alone satisfies the same conclusion under the same
    hypothesis, so it is checked too.

    Parameters
    ----------
    G : Graph
        Connected cubic graph.
    eps : Fraction or str
        ``0 < eps < 3/8``.
    budget : int, optional
        Node budget of the oracles.

    Returns
    -------
    out : IndependenceBoundReport

    Examples
    --------
    >>> from cind.generators import named
    >>> check_independence_bound(named('K4'), Fraction(1, 8)).status
    'pass'
    >>> check_independence_bound(named('Petersen'), '1/40').status
    'hypothesis not met'
    """
    eps = Fraction(eps)
    if not 0 < eps < Fraction(3, 8):
        raise ValueError(
            "eps must lie strictly between 0 and 3/8, got {}".format(eps))
    n = G.n
    trace = greedy_decompose(G)
    alpha = independence_number(G, budget).value
    alpha_limit = (Fraction(3, 8) - eps) * n
    c_ind_limit = (Fraction(1, 4) + eps) * n - 1
    if alpha > alpha_limit:
        return IndependenceBoundReport(
            n, eps, alpha, alpha_limit, None, c_ind_limit,
            trace.order, 'hypothesis not met')

    c_ind = c_ind_exact(G, budget).value
    ok = c_ind > c_ind_limit and trace.order > c_ind_limit
    return IndependenceBoundReport(
        n, eps, alpha, alpha_limit, c_ind, c_ind_limit,
        trace.order, 'pass' if ok else 'fail')
