"""
Exhaustive reference solvers

Every vertex subset is enumerated at once as a row of a 0/1
matrix, so these are only usable up to about 18 vertices. They
share no code with :mod:`cind.oracle` and serve as its check.
"""
import numpy as np

from .graph import VertexSet
from .oracle import OracleResult
from .utils import iter_bits

__all__ = ['naive_max_induced_regular', 'naive_c_ind',
           'naive_independence_number', 'naive_max_mixed_regular',
           'naive_fair_domination_number', 'NAIVE_MAX_N']

#: Largest order the exhaustive solvers accept
NAIVE_MAX_N = 18


def _subsets(G):
    """
    All subsets as rows, and the in-subset degree of every vertex
    """
    n = G.n
    if n > NAIVE_MAX_N:
        raise ValueError(
            "Exhaustive search is limited to {} vertices, got {}".format(
                NAIVE_MAX_N, n))
    masks = np.arange(1 << n, dtype=np.int64)
    member = ((masks[:, None] >> np.arange(n)) & 1).astype(np.int16)
    adjacency = np.zeros((n, n), dtype=np.int16)
    for u, v in G.edges():
        adjacency[u, v] = adjacency[v, u] = 1
    return masks, member, member @ adjacency, adjacency


def _best(masks, member, valid, largest=True):
    sizes = member.sum(axis=1)
    sizes = np.where(valid, sizes, -1 if largest else member.shape[1] + 1)
    value = sizes.max() if largest else sizes.min()
    ties = masks[sizes == value].tolist()
    bits = min(ties, key=lambda b: list(iter_bits(b)))
    return int(value), VertexSet.from_bits(bits)


def naive_max_induced_regular(G, s):
    """
    Largest induced s-regular subgraph by full enumeration

    Returns
    -------
    out : OracleResult
        With the lexicographically smallest optimal vertex set
        and ``explored`` the number of subsets.

    Examples
    --------
    >>> from cind.generators import named
    >>> naive_max_induced_regular(named('K4'), 2)
    OracleResult(value=3, certificate=VertexSet([0, 1, 2]), explored=16)
    """
    masks, member, inside, _ = _subsets(G)
    valid = ((member == 0) | (inside == s)).all(axis=1)
    value, cert = _best(masks, member, valid)
    return OracleResult(value, cert, len(masks))


def naive_c_ind(G):
    return naive_max_induced_regular(G, 2)


def naive_independence_number(G):
    return naive_max_induced_regular(G, 0)


def naive_max_mixed_regular(G):
    """
    Largest induced subgraph with K1, K2 and cycle components

    A subgraph qualifies iff its degrees are at most 2 and every
    edge joins vertices of equal degree.
    """
    masks, member, inside, adjacency = _subsets(G)
    chosen = member == 1
    valid = ((~chosen) | (inside <= 2)).all(axis=1)
    for u, v in zip(*np.nonzero(np.triu(adjacency))):
        both = chosen[:, u] & chosen[:, v]
        valid &= ~both | (inside[:, u] == inside[:, v])
    value, cert = _best(masks, member, valid)
    return OracleResult(value, cert, len(masks))


def naive_fair_domination_number(G):
    """
    Smallest set seen by every outside vertex equally often

    Uses the definition directly: every vertex outside the set
    has the same positive number of neighbors in it. The whole
    vertex set always qualifies.

    Examples
    --------
    >>> from cind.generators import named
    >>> naive_fair_domination_number(named('K4'))
    1
    """
    masks, member, inside, _ = _subsets(G)
    outside = member == 0
    big = G.n + 1
    lo = np.where(outside, inside, big).min(axis=1)
    hi = np.where(outside, inside, -1).max(axis=1)
    everyone = ~outside.any(axis=1)
    valid = everyone | ((lo == hi) & (lo > 0))
    value, _ = _best(masks, member, valid, largest=False)
    return value
