"""
Named graphs and random instances
"""
import numpy as np

from .blocks import BlockKind, labels_for_degree
from .graph import build_graph
from .options import resolve
from .structure import BlockDecomposition, assemble

__all__ = ['named', 'NAMED_GRAPHS', 'ladder_family', 'random_graph',
           'random_cubic_connected', 'random_tree',
           'random_4chordal_cubic']


def _petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def _necklace():
    # top path 0..5, bottom path 6..11, crossed in pairs of columns
    top = [(i, i + 1) for i in range(5)]
    bottom = [(6 + i, 7 + i) for i in range(5)]
    crosses = [(0, 7), (1, 6), (2, 9), (3, 8), (4, 11), (5, 10)]
    return build_graph(12, top + bottom + crosses + [(6, 11), (0, 5)])


def _twin_dprime():
    tree = build_graph(2, [(0, 1)])
    dprime = BlockKind('Dprime')
    return assemble(BlockDecomposition(tree, [dprime, dprime]))


_BUILDERS = {
    'Petersen': _petersen,
    'necklace': _necklace,
    'twin_dprime': _twin_dprime,
}

#: Names accepted by :func:`named`
NAMED_GRAPHS = ('K3', 'K4', 'D', 'Dprime', 'Prism', 'K23', 'K33',
                'K33minus', 'Petersen', 'necklace', 'twin_dprime')

# Other names of graphs in NAMED_GRAPHS
_NAME_ALIASES = {'Figure1': 'necklace'}


def named(name):
    """
    Construct a named graph

    Parameters
    ----------
    name : str
        One of :data:`NAMED_GRAPHS`. The block kinds use their
        template vertex order. ``'necklace'`` is a cubic
        graph on 12 vertices with ``c_ind = n/2 = 6`` and
        chordality 6, also accepted as ``'Figure1'``;
        ``'twin_dprime'`` is two D' joined by a bridge, the
        smallest graph the solver bottoms out on.

    Returns
    -------
    out : Graph

    Examples
    --------
    >>> named('Petersen')
    Graph(n=10, m=15)
    >>> named('D').degrees()
    (2, 3, 3, 2)
    >>> named('Figure1') == named('necklace')
    True
    >>> named('K5')
    Traceback (most recent call last):
        ...
    ValueError: Unknown graph name 'K5'
    """
    name = _NAME_ALIASES.get(name, name)
    if name not in NAMED_GRAPHS:
        raise ValueError("Unknown graph name {!r}".format(name))
    try:
        return _BUILDERS[name]()
    except KeyError:
        return BlockKind(name).template


_LADDER_TAGS = {
    'ladder': 'Ladder',
    'B': 'Ladder',
    'ladder_prime': 'LadderPrime',
    'Bprime': 'LadderPrime',
    'ladder_double_prime': 'LadderDoublePrime',
    'Bdoubleprime': 'LadderDoublePrime',
}


def ladder_family(kind, k):
    """
    Ladder ``P2 x Pk`` and its primed variants

    Parameters
    ----------
    kind : str
        ``'ladder'``, ``'ladder_prime'`` (an apex on the last
        rung) or ``'ladder_double_prime'`` (apexes on both end
        rungs). ``'B'``, ``'Bprime'`` and ``'Bdoubleprime'`` are
        accepted too.
    k : int
        Number of rungs, at least 2.

    Returns
    -------
    out : Graph
        Of order ``2k``, ``2k+1`` and ``2k+2`` respectively.

    Examples
    --------
    >>> ladder_family('ladder', 2).edges()
    [(0, 1), (0, 2), (1, 3), (2, 3)]
    >>> ladder_family('Bprime', 2).degrees().count(2)
    3
    """
    try:
        tag = _LADDER_TAGS[kind]
    except KeyError:
        raise ValueError("Unknown ladder kind {!r}".format(kind))
    return BlockKind(tag, k).template


def random_cubic_connected(n, seed=None, attempts=None):
    """
    Random connected simple cubic graph from the pairing model

    Three points per vertex are matched uniformly at random;
    matchings with loops, parallel edges or more than one
    component are rejected.

    Parameters
    ----------
    n : int
        Even order, at least 4.
    seed : int or numpy.random.Generator, optional
        Same seed, same graph.
    attempts : int, optional
        Matchings to draw before giving up. Defaults to the
        ``pairing_attempts`` option.

    Returns
    -------
    out : Graph

    Raises
    ------
    RuntimeError
        If every attempt is rejected.

    Examples
    --------
    >>> random_cubic_connected(4, seed=7).m
    6
    >>> random_cubic_connected(7)
    Traceback (most recent call last):
        ...
    ValueError: Cubic graphs need an even order >= 4, got 7
    """
    if n < 4 or n % 2:
        raise ValueError(
            "Cubic graphs need an even order >= 4, got {}".format(n))
    attempts = resolve('pairing_attempts', attempts)
    rng = np.random.default_rng(seed)
    points = np.repeat(np.arange(n), 3)
    for _ in range(attempts):
        pairs = rng.permutation(points).reshape(-1, 2)
        lo, hi = pairs.min(axis=1), pairs.max(axis=1)
        if (lo == hi).any():
            continue
        if len(np.unique(lo * n + hi)) < len(lo):
            continue
        G = build_graph(n, zip(lo.tolist(), hi.tolist()))
        if G.is_connected():
            return G
    raise RuntimeError(
        "No connected simple cubic graph on {} vertices in {} "
        "pairings".format(n, attempts))


def random_tree(order, seed=None, max_degree=4):
    """
    Random tree with bounded degree

    Vertex ``i`` is attached to a uniformly chosen earlier
    vertex that still has room.

    Parameters
    ----------
    order : int
        Number of vertices, at least 1.
    seed : int or numpy.random.Generator, optional
    max_degree : int
        At least 2.

    Returns
    -------
    out : Graph

    Examples
    --------
    >>> T = random_tree(6, seed=1, max_degree=2)
    >>> T.m, max(T.degrees())
    (5, 2)
    """
    if order < 1:
        raise ValueError("Tree order must be positive, got {}".format(order))
    if max_degree < 2:
        raise ValueError(
            "max_degree must be at least 2, got {}".format(max_degree))
    rng = np.random.default_rng(seed)
    degree = [0] * order
    edges = []
    for v in range(1, order):
        room = [u for u in range(v) if degree[u] < max_degree]
        u = room[rng.integers(len(room))]
        edges.append((u, v))
        degree[u] += 1
        degree[v] += 1
    return build_graph(order, edges)


def random_4chordal_cubic(tree_order, seed=None, max_ladder_length=None,
                          return_decomposition=False):
    """
    Random connected cubic 4-chordal graph

    A random tree of maximum degree 4 gets a random admissible
    block kind on every vertex and random slots on every edge;
    the result is assembled.

    Parameters
    ----------
    tree_order : int
        Number of blocks, at least 2.
    seed : int or numpy.random.Generator, optional
    max_ladder_length : int, optional
        Largest ``k`` of ladder kinds. Defaults to the
        ``max_ladder_length`` option.
    return_decomposition : bool
        If ``True``, also return the decomposition used.

    Returns
    -------
    G : Graph
    dec : BlockDecomposition
        Only if ``return_decomposition``.

    Examples
    --------
    >>> G, dec = random_4chordal_cubic(2, seed=3, return_decomposition=True)
    >>> G, dec.labels
    (Graph(n=10, m=15), (Dprime, Dprime))
    """
    if tree_order < 2:
        raise ValueError(
            "tree_order must be at least 2, got {}".format(tree_order))
    top = resolve('max_ladder_length', max_ladder_length)
    rng = np.random.default_rng(seed)
    tree = random_tree(tree_order, rng, max_degree=4)

    labels = []
    for s in range(tree.n):
        tags = labels_for_degree(tree.degree(s))
        tag = tags[rng.integers(len(tags))]
        if tag in ('Ladder', 'LadderPrime', 'LadderDoublePrime'):
            labels.append(BlockKind(tag, int(rng.integers(2, top + 1))))
        else:
            labels.append(BlockKind(tag))

    free = [list(rng.permutation(kind.capacity)) for kind in labels]
    attachments = {}
    for s, t in tree.edges():
        attachments[(s, t)] = (int(free[s].pop()), int(free[t].pop()))

    dec = BlockDecomposition(tree, labels, attachments)
    G = assemble(dec)
    if return_decomposition:
        return G, dec
    return G


def random_graph(n, p, seed=None):
    """
    Random graph with independent edges of probability ``p``

    Examples
    --------
    >>> random_graph(5, 1.0).m
    10
    >>> random_graph(5, 0.0, seed=2).m
    0
    """
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1], got {}".format(p))
    rng = np.random.default_rng(seed)
    u, v = np.triu_indices(n, k=1)
    keep = rng.random(len(u)) < p
    return build_graph(n, zip(u[keep].tolist(), v[keep].tolist()))
