"""
Induced cycles, chordality and induced 2-regular subgraphs
"""
from collections import namedtuple

from .exceptions import PreconditionError
from .graph import VertexSet, _as_bits
from .utils import iter_bits, to_bits

__all__ = ['InducedCycle', 'ACYCLIC', 'enumerate_induced_cycles',
           'chordality', 'is_k_chordal', 'verify_induced_2_regular',
           'component_cycles']


class InducedCycle:
    """
    A chordless cycle

    The vertex order is canonical: the cycle starts at its least
    vertex and the second vertex is smaller than the last.

    Parameters
    ----------
    vertices : sequence of int
        The cycle in cyclic order (any rotation or direction).

    Examples
    --------
    >>> InducedCycle([3, 1, 0, 2])
    InducedCycle((0, 1, 3, 2))
    """
    __slots__ = ('vertices', 'bits')

    def __init__(self, vertices):
        vs = list(vertices)
        i = vs.index(min(vs))
        vs = vs[i:] + vs[:i]
        if len(vs) > 2 and vs[1] > vs[-1]:
            vs = [vs[0]] + vs[:0:-1]
        self.vertices = tuple(vs)
        self.bits = to_bits(vs)

    @property
    def length(self):
        return len(self.vertices)

    def as_set(self):
        return VertexSet(self.vertices)

    def sort_key(self):
        return (len(self.vertices), self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        if isinstance(other, InducedCycle):
            return self.vertices == other.vertices
        return NotImplemented

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return 'InducedCycle({})'.format(self.vertices)


class _Acyclic:
    """
    Chordality of a forest
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'acyclic'

    __str__ = __repr__

    def __reduce__(self):
        return (_Acyclic, ())


#: Returned by :func:`chordality` for graphs without cycles.
ACYCLIC = _Acyclic()


class Verdict(namedtuple('Verdict', ['ok', 'vertex', 'degree'])):
    """
    Outcome of :func:`verify_induced_2_regular`

    Truthy iff the check passed. On failure ``vertex`` is the
    least violating vertex and ``degree`` its number of
    neighbors inside the set.
    """
    __slots__ = ()

    def __bool__(self):
        return self.ok


def _iter_cycle_bits(G, max_length=None):
    """
    Yield the vertex lists of induced cycles, canonical orientation
    """
    rows = G.rows
    limit = G.n if max_length is None else max_length
    within = G.vertex_bits

    def extend(s, path, forbidden):
        head = path[-1]
        candidates = rows[head] & ~forbidden
        for w in iter_bits(candidates):
            if rows[s] >> w & 1:
                # closes the cycle, second vertex < last
                if path[1] < w:
                    yield path + [w]
            elif len(path) + 2 <= limit:
                yield from extend(s, path + [w],
                                  forbidden | rows[head] | 1 << w)

    for s in iter_bits(within):
        if limit < 3:
            break
        allowed = within & ~((1 << (s + 1)) - 1)
        for x1 in iter_bits(rows[s] & allowed):
            forbidden = ~allowed | 1 << x1
            yield from extend(s, [s, x1], forbidden)


def enumerate_induced_cycles(G, max_length=None):
    """
    All induced cycles of a graph

    Parameters
    ----------
    G : Graph
        Host graph.
    max_length : int, optional
        If given, only cycles with at most this many vertices
        are returned.

    Returns
    -------
    out : list of InducedCycle
        Each cycle once, sorted by length then vertex sequence.

    Examples
    --------
    >>> from cind.generators import named
    >>> cycles = enumerate_induced_cycles(named('K4'))
    >>> [c.vertices for c in cycles]
    [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    """
    cycles = [InducedCycle(c) for c in _iter_cycle_bits(G, max_length)]
    cycles.sort(key=InducedCycle.sort_key)
    return cycles


def chordality(G):
    """
    Length of a longest induced cycle

    Parameters
    ----------
    G : Graph
        Any graph.

    Returns
    -------
    out : int or ACYCLIC
        The least ``k >= 3`` for which ``G`` is k-chordal, or
        :data:`ACYCLIC` if ``G`` is a forest.

    Examples
    --------
    >>> from cind.generators import named, ladder_family
    >>> chordality(named('K33'))
    4
    >>> chordality(ladder_family('ladder', 5))
    4
    """
    longest = max((len(c) for c in _iter_cycle_bits(G)), default=0)
    return longest if longest else ACYCLIC


def _induced_paths(G, k):
    """
    Yield induced paths with ``k`` vertices, first end < last end
    """
    rows = G.rows

    def extend(path, forbidden):
        head = path[-1]
        for w in iter_bits(rows[head] & ~forbidden):
            if len(path) + 1 == k:
                if path[0] < w:
                    yield path + [w]
            else:
                yield from extend(path + [w],
                                  forbidden | rows[head] | 1 << w)

    for x1 in range(G.n):
        yield from extend([x1], 1 << x1)


def is_k_chordal(G, k):
    """
    Whether ``G`` has no induced cycle longer than ``k``

    An induced cycle longer than ``k`` exists iff some induced
    path ``x1 .. xk`` has its ends joined by a path avoiding the
    closed neighborhood of its interior. This takes polynomial
    time for fixed ``k``.

    Parameters
    ----------
    G : Graph
        Any graph.
    k : int
        At least 3.

    Examples
    --------
    >>> from cind.generators import named
    >>> is_k_chordal(named('Petersen'), 5)
    False
    >>> is_k_chordal(named('Petersen'), 6)
    True
    """
    if k < 3:
        raise ValueError("k must be at least 3, got {}".format(k))
    if k >= G.n:
        return True
    rows = G.rows
    everything = G.vertex_bits
    for path in _induced_paths(G, k):
        x1, xk = path[0], path[-1]
        blocked = 0
        for v in path[1:-1]:
            blocked |= rows[v] | 1 << v
        alive = everything & ~blocked | 1 << x1 | 1 << xk
        seen = frontier = 1 << xk
        target = 1 << x1
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= rows[v]
            frontier = grow & alive & ~seen
            if frontier & target:
                return False
            seen |= frontier
    return True


def verify_induced_2_regular(G, S):
    """
    Check that every vertex of ``S`` has exactly two neighbors in ``S``

    The empty set passes.

    Parameters
    ----------
    G : Graph
        Host graph.
    S : VertexSet or iterable of int
        Candidate vertex set.

    Returns
    -------
    out : Verdict
        Truthy iff ``G[S]`` is 2-regular.

    Examples
    --------
    >>> from cind.generators import named
    >>> verify_induced_2_regular(named('K4'), [0, 1, 2])
    Verdict(ok=True, vertex=None, degree=None)
    >>> verify_induced_2_regular(named('K4'), [0, 1, 2, 3])
    Verdict(ok=False, vertex=0, degree=3)
    """
    bits = _as_bits(G, S)
    rows = G.rows
    for v in iter_bits(bits):
        d = (rows[v] & bits).bit_count()
        if d != 2:
            return Verdict(False, v, d)
    return Verdict(True, None, None)


def _walk_cycle(rows, bits):
    start = (bits & -bits).bit_length() - 1
    order = [start]
    cur = min(iter_bits(rows[start] & bits))
    while cur != start:
        order.append(cur)
        nxt = rows[cur] & bits & ~(1 << order[-2])
        cur = (nxt & -nxt).bit_length() - 1
    return order


def component_cycles(G, S):
    """
    Split an induced 2-regular vertex set into its cycles

    Parameters
    ----------
    G : Graph
        Host graph.
    S : VertexSet or iterable of int
        Vertex set inducing a 2-regular subgraph.

    Returns
    -------
    out : list of InducedCycle
        Ordered by least vertex.

    Raises
    ------
    PreconditionError
        If ``G[S]`` is not 2-regular.
    """
    verdict = verify_induced_2_regular(G, S)
    if not verdict:
        raise PreconditionError(
            'not induced 2-regular',
            'vertex {} has {} neighbors in the set'.format(
                verdict.vertex, verdict.degree))
    bits = _as_bits(G, S)
    return [InducedCycle(_walk_cycle(G.rows, comp))
            for comp in G.component_bits(bits)]
