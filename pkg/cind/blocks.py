"""
Block kinds of subcubic 4-chordal graphs and their templates

Every kind has a template graph with a fixed vertex order and an
ordered tuple of attachment slots, its vertices of degree 2. The
ladders use ``a_i = i`` and ``b_i = k + i``; the apex of
``LadderPrime(k)`` is ``2k`` (on the last rung) and the second
apex of ``LadderDoublePrime(k)`` is ``2k + 1`` (on the first rung).
"""
import re
from collections import deque
from functools import lru_cache

from .graph import build_graph

__all__ = ['BlockKind', 'PLAIN', 'FIXED_TAGS', 'PARAMETRIC_TAGS',
           'find_embeddings', 'labels_for_degree']

FIXED_TAGS = ('K3', 'K4', 'D', 'Dprime', 'Prism', 'K23', 'K33',
              'K33minus')
PARAMETRIC_TAGS = ('Ladder', 'LadderPrime', 'LadderDoublePrime')
PLAIN_TAG = 'PlainVertex'

_KIND_PATTERN = re.compile(
    r'^\s*(\w+)\s*(?:\(\s*(?:k\s*=\s*)?(\d+)\s*\))?\s*$')


class BlockKind:
    """
    Kind of a block in a tree-of-blocks decomposition

    Parameters
    ----------
    tag : str
        One of :data:`FIXED_TAGS`, :data:`PARAMETRIC_TAGS` or
        ``'PlainVertex'``.
    k : int, optional
        Ladder length, at least 2, for parametric tags.

    Examples
    --------
    >>> BlockKind('Ladder', 2)
    Ladder(k=2)
    >>> BlockKind('Ladder', 2).slots
    (0, 2, 1, 3)
    >>> BlockKind.parse('LadderPrime(3)').capacity
    3
    """
    __slots__ = ('tag', 'k')

    def __init__(self, tag, k=None):
        if tag in PARAMETRIC_TAGS:
            if k is None or int(k) != k or k < 2:
                raise ValueError(
                    "{} needs an integer k >= 2, got {!r}".format(tag, k))
            k = int(k)
        elif tag in FIXED_TAGS or tag == PLAIN_TAG:
            if k is not None:
                raise ValueError("{} takes no parameter".format(tag))
        else:
            raise ValueError("Unknown block kind {!r}".format(tag))
        self.tag = tag
        self.k = k

    @classmethod
    def parse(cls, text):
        """
        Parse the representation of a kind, e.g. ``'Ladder(k=3)'``
        """
        match = _KIND_PATTERN.match(text)
        if not match:
            raise ValueError("Unknown block kind {!r}".format(text))
        tag, k = match.groups()
        return cls(tag, None if k is None else int(k))

    def __repr__(self):
        if self.k is None:
            return self.tag
        return '{}(k={})'.format(self.tag, self.k)

    def __eq__(self, other):
        if isinstance(other, BlockKind):
            return (self.tag, self.k) == (other.tag, other.k)
        return NotImplemented

    def __hash__(self):
        return hash((self.tag, self.k))

    def sort_key(self):
        return (self.tag, self.k or 0)

    @property
    def is_plain(self):
        return self.tag == PLAIN_TAG

    @property
    def template(self):
        """
        Template graph in canonical vertex order
        """
        return _template(self.tag, self.k)[0]

    @property
    def slots(self):
        """
        Attachment slots, vertices of the template
        """
        return _template(self.tag, self.k)[1]

    @property
    def capacity(self):
        return len(self.slots)

    @property
    def search_order(self):
        """
        Breadth first order of the template, for isomorphism search
        """
        return _template(self.tag, self.k)[2]


PLAIN = BlockKind(PLAIN_TAG)


def _ladder_edges(k):
    edges = [(i, k + i) for i in range(k)]
    edges += [(i, i + 1) for i in range(k - 1)]
    edges += [(k + i, k + i + 1) for i in range(k - 1)]
    return edges


def _bfs_order(G):
    order = []
    seen = set()
    for root in range(G.n):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in G.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return tuple(order)


@lru_cache(maxsize=None)
def _template(tag, k):
    if tag == 'K3':
        n, edges, slots = 3, [(0, 1), (1, 2), (0, 2)], (0, 1, 2)
    elif tag == 'K4':
        n, slots = 4, ()
        edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    elif tag == 'D':
        n, edges, slots = 4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)], (0, 3)
    elif tag == 'Dprime':
        n, slots = 5, (4,)
        edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (3, 4)]
    elif tag == 'Prism':
        n, slots = 6, ()
        edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                 (0, 3), (1, 4), (2, 5)]
    elif tag == 'K23':
        n, slots = 5, (2, 3, 4)
        edges = [(i, j) for i in (0, 1) for j in (2, 3, 4)]
    elif tag == 'K33':
        n, slots = 6, ()
        edges = [(i, j) for i in (0, 1, 2) for j in (3, 4, 5)]
    elif tag == 'K33minus':
        n, slots = 6, (2, 5)
        edges = [(i, j) for i in (0, 1, 2) for j in (3, 4, 5)
                 if (i, j) != (2, 5)]
    elif tag == 'Ladder':
        n, edges = 2 * k, _ladder_edges(k)
        slots = (0, k, k - 1, 2 * k - 1)
    elif tag == 'LadderPrime':
        n = 2 * k + 1
        edges = _ladder_edges(k) + [(k - 1, 2 * k), (2 * k - 1, 2 * k)]
        slots = (0, k, 2 * k)
    elif tag == 'LadderDoublePrime':
        n = 2 * k + 2
        edges = _ladder_edges(k) + [(k - 1, 2 * k), (2 * k - 1, 2 * k),
                                    (0, 2 * k + 1), (k, 2 * k + 1)]
        slots = (2 * k + 1, 2 * k)
    else:
        n, edges, slots = 1, [], (0, 0, 0)
    G = build_graph(n, edges)
    return G, slots, _bfs_order(G)


def labels_for_degree(degree):
    """
    Tags allowed for a tree vertex of the given degree

    Examples
    --------
    >>> labels_for_degree(2)
    ('D', 'K33minus', 'LadderDoublePrime')
    """
    return {
        1: ('Dprime',),
        2: ('D', 'K33minus', 'LadderDoublePrime'),
        3: ('K3', 'K23', 'LadderPrime', PLAIN_TAG),
        4: ('Ladder',),
    }.get(degree, ())


def find_embeddings(pattern, G, order=None, iso=False):
    """
    Induced embeddings of ``pattern`` in ``G``

    Parameters
    ----------
    pattern : Graph
        Graph to look for.
    G : Graph
        Host graph.
    order : sequence of int, optional
        Order in which pattern vertices are assigned. Defaults to
        ``0..pattern.n-1``, in which case embeddings come out in
        lexicographic order of their image tuples.
    iso : bool
        If ``True``, only embeddings that preserve degrees exactly
        are produced; with equal orders these are isomorphisms.

    Yields
    ------
    image : tuple of int
        ``image[i]`` is the host vertex of pattern vertex ``i``.

    Examples
    --------
    >>> from cind.generators import named
    >>> K3 = BlockKind('K3').template
    >>> next(find_embeddings(K3, named('K4')))
    (0, 1, 2)
    """
    if order is None:
        order = tuple(range(pattern.n))
    # for each step, the earlier pattern vertices split into
    # neighbors and non-neighbors
    earlier = []
    for i, v in enumerate(order):
        adj = tuple(u for u in order[:i] if pattern.has_edge(u, v))
        non = tuple(u for u in order[:i] if not pattern.has_edge(u, v))
        earlier.append((v, adj, non))

    rows = G.rows
    everything = G.vertex_bits
    pdeg = pattern.degrees()
    gdeg = G.degrees()
    image = [None] * pattern.n

    def extend(i, used):
        if i == len(earlier):
            yield tuple(image)
            return
        v, adj, non = earlier[i]
        cand = everything & ~used
        for u in adj:
            cand &= rows[image[u]]
        for u in non:
            cand &= ~rows[image[u]]
        want = pdeg[v]
        while cand:
            low = cand & -cand
            cand ^= low
            x = low.bit_length() - 1
            if gdeg[x] < want or (iso and gdeg[x] != want):
                continue
            image[v] = x
            yield from extend(i + 1, used | low)
        image[v] = None

    if pattern.n <= G.n:
        yield from extend(0, 0)
