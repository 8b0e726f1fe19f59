"""
Immutable simple graphs on dense vertex indices

A :class:`Graph` stores one adjacency bitset per vertex. Python
integers are arbitrary precision, so a row is a single machine
word for small graphs and grows transparently for large ones.
"""
from collections import namedtuple

from .exceptions import (VertexRangeError, SelfLoopError,
                         DuplicateEdgeError)
from .utils import iter_bits, lowest_bit, to_bits

__all__ = ['Graph', 'VertexSet', 'Remap', 'BlockStructure',
           'build_graph', 'kappa', 'cyclomatic_number',
           'closed_neighborhood', 'delete_vertices', 'block_structure',
           'degree_check', 'components', 'disjoint_union']


class VertexSet:
    """
    A set of vertices with bitset semantics

    Parameters
    ----------
    members : iterable of int
        Vertex indices.

    Examples
    --------
    >>> S = VertexSet([4, 0, 2])
    >>> S
    VertexSet([0, 2, 4])
    >>> len(S), 2 in S, 3 in S
    (3, True, False)
    >>> S | VertexSet([1])
    VertexSet([0, 1, 2, 4])
    """
    __slots__ = ('bits',)

    def __init__(self, members=()):
        if isinstance(members, VertexSet):
            self.bits = members.bits
        else:
            self.bits = to_bits(members)

    @classmethod
    def from_bits(cls, bits):
        """
        Create a vertex set from a bitmask
        """
        obj = cls.__new__(cls)
        obj.bits = bits
        return obj

    def __iter__(self):
        return iter_bits(self.bits)

    def __len__(self):
        return self.bits.bit_count()

    def __bool__(self):
        return self.bits != 0

    def __contains__(self, v):
        return v >= 0 and bool(self.bits >> v & 1)

    def __eq__(self, other):
        if isinstance(other, VertexSet):
            return self.bits == other.bits
        return NotImplemented

    def __hash__(self):
        return hash(self.bits)

    def __or__(self, other):
        return VertexSet.from_bits(self.bits | VertexSet(other).bits)

    def __and__(self, other):
        return VertexSet.from_bits(self.bits & VertexSet(other).bits)

    def __sub__(self, other):
        return VertexSet.from_bits(self.bits & ~VertexSet(other).bits)

    def __le__(self, other):
        return self.bits & ~VertexSet(other).bits == 0

    def __repr__(self):
        return 'VertexSet({})'.format(list(self))

    def to_tuple(self):
        """
        Return the members as an ascending tuple
        """
        return tuple(self)

    def max(self):
        """
        Largest member (``-1`` if empty)
        """
        return self.bits.bit_length() - 1

    def min(self):
        """
        Smallest member (``-1`` if empty)
        """
        return lowest_bit(self.bits)


class Graph:
    """
    Immutable simple undirected graph

    Use :func:`build_graph` to create graphs from edge lists;
    the constructor trusts its input.

    Parameters
    ----------
    n : int
        Number of vertices.
    rows : tuple of int
        Adjacency bitsets. Bit ``v`` of ``rows[u]`` is set iff
        ``u`` and ``v`` are adjacent.
    """
    __slots__ = ('n', 'rows', 'adjacency', 'm')

    def __init__(self, n, rows):
        self.n = n
        self.rows = tuple(rows)
        self.adjacency = tuple(tuple(iter_bits(r)) for r in self.rows)
        self.m = sum(r.bit_count() for r in self.rows) // 2

    def __repr__(self):
        return 'Graph(n={}, m={})'.format(self.n, self.m)

    def __eq__(self, other):
        if isinstance(other, Graph):
            return self.n == other.n and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.rows))

    def __len__(self):
        return self.n

    @property
    def vertex_bits(self):
        """
        Bitmask of all vertices
        """
        return (1 << self.n) - 1

    def neighbors(self, v):
        """
        Neighbors of ``v`` in ascending order
        """
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def degrees(self):
        """
        Degree sequence indexed by vertex
        """
        return tuple(len(a) for a in self.adjacency)

    def has_edge(self, u, v):
        return bool(self.rows[u] >> v & 1)

    def edges(self):
        """
        Edges ``(u, v)`` with ``u < v`` in lexicographic order
        """
        return [(u, v) for u in range(self.n)
                for v in self.adjacency[u] if u < v]

    def induced(self, S):
        """
        Subgraph induced by ``S`` and its :class:`Remap`
        """
        S = _as_bits(self, S)
        return delete_vertices(self, VertexSet.from_bits(
            self.vertex_bits & ~S))

    def with_edges(self, edges):
        """
        Return a copy of the graph with extra edges
        """
        return build_graph(self.n, self.edges() + list(edges))

    def is_connected(self):
        return self.n == 0 or kappa(self) == 1

    def edges_within(self, bits):
        """
        Number of edges with both ends in ``bits``
        """
        rows = self.rows
        return sum((rows[v] & bits).bit_count()
                   for v in iter_bits(bits)) // 2

    def neighborhood_bits(self, bits):
        """
        Closed neighborhood of a vertex bitmask, as a bitmask
        """
        rows = self.rows
        out = bits
        for v in iter_bits(bits):
            out |= rows[v]
        return out

    def component_bits(self, bits=None):
        """
        Components of ``G[bits]`` as bitmasks ordered by least vertex
        """
        rows = self.rows
        if bits is None:
            bits = self.vertex_bits
        comps = []
        while bits:
            seen = frontier = bits & -bits
            while frontier:
                grow = 0
                for v in iter_bits(frontier):
                    grow |= rows[v]
                frontier = grow & bits & ~seen
                seen |= frontier
            comps.append(seen)
            bits &= ~seen
        return comps


class Remap:
    """
    Relabeling between a graph and a vertex-deleted subgraph

    Parameters
    ----------
    new_to_old : sequence of int
        ``new_to_old[i]`` is the label in the original graph of
        vertex ``i`` of the subgraph.
    n_old : int
        Order of the original graph.
    """
    __slots__ = ('new_to_old', 'old_to_new')

    def __init__(self, new_to_old, n_old):
        self.new_to_old = tuple(new_to_old)
        old_to_new = [None] * n_old
        for new, old in enumerate(self.new_to_old):
            old_to_new[old] = new
        self.old_to_new = tuple(old_to_new)

    def __repr__(self):
        return 'Remap({})'.format(list(self.new_to_old))

    def lift(self, S):
        """
        Translate a vertex set of the subgraph to original labels
        """
        return VertexSet(self.new_to_old[v] for v in VertexSet(S))

    def push(self, S):
        """
        Translate a vertex set of the original graph to new labels

        Deleted vertices are dropped.
        """
        o2n = self.old_to_new
        return VertexSet(o2n[v] for v in VertexSet(S)
                         if o2n[v] is not None)


class BlockStructure:
    """
    Blocks, cutvertices and bridges of a graph

    Parameters
    ----------
    n : int
        Order of the graph.
    blocks : tuple of VertexSet
        Vertex sets of the blocks, ordered by their least vertex.
        Bridges are blocks of two vertices. Isolated vertices
        form no block.
    cutvertices : VertexSet
        Vertices that lie in at least two blocks.
    bridges : tuple of tuple
        Bridge edges ``(u, v)``, ``u < v``, sorted.
    """

    def __init__(self, n, blocks, cutvertices, bridges):
        self.n = n
        self.blocks = tuple(blocks)
        self.cutvertices = cutvertices
        self.bridges = tuple(bridges)

    def __repr__(self):
        return ('BlockStructure(blocks={}, cutvertices={}, '
                'bridges={})'.format(len(self.blocks),
                                     list(self.cutvertices),
                                     list(self.bridges)))

    @property
    def nontrivial_blocks(self):
        """
        Blocks that are not bridges
        """
        return tuple(b for b in self.blocks if len(b) > 2)

    @property
    def is_biconnected(self):
        """
        Whether the graph is 2-connected
        """
        return (self.n >= 3 and len(self.blocks) == 1
                and len(self.blocks[0]) == self.n)


DegreeReport = namedtuple('DegreeReport', ['kind', 'degrees'])


def _as_bits(G, S):
    bits = VertexSet(S).bits
    if bits >> G.n:
        raise VertexRangeError(
            "Vertex {} is not in range 0..{}".format(
                bits.bit_length() - 1, G.n - 1))
    return bits


def build_graph(n, edges):
    """
    Create a graph from an edge list

    Parameters
    ----------
    n : int
        Number of vertices, labelled ``0..n-1``.
    edges : iterable of pairs
        Unordered vertex pairs.

    Returns
    -------
    out : Graph

    Raises
    ------
    VertexRangeError
        If an endpoint is outside ``0..n-1``.
    SelfLoopError
        If an edge joins a vertex to itself.
    DuplicateEdgeError
        If an unordered pair appears twice.

    Examples
    --------
    >>> G = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    >>> G
    Graph(n=4, m=6)
    >>> build_graph(2, [(0, 1), (1, 0)])
    Traceback (most recent call last):
        ...
    cind.exceptions.DuplicateEdgeError: Duplicate edge (0, 1)
    """
    if n < 0:
        raise ValueError("Vertex count must be non-negative, got {}".format(n))
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(
                "Edge ({}, {}) has an endpoint outside 0..{}".format(
                    u, v, n - 1))
        if u == v:
            raise SelfLoopError("Self-loop at vertex {}".format(u))
        if rows[u] >> v & 1:
            raise DuplicateEdgeError(
                "Duplicate edge ({}, {})".format(min(u, v), max(u, v)))
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def kappa(G):
    """
    Number of connected components

    Examples
    --------
    >>> kappa(build_graph(5, []))
    5
    """
    return len(G.component_bits())


def components(G):
    """
    Vertex sets of the components, ordered by least vertex
    """
    return [VertexSet.from_bits(b) for b in G.component_bits()]


def cyclomatic_number(G):
    """
    Cyclomatic number ``m + kappa - n``

    It is zero exactly for forests.

    Examples
    --------
    >>> K4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    >>> cyclomatic_number(K4)
    3
    """
    return G.m + kappa(G) - G.n


def closed_neighborhood(G, S):
    """
    Return ``S`` together with all neighbors of vertices in ``S``

    Parameters
    ----------
    G : Graph
        Host graph.
    S : VertexSet or iterable of int
        Vertices of ``G``.

    Returns
    -------
    out : VertexSet
    """
    return VertexSet.from_bits(G.neighborhood_bits(_as_bits(G, S)))


def delete_vertices(G, S):
    """
    Delete vertices from a graph

    Parameters
    ----------
    G : Graph
        Host graph.
    S : VertexSet or iterable of int
        Vertices to delete.

    Returns
    -------
    H : Graph
        Subgraph induced by the remaining vertices, relabelled
        ``0..n-|S|-1`` in increasing order of the old labels.
    remap : Remap
        Label translation between ``H`` and ``G``.

    Examples
    --------
    >>> C5 = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    >>> H, remap = delete_vertices(C5, [4, 0, 1])
    >>> H.edges(), remap.new_to_old
    ([(0, 1)], (2, 3))
    """
    drop = _as_bits(G, S)
    keep = [v for v in range(G.n) if not drop >> v & 1]
    remap = Remap(keep, G.n)
    o2n = remap.old_to_new
    rows = []
    for v in keep:
        row = 0
        for w in iter_bits(G.rows[v] & ~drop):
            row |= 1 << o2n[w]
        rows.append(row)
    return Graph(len(keep), rows), remap


def disjoint_union(*graphs):
    """
    Disjoint union, vertices of later graphs shifted up

    Examples
    --------
    >>> K3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    >>> disjoint_union(K3, K3)
    Graph(n=6, m=6)
    """
    rows = []
    offset = 0
    for G in graphs:
        rows.extend(r << offset for r in G.rows)
        offset += G.n
    return Graph(offset, rows)


def block_structure(G):
    """
    Blocks, cutvertices and bridges

    Iterative Hopcroft-Tarjan depth first search with an
    edge stack.

    Parameters
    ----------
    G : Graph
        Any graph.

    Returns
    -------
    out : BlockStructure

    Examples
    --------
    Two triangles sharing vertex 2

    >>> G = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    >>> bs = block_structure(G)
    >>> bs.blocks, bs.cutvertices
    ((VertexSet([0, 1, 2]), VertexSet([2, 3, 4])), VertexSet([2]))
    """
    n = G.n
    adjacency = G.adjacency
    disc = [-1] * n
    low = [0] * n
    blocks = []
    cut = 0
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        edge_stack = []
        stack = [(root, -1, iter(adjacency[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(adjacency[w])))
                    break
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if not stack:
                    continue
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if u == root:
                    root_children += 1
                if low[v] >= disc[u]:
                    bits = 0
                    while True:
                        a, b = edge_stack.pop()
                        bits |= 1 << a | 1 << b
                        if (a, b) == (u, v):
                            break
                    blocks.append(bits)
                    if u != root:
                        cut |= 1 << u
        if root_children > 1:
            cut |= 1 << root

    blocks.sort(key=lambda b: tuple(iter_bits(b)))
    bridges = sorted(tuple(iter_bits(b)) for b in blocks
                     if b.bit_count() == 2)
    return BlockStructure(
        n,
        [VertexSet.from_bits(b) for b in blocks],
        VertexSet.from_bits(cut),
        bridges)


def degree_check(G):
    """
    Classify the degree sequence

    Returns
    -------
    out : DegreeReport
        ``kind`` is ``'cubic'`` if every degree is 3,
        ``'subcubic'`` if every degree is at most 3 (and the
        graph is not cubic or is empty) and ``'neither'``
        otherwise. ``degrees`` is the degree sequence.

    Examples
    --------
    >>> K23 = build_graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    >>> degree_check(K23)
    DegreeReport(kind='subcubic', degrees=(3, 3, 2, 2, 2))
    """
    degrees = G.degrees()
    if degrees and all(d == 3 for d in degrees):
        kind = 'cubic'
    elif all(d <= 3 for d in degrees):
        kind = 'subcubic'
    else:
        kind = 'neither'
    return DegreeReport(kind, degrees)
