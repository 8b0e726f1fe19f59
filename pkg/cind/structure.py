"""
Structure of 4-chordal cubic graphs

A 2-connected subcubic 4-chordal graph is one of K3, K4, D, D',
the prism, K2,3, K3,3, K3,3 minus an edge or a (primed) ladder.
A connected cubic 4-chordal graph other than K4, K3,3 and the
prism arises from a tree: every vertex of the tree is replaced
by such a block (or kept as a plain vertex) and every tree edge
becomes a bridge between degree-2 vertices of the blocks.
"""
from collections import Counter
from functools import lru_cache

from .blocks import (BlockKind, PLAIN, FIXED_TAGS, find_embeddings,
                     labels_for_degree)
from .cycles import is_k_chordal
from .exceptions import (PreconditionError, ExceptionalGraphError,
                         InternalConsistencyError)
from .graph import (build_graph, block_structure, degree_check,
                    disjoint_union)

__all__ = ['BlockDecomposition', 'classify_2connected',
           'decompose_4chordal', 'assemble', 'generate_extremal',
           'exceptional_name', 'is_tree', 'EXTREMAL_LABELS']

#: Block kinds of the extremal graphs by tree degree
EXTREMAL_LABELS = {
    1: BlockKind('Dprime'),
    2: BlockKind('LadderDoublePrime', 3),
    3: BlockKind('K3'),
}


@lru_cache(maxsize=None)
def _fixed_signatures():
    """
    Fixed kinds by (n, m, number of degree-2 vertices)
    """
    out = {}
    for tag in FIXED_TAGS:
        kind = BlockKind(tag)
        T = kind.template
        sig = (T.n, T.m, T.degrees().count(2))
        out.setdefault(sig, []).append(kind)
    return out


class BlockDecomposition:
    """
    A tree of blocks

    Parameters
    ----------
    tree : Graph
        The tree ``T``.
    labels : sequence of BlockKind
        Kind of every tree vertex (:data:`~cind.blocks.PLAIN`
        for a vertex kept as is).
    attachments : dict, optional
        ``{(s, t): (i, j)}`` for tree edges ``s < t``: the bridge
        joins slot ``i`` of ``s`` to slot ``j`` of ``t``. Edges
        left out take the lowest free slots when assembled.
    members : sequence of tuple, optional
        For decompositions of a graph, ``members[s][x]`` is the
        vertex of the graph that plays template vertex ``x`` of
        block ``s``.
    """

    def __init__(self, tree, labels, attachments=None, members=None):
        self.tree = tree
        self.labels = tuple(labels)
        self.attachments = dict(attachments or {})
        self.members = None if members is None else tuple(members)

    def __repr__(self):
        return 'BlockDecomposition(tree={}, labels={})'.format(
            self.tree.edges(), list(self.labels))

    def __len__(self):
        return self.tree.n

    def validate(self):
        """
        Check the invariants of a decomposition

        Raises
        ------
        PreconditionError
            Naming the first violated invariant.
        """
        tree = self.tree
        if not is_tree(tree):
            raise PreconditionError('not a tree')
        if tree.n < 2:
            raise PreconditionError('tree order < 2')
        if len(self.labels) != tree.n:
            raise PreconditionError(
                'label count', '{} labels for {} tree vertices'.format(
                    len(self.labels), tree.n))
        for s, kind in enumerate(self.labels):
            d = tree.degree(s)
            if d > 4:
                raise PreconditionError(
                    'tree degree > 4', 'vertex {}'.format(s))
            if kind.tag not in labels_for_degree(d):
                raise PreconditionError(
                    'wrong label for degree',
                    'vertex {} of degree {} labelled {!r}'.format(
                        s, d, kind))
        for (s, t), (i, j) in self.attachments.items():
            if not (s < t and tree.has_edge(s, t)):
                raise PreconditionError(
                    'bad attachment', '{} is not a tree edge'.format((s, t)))
            for v, slot in ((s, i), (t, j)):
                if not 0 <= slot < self.labels[v].capacity:
                    raise PreconditionError(
                        'capacity exceeded',
                        'slot {} of vertex {}'.format(slot, v))

    def resolved_attachments(self):
        """
        Slots of every tree edge, filling unspecified ones

        Returns
        -------
        out : dict
            ``{(s, t): (i, j)}`` for every tree edge ``s < t``.
        """
        used = [set() for _ in range(self.tree.n)]
        resolved = {}
        for (s, t), (i, j) in sorted(self.attachments.items()):
            for v, slot in ((s, i), (t, j)):
                if slot in used[v]:
                    raise PreconditionError(
                        'slot reused', 'slot {} of vertex {}'.format(
                            slot, v))
                used[v].add(slot)
            resolved[(s, t)] = (i, j)

        def lowest(v):
            for slot in range(self.labels[v].capacity):
                if slot not in used[v]:
                    used[v].add(slot)
                    return slot
            raise PreconditionError(
                'capacity exceeded', 'vertex {}'.format(v))

        for s, t in self.tree.edges():
            if (s, t) not in resolved:
                resolved[(s, t)] = (lowest(s), lowest(t))
        return resolved

    def label_profile(self):
        """
        Multiset of ``(tree degree, label)`` pairs

        Two decompositions of isomorphic graphs have equal
        profiles.
        """
        return Counter((self.tree.degree(s), repr(kind))
                       for s, kind in enumerate(self.labels))

    def apex_neighbors(self):
        """
        Tree neighbor hanging on the apex of every LadderPrime block

        For LadderPrime blocks the bridge at the apex and the two
        bridges at the first rung are not interchangeable; this
        is the configuration of such a block.

        Returns
        -------
        out : dict
            ``{s: t}`` where ``t`` is attached to the apex slot of
            LadderPrime block ``s``.
        """
        out = {}
        for (s, t), (i, j) in self.resolved_attachments().items():
            if self.labels[s].tag == 'LadderPrime' and i == 2:
                out[s] = t
            if self.labels[t].tag == 'LadderPrime' and j == 2:
                out[t] = s
        return out

    def block_vertices(self, s):
        """
        Graph vertices of tree vertex ``s``
        """
        if self.members is None:
            raise ValueError("Decomposition carries no members")
        return self.members[s]

    def slot_vertex(self, s, slot):
        """
        Graph vertex at ``slot`` of tree vertex ``s``
        """
        return self.block_vertices(s)[self.labels[s].slots[slot]]


def is_tree(G):
    """
    Whether ``G`` is a tree (connected, ``m = n - 1``)
    """
    return G.n >= 1 and G.m == G.n - 1 and G.is_connected()


def exceptional_name(G):
    """
    Name of ``G`` if it is K4, K3,3 or the prism, else ``None``

    These are the only cubic graphs on 4 and 6 vertices.
    """
    if degree_check(G).kind != 'cubic' or G.n not in (4, 6):
        return None
    if G.n == 4:
        return 'K4'
    triangle = any(G.rows[u] & G.rows[v] for u, v in G.edges())
    return 'Prism' if triangle else 'K33'


def _candidates(G):
    n, m = G.n, G.m
    d2 = G.degrees().count(2)
    kinds = list(_fixed_signatures().get((n, m, d2), []))
    if d2 == 4 and n % 2 == 0 and n >= 4 and m == 3 * (n // 2) - 2:
        kinds.append(BlockKind('Ladder', n // 2))
    if d2 == 3 and n % 2 == 1 and n >= 5 and m == 3 * ((n - 1) // 2):
        kinds.append(BlockKind('LadderPrime', (n - 1) // 2))
    if d2 == 2 and n % 2 == 0 and n >= 6 and m == 3 * ((n - 2) // 2) + 2:
        kinds.append(BlockKind('LadderDoublePrime', (n - 2) // 2))
    return kinds


def identify_block(G):
    """
    Kind of a block together with an isomorphism from its template

    Returns
    -------
    kind : BlockKind or None
        ``None`` if ``G`` is not isomorphic to any kind.
    image : tuple of int or None
        ``image[x]`` is the vertex of ``G`` playing template
        vertex ``x``.
    """
    for kind in _candidates(G):
        T = kind.template
        for image in find_embeddings(T, G, order=kind.search_order,
                                     iso=True):
            return kind, image
    return None, None


def classify_2connected(G):
    """
    Kind of a 2-connected subcubic 4-chordal graph

    Parameters
    ----------
    G : Graph
        2-connected, subcubic and 4-chordal.

    Returns
    -------
    out : BlockKind

    Raises
    ------
    PreconditionError
        If a requirement fails; the ``check`` attribute names it.
    InternalConsistencyError
        If the graph fits no kind, which the classification
        rules out.

    Examples
    --------
    >>> from cind.generators import named, ladder_family
    >>> classify_2connected(ladder_family('ladder', 2))
    Ladder(k=2)
    >>> classify_2connected(named('Dprime'))
    Dprime
    """
    if degree_check(G).kind == 'neither':
        raise PreconditionError('not subcubic')
    if not block_structure(G).is_biconnected:
        raise PreconditionError('not 2-connected')
    if not is_k_chordal(G, 4):
        raise PreconditionError('not 4-chordal')
    kind, _ = identify_block(G)
    if kind is None:
        raise InternalConsistencyError(
            "2-connected subcubic 4-chordal graph {!r} is not in the "
            "block family: {}".format(G, G.edges()))
    return kind


def _check_4chordal_cubic(G):
    if degree_check(G).kind != 'cubic':
        raise PreconditionError('not cubic')
    if not G.is_connected():
        raise PreconditionError('not connected')
    if not is_k_chordal(G, 4):
        raise PreconditionError('not 4-chordal')


def decompose_4chordal(G, check=True):
    """
    Tree of blocks of a connected cubic 4-chordal graph

    Parameters
    ----------
    G : Graph
        Connected, cubic, 4-chordal and none of K4, K3,3 and
        the prism.
    check : bool
        If ``False``, skip the 4-chordality test (callers that
        already know it holds).

    Returns
    -------
    out : BlockDecomposition
        Tree vertices are ordered by the least graph vertex they
        contain; ``members`` maps every block onto its template.

    Raises
    ------
    ExceptionalGraphError
        If ``G`` is K4, K3,3 or the prism.
    PreconditionError
        If ``G`` is not connected, cubic and 4-chordal.

    Examples
    --------
    >>> from cind.generators import named
    >>> dec = decompose_4chordal(named('twin_dprime'))
    >>> dec.labels, dec.tree.edges()
    ((Dprime, Dprime), [(0, 1)])
    """
    if check:
        _check_4chordal_cubic(G)
    name = exceptional_name(G)
    if name is not None:
        raise ExceptionalGraphError(name)

    bs = block_structure(G)
    parts = []
    covered = 0
    for block in bs.nontrivial_blocks:
        sub, remap = G.induced(block)
        kind, image = identify_block(sub)
        if kind is None:
            raise InternalConsistencyError(
                "Block {!r} fits no block kind".format(block))
        parts.append((block.min(), kind,
                      tuple(remap.new_to_old[x] for x in image)))
        covered |= block.bits
    for v in range(G.n):
        if not covered >> v & 1:
            parts.append((v, PLAIN, (v,)))
    parts.sort(key=lambda p: p[0])

    labels = [p[1] for p in parts]
    members = [p[2] for p in parts]
    owner = {}
    for s, verts in enumerate(members):
        for v in verts:
            owner[v] = s

    used = [set() for _ in parts]

    def take_slot(s, v):
        kind = labels[s]
        for i, x in enumerate(kind.slots):
            if members[s][x] == v and i not in used[s]:
                used[s].add(i)
                return i
        raise InternalConsistencyError(
            "Vertex {} has no free slot in {!r}".format(v, kind))

    tree_edges = []
    attachments = {}
    for u, v in bs.bridges:
        s, t = owner[u], owner[v]
        i, j = take_slot(s, u), take_slot(t, v)
        if s > t:
            s, t, i, j = t, s, j, i
        tree_edges.append((s, t))
        attachments[(s, t)] = (i, j)

    tree = build_graph(len(parts), tree_edges)
    dec = BlockDecomposition(tree, labels, attachments, members)
    if not is_tree(tree):
        raise InternalConsistencyError("Blocks do not form a tree")
    return dec


def assemble(dec):
    """
    Build the cubic graph of a tree of blocks

    Block ``s`` occupies a contiguous range of vertices, in tree
    vertex order, laid out as its template.

    Parameters
    ----------
    dec : BlockDecomposition
        A valid decomposition.

    Returns
    -------
    out : Graph
        Connected, cubic and 4-chordal.

    Raises
    ------
    PreconditionError
        If ``dec`` violates an invariant.

    Examples
    --------
    >>> tree = build_graph(3, [(0, 1), (1, 2)])
    >>> kinds = [BlockKind('Dprime'), BlockKind('D'), BlockKind('Dprime')]
    >>> assemble(BlockDecomposition(tree, kinds))
    Graph(n=14, m=21)
    """
    dec.validate()
    attachments = dec.resolved_attachments()
    offsets = []
    total = 0
    for kind in dec.labels:
        offsets.append(total)
        total += kind.template.n
    G = disjoint_union(*(kind.template for kind in dec.labels))
    bridges = []
    for (s, t), (i, j) in sorted(attachments.items()):
        bridges.append((offsets[s] + dec.labels[s].slots[i],
                        offsets[t] + dec.labels[t].slots[j]))
    return G.with_edges(bridges)


def generate_extremal(tree):
    """
    Extremal graph of a tree of maximum degree 3

    Leaves become D', vertices of degree 2 become
    ``LadderDoublePrime(3)`` and vertices of degree 3 become
    triangles.

    Parameters
    ----------
    tree : Graph
        A tree of order at least 2 and maximum degree at most 3.

    Returns
    -------
    out : Graph

    Examples
    --------
    >>> generate_extremal(build_graph(2, [(0, 1)]))
    Graph(n=10, m=15)
    """
    if not is_tree(tree):
        raise PreconditionError('not a tree')
    if tree.n < 2:
        raise PreconditionError('tree order < 2')
    if max(tree.degrees()) > 3:
        raise PreconditionError('tree degree > 3')
    labels = [EXTREMAL_LABELS[d] for d in tree.degrees()]
    return assemble(BlockDecomposition(tree, labels))
