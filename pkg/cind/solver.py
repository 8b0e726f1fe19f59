"""
Induced 2-regular subgraphs of order 5n/8 + 3/4 in 4-chordal cubic graphs

:func:`solve` reduces the input step by step until it reaches the
10-vertex graph of two D' joined by a bridge, then lifts an
optimal certificate of that graph back through the steps. Every
step removes vertices and gains at least 5/8 of them when lifted:

* a ladder with five rungs loses its three middle rungs (6
  vertices) and the gap is bridged by two edges; lifting gains 4.
* a ladder with four rungs and an apex on the last rung loses
  its last three rungs (6 vertices) and the apex is joined to
  the first rung, which becomes a triangle; lifting gains 4.
* otherwise a block ``B`` next to the end of a longest path of
  the block tree, together with its pendant D' copies, is cut off
  at the bridge ``xy`` and replaced by a single pendant D'. The
  gain is read off a precomputed pattern of ``B``.
"""
import logging
from collections import deque, namedtuple
from fractions import Fraction
from functools import lru_cache

from .blocks import BlockKind, PLAIN, find_embeddings
from .cycles import verify_induced_2_regular
from .exceptions import PreconditionError, InternalConsistencyError
from .graph import VertexSet, build_graph, delete_vertices
from .oracle import c_ind_exact
from .options import get_option
from .structure import (EXTREMAL_LABELS, decompose_4chordal,
                        exceptional_name, _check_4chordal_cubic)

__all__ = ['LadderEmbedding', 'SolveCertificate', 'BlockPlusPattern',
           'find_induced_ladder5', 'reduce_ladder5', 'lift_ladder5',
           'find_induced_ladder4prime', 'reduce_ladder4prime',
           'lift_ladder4prime', 'block_plus_pattern', 'solve',
           'check_tightness', 'lower_bound', 'RESIDUAL_KINDS']

logger = logging.getLogger(__name__)

DPRIME = BlockKind('Dprime')

#: Block kinds that can sit next to a leaf once no reduction applies
RESIDUAL_KINDS = (
    BlockKind('D'), BlockKind('K33minus'),
    BlockKind('LadderDoublePrime', 2), BlockKind('LadderDoublePrime', 3),
    PLAIN, BlockKind('K3'), BlockKind('K23'),
    BlockKind('LadderPrime', 2), BlockKind('LadderPrime', 3),
    BlockKind('Ladder', 2), BlockKind('Ladder', 3), BlockKind('Ladder', 4),
)


def lower_bound(n):
    """
    The guaranteed order ``5n/8 + 3/4``

    Examples
    --------
    >>> lower_bound(10)
    Fraction(7, 1)
    """
    return Fraction(5, 8) * n + Fraction(3, 4)


class LadderEmbedding(namedtuple('LadderEmbedding', ['a', 'b', 'apex'])):
    """
    Induced ladder in a graph

    Parameters
    ----------
    a, b : tuple of int
        The two rails; ``a[i]`` and ``b[i]`` form rung ``i``.
    apex : int or None
        Vertex adjacent to both ends of the last rung, if any.
    """
    __slots__ = ()

    @property
    def vertices(self):
        extra = () if self.apex is None else (self.apex,)
        return VertexSet(self.a + self.b + extra)


class SolveCertificate(namedtuple('SolveCertificate', [
        'subgraph', 'order', 'bound', 'tight', 'reduction_log',
        'exceptional', 'verified'])):
    """
    Result of :func:`solve`

    Parameters
    ----------
    subgraph : VertexSet
        Vertices of an induced 2-regular subgraph.
    order : int
        ``len(subgraph)``.
    bound : Fraction or None
        ``5n/8 + 3/4``; ``None`` for K4, K3,3 and the prism.
    tight : bool
        Whether ``order == bound``.
    reduction_log : tuple of str
        The steps applied, in order.
    exceptional : str or None
        Name of the graph if it is K4, K3,3 or the prism.
    verified : bool
        Whether the subgraph passed the final re-verification.
    """
    __slots__ = ()


class BlockPlusPattern(namedtuple('BlockPlusPattern', [
        'kind', 'slot', 'graph', 'y', 'c_ind_bplus',
        'c_ind_bplus_minus_y', 'witness', 'witness_minus_y'])):
    """
    A block with D' copies hanging on all of its slots but one

    The free slot holds ``y``, the end of the bridge that joins
    the block to the rest of the graph. Both witnesses are vertex
    sets of ``graph``; ``witness_minus_y`` avoids ``y``.
    """
    __slots__ = ()

    @property
    def gain(self):
        """
        Least order gained by one leaf step with this pattern
        """
        return min(self.c_ind_bplus - 4, self.c_ind_bplus_minus_y - 3)

    @property
    def required(self):
        """
        Gain needed to keep ``5n/8 + 3/4``
        """
        return Fraction(5, 8) * (self.graph.n - 5)


# Reductions

def _verify_class(G, step):
    if not get_option('verify_steps'):
        return
    try:
        _check_4chordal_cubic(G)
    except PreconditionError as err:
        raise InternalConsistencyError(
            "{} produced a graph that is {}".format(step, err.check))
    name = exceptional_name(G)
    if name is not None:
        raise InternalConsistencyError(
            "{} produced {}".format(step, name))


def _verify_lift(G, H, step):
    if not get_option('verify_steps'):
        return
    verdict = verify_induced_2_regular(G, H)
    if not verdict:
        raise InternalConsistencyError(
            "Lift through {} is not induced 2-regular at vertex "
            "{}".format(step, verdict.vertex))


class LiftContext(namedtuple('LiftContext', [
        'graph', 'remap', 'embedding', 'step'])):
    """
    What a lift needs to translate a certificate back
    """
    __slots__ = ()


def find_induced_ladder5(G):
    """
    Lexicographically first induced ladder with five rungs

    Returns
    -------
    out : LadderEmbedding or None

    Examples
    --------
    >>> from cind.generators import ladder_family
    >>> find_induced_ladder5(ladder_family('ladder', 5))
    LadderEmbedding(a=(0, 1, 2, 3, 4), b=(5, 6, 7, 8, 9), apex=None)
    """
    for image in find_embeddings(BlockKind('Ladder', 5).template, G):
        return LadderEmbedding(image[:5], image[5:], None)
    return None


def _reduce(G, e, drop, extra, step):
    H, remap = delete_vertices(G, drop)
    o2n = remap.old_to_new
    reduced = H.with_edges([(o2n[u], o2n[v]) for u, v in extra])
    _verify_class(reduced, step)
    logger.debug('%s: n %d -> %d', step, G.n, reduced.n)
    return reduced, LiftContext(G, remap, e, step)


def reduce_ladder5(G, e):
    """
    Shorten an induced five-rung ladder by three rungs

    The middle rungs go and the ends of the rails are joined.

    Parameters
    ----------
    G : Graph
        Connected cubic 4-chordal graph.
    e : LadderEmbedding
        Induced ladder with five rungs.

    Returns
    -------
    reduced : Graph
        ``G`` minus six vertices plus the edges ``a_1 a_5`` and
        ``b_1 b_5``; vertices keep their relative order.
    context : LiftContext
        For :func:`lift_ladder5`.
    """
    a, b = e.a, e.b
    return _reduce(G, e, a[1:4] + b[1:4], [(a[0], a[4]), (b[0], b[4])],
                   'B5-reduce')


def lift_ladder5(H, context):
    """
    Lift a certificate of the reduced graph, gaining four vertices

    Parameters
    ----------
    H : VertexSet
        Induced 2-regular set of the reduced graph.
    context : LiftContext
        From :func:`reduce_ladder5`.

    Returns
    -------
    out : VertexSet
        Induced 2-regular set of the original graph with
        ``len(H) + 4`` vertices.
    """
    a, b = context.embedding.a, context.embedding.b
    H = context.remap.lift(H)
    ends = (a[0] in H, b[0] in H, a[4] in H, b[4] in H)
    if ends == (True, True, True, True):
        # the new 4-cycle becomes the two end squares
        out = (H - [a[0], b[0], a[4], b[4]]) | [
            a[0], a[1], b[1], b[0], a[3], a[4], b[4], b[3]]
    elif ends == (True, True, False, False):
        out = H | [a[2], a[3], b[3], b[2]]
    elif ends in ((False, False, True, True), (False, False, False, False)):
        out = H | [a[1], a[2], b[2], b[1]]
    else:
        raise InternalConsistencyError(
            "Certificate uses one bridging edge only, {}".format(ends))
    _verify_lift(context.graph, out, context.step)
    return out


def find_induced_ladder4prime(G):
    """
    Lexicographically first induced four-rung ladder with an apex

    The apex is adjacent to both ends of the last rung.

    Returns
    -------
    out : LadderEmbedding or None
    """
    for image in find_embeddings(BlockKind('LadderPrime', 4).template, G):
        return LadderEmbedding(image[:4], image[4:8], image[8])
    return None


def reduce_ladder4prime(G, e):
    """
    Replace an induced four-rung ladder with apex by a triangle

    The last three rungs go and the apex is joined to both ends
    of the first rung.

    Parameters
    ----------
    G : Graph
        Connected cubic 4-chordal graph.
    e : LadderEmbedding
        Induced four-rung ladder with apex ``c``.

    Returns
    -------
    reduced : Graph
        ``G`` minus six vertices plus the edges ``c a_1`` and
        ``c b_1``.
    context : LiftContext
        For :func:`lift_ladder4prime`.
    """
    return _reduce(G, e, e.a[1:] + e.b[1:],
                   [(e.apex, e.a[0]), (e.apex, e.b[0])], 'B4prime-reduce')


def lift_ladder4prime(H, context):
    """
    Lift a certificate of the reduced graph, gaining four vertices

    Parameters
    ----------
    H : VertexSet
        Induced 2-regular set of the reduced graph.
    context : LiftContext
        From :func:`reduce_ladder4prime`.

    Returns
    -------
    out : VertexSet
    """
    e = context.embedding
    a, b, c = e.a, e.b, e.apex
    H = context.remap.lift(H)
    ends = (a[0] in H, b[0] in H, c in H)
    if ends == (True, True, True):
        # the triangle becomes the first square and the apex triangle
        out = (H - [a[0], b[0], c]) | [
            a[0], a[1], b[1], b[0], a[3], b[3], c]
    elif ends == (True, True, False):
        out = H | [a[2], a[3], b[3], b[2]]
    elif ends == (False, False, False):
        out = H | [a[1], a[2], b[2], b[1]]
    else:
        raise InternalConsistencyError(
            "Certificate meets the triangle in {}".format(ends))
    _verify_lift(context.graph, out, context.step)
    return out


# Leaf blocks

@lru_cache(maxsize=None)
def _pattern(kind, slot):
    T = kind.template
    dprime = DPRIME.template
    edges = T.edges()
    n = T.n
    for i, x in enumerate(kind.slots):
        if i == slot:
            continue
        edges += [(n + u, n + v) for u, v in dprime.edges()]
        edges.append((x, n + DPRIME.slots[0]))
        n += dprime.n
    G = build_graph(n, edges)
    y = kind.slots[slot]
    full = c_ind_exact(G)
    minus, remap = delete_vertices(G, [y])
    partial = c_ind_exact(minus)
    return BlockPlusPattern(kind, slot, G, y, full.value, partial.value,
                            full.certificate,
                            remap.lift(partial.certificate))


def block_plus_pattern(kind, slot=0):
    """
    Pattern of a block that can sit next to a leaf

    Parameters
    ----------
    kind : BlockKind or str
        One of :data:`RESIDUAL_KINDS`.
    slot : int
        Slot of the block at which the bridge to the rest of the
        graph attaches. For ``LadderPrime`` kinds slot 2 (the
        apex) and slots 0, 1 give the two configurations.

    Returns
    -------
    out : BlockPlusPattern
        Computed once per ``(kind, slot)`` with the exact oracle.

    Examples
    --------
    >>> p = block_plus_pattern('D')
    >>> p.c_ind_bplus, p.c_ind_bplus_minus_y, p.gain, p.required
    (7, 6, 3, Fraction(5, 2))
    """
    if isinstance(kind, str):
        kind = BlockKind.parse(kind)
    if kind not in RESIDUAL_KINDS:
        raise ValueError(
            "{!r} cannot be next to a leaf once no reduction "
            "applies".format(kind))
    if not 0 <= slot < kind.capacity:
        raise ValueError("{!r} has no slot {}".format(kind, slot))
    return _pattern(kind, slot)


def _farthest(tree, source):
    """
    Smallest of the vertices farthest from ``source``, with parents
    """
    parent = {source: None}
    depth = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in tree.neighbors(v):
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                queue.append(w)
    far = max(depth.values())
    return min(v for v, d in depth.items() if d == far), parent


def _longest_path(tree):
    u, _ = _farthest(tree, 0)
    end, parent = _farthest(tree, u)
    path = [end]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    return path


class LeafContext(namedtuple('LeafContext', [
        'graph', 'remap', 'pattern', 'image', 'x', 'kept', 'step'])):
    """
    What a leaf lift needs

    ``image[p]`` is the vertex of the graph playing vertex ``p``
    of the pattern; ``kept`` is the number of vertices of the
    reduced graph that come from the original one.
    """
    __slots__ = ()


def _reduce_leaf(G, dec):
    tree = dec.tree
    path = _longest_path(tree)
    v, w = path[1], path[2]
    kind = dec.labels[v]

    slot_of = {}
    for (s, t), (i, j) in dec.attachments.items():
        if v in (s, t):
            other, mine, theirs = (t, i, j) if s == v else (s, j, i)
            slot_of[other] = (mine, theirs)
    slot_v, slot_w = slot_of[w]
    x = dec.slot_vertex(w, slot_w)

    pattern = block_plus_pattern(kind, slot_v)
    image = list(dec.block_vertices(v))
    hanging = {mine: t for t, (mine, _) in slot_of.items() if t != w}
    for i in range(kind.capacity):
        if i != slot_v:
            image.extend(dec.block_vertices(hanging[i]))

    rest, remap = delete_vertices(G, image)
    n = rest.n
    dprime = DPRIME.template
    edges = rest.edges() + [(n + a, n + b) for a, b in dprime.edges()]
    edges.append((remap.old_to_new[x], n + DPRIME.slots[0]))
    reduced = build_graph(n + dprime.n, edges)
    step = 'leaf({!r})'.format(kind)
    _verify_class(reduced, step)
    logger.debug('%s: n %d -> %d', step, G.n, reduced.n)
    return reduced, LeafContext(G, remap, pattern, tuple(image), x, n, step)


def _lift_leaf(H, context):
    kept = VertexSet.from_bits(H.bits & ((1 << context.kept) - 1))
    out = context.remap.lift(kept)
    pattern = context.pattern
    if context.x in out:
        witness = pattern.witness_minus_y
    else:
        witness = pattern.witness
    out = out | [context.image[p] for p in witness]
    _verify_lift(context.graph, out, context.step)
    return out


def solve(G, budget=None):
    """
    Induced 2-regular subgraph of order at least ``5n/8 + 3/4``

    Parameters
    ----------
    G : Graph
        Connected cubic 4-chordal graph.
    budget : int, optional
        Node budget for the exact solver used on the base graph
        and on the exceptional graphs.

    Returns
    -------
    out : SolveCertificate
        For K4, K3,3 and the prism an optimal certificate (of
        order 3, 4 and 4) flagged as exceptional, without a
        bound.

    Raises
    ------
    PreconditionError
        If ``G`` is not connected, cubic and 4-chordal.
    InternalConsistencyError
        If a reduction or lift fails its verification.

    Examples
    --------
    >>> from cind.generators import named
    >>> cert = solve(named('twin_dprime'))
    >>> cert.order, cert.bound, cert.tight, cert.reduction_log
    (7, Fraction(7, 1), True, ('base-case',))
    """
    _check_4chordal_cubic(G)
    name = exceptional_name(G)
    if name is not None:
        res = c_ind_exact(G, budget)
        return SolveCertificate(res.certificate, res.value, None, False,
                                ('exceptional',), name, True)

    current = G
    lifts = []
    log = []
    while True:
        e = find_induced_ladder5(current)
        if e is not None:
            current, context = reduce_ladder5(current, e)
            lifts.append((lift_ladder5, context))
            log.append(context.step)
            continue
        e = find_induced_ladder4prime(current)
        if e is not None:
            current, context = reduce_ladder4prime(current, e)
            lifts.append((lift_ladder4prime, context))
            log.append(context.step)
            continue
        dec = decompose_4chordal(current, check=False)
        if dec.tree.n == 2:
            log.append('base-case')
            H = c_ind_exact(current, budget).certificate
            break
        current, context = _reduce_leaf(current, dec)
        lifts.append((_lift_leaf, context))
        log.append(context.step)

    if len(H) < lower_bound(current.n):
        raise InternalConsistencyError(
            "Base graph {!r} has c_ind {}".format(current, len(H)))
    while lifts:
        lift, context = lifts.pop()
        H = lift(H, context)
        if len(H) < lower_bound(context.graph.n):
            raise InternalConsistencyError(
                "{} lifted to order {} < {}".format(
                    context.step, len(H), lower_bound(context.graph.n)))

    verified = bool(verify_induced_2_regular(G, H))
    if not verified:
        raise InternalConsistencyError("Certificate is not induced 2-regular")
    bound = lower_bound(G.n)
    logger.debug('solve %r: order %d, bound %s, %d steps',
                 G, len(H), bound, len(log))
    return SolveCertificate(H, len(H), bound, len(H) == bound,
                            tuple(log), None, verified)


def check_tightness(G):
    """
    Whether ``G`` is extremal, i.e. ``c_ind(G) = 5n/8 + 3/4``

    True iff the block tree has maximum degree 3, every leaf is
    a D', every vertex of degree 2 is ``LadderDoublePrime(3)`` and
    every vertex of degree 3 is a triangle.

    Parameters
    ----------
    G : Graph
        Connected cubic 4-chordal graph other than K4, K3,3 and
        the prism.

    Examples
    --------
    >>> from cind.generators import named
    >>> check_tightness(named('twin_dprime'))
    True
    """
    dec = decompose_4chordal(G)
    tree = dec.tree
    return all(EXTREMAL_LABELS.get(tree.degree(s)) == kind
               for s, kind in enumerate(dec.labels))
