"""
Reading and writing graphs and decompositions

Two graph formats are supported:

``graph6``
    The standard printable encoding; an optional ``>>graph6<<``
    header is accepted. Decoding and encoding are done by
    :mod:`networkx`.
``edgelist``
    A line with the order ``n`` followed by one ``u v`` line per
    edge, vertices numbered from 0. Blank lines and lines
    starting with ``#`` are ignored.
"""
import json

import networkx as nx

from .blocks import BlockKind
from .exceptions import GraphFormatError
from .graph import VertexSet, build_graph
from .structure import BlockDecomposition

__all__ = ['FORMATS', 'parse_graph', 'emit_graph', 'to_networkx',
           'from_networkx', 'parse_vertex_set', 'decomposition_to_json',
           'decomposition_from_json']

FORMATS = ('graph6', 'edgelist')
GRAPH6_HEADER = b'>>graph6<<'


def to_networkx(G):
    """
    Convert to a :class:`networkx.Graph` on nodes ``0..n-1``
    """
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges())
    return g


def from_networkx(g):
    """
    Convert from a networkx graph, relabelling nodes in sorted order
    """
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), [(index[u], index[v])
                                    for u, v in g.edges()])


def _as_bytes(data):
    if isinstance(data, str):
        return data.encode('ascii', errors='replace')
    return bytes(data)


def _parse_graph6(data):
    data = data.strip()
    start = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER) else 0
    body = data[start:]
    if not body:
        raise GraphFormatError("Empty graph6 string")
    for i, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise GraphFormatError(
                "Invalid graph6 character {!r}".format(chr(byte)),
                offset=start + i)
    try:
        g = nx.from_graph6_bytes(body)
    except (nx.NetworkXError, ValueError) as err:
        raise GraphFormatError("Malformed graph6 string: {}".format(err))
    return from_networkx(g)


def _parse_edgelist(data):
    lines = [(i, line.strip())
             for i, line in enumerate(data.decode('ascii', 'replace')
                                      .splitlines(), start=1)]
    lines = [(i, line) for i, line in lines
             if line and not line.startswith('#')]
    if not lines:
        raise GraphFormatError("Missing vertex count", line=1)

    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise GraphFormatError(
            "Expected the vertex count, got {!r}".format(first), line=lineno)
    if n < 0:
        raise GraphFormatError("Negative vertex count", line=lineno)

    edges = []
    seen = set()
    for lineno, line in lines[1:]:
        fields = line.split()
        try:
            u, v = (int(x) for x in fields)
        except ValueError:
            raise GraphFormatError(
                "Expected two vertex numbers, got {!r}".format(line),
                line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(
                "Edge ({}, {}) does not fit n = {}".format(u, v, n),
                line=lineno)
        if u == v:
            raise GraphFormatError(
                "Self-loop at vertex {}".format(u), line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(
                "Duplicate edge {}".format(key), line=lineno)
        seen.add(key)
        edges.append(key)
    return build_graph(n, edges)


def parse_graph(data, format='graph6'):
    """
    Decode a graph

    Parameters
    ----------
    data : bytes or str
        Encoded graph.
    format : str
        ``'graph6'`` or ``'edgelist'``.

    Returns
    -------
    out : Graph

    Raises
    ------
    GraphFormatError
        With the byte offset (graph6) or line (edge list) of the
        problem.

    Examples
    --------
    >>> parse_graph(b'C~')
    Graph(n=4, m=6)
    >>> parse_graph('3\\n0 1\\n1 2\\n2 0', 'edgelist').edges()
    [(0, 1), (0, 2), (1, 2)]
    >>> parse_graph(b'C~ x')
    Traceback (most recent call last):
        ...
    cind.exceptions.GraphFormatError: Invalid graph6 character ' ' at offset 2
    """
    data = _as_bytes(data)
    if format == 'graph6':
        return _parse_graph6(data)
    elif format == 'edgelist':
        return _parse_edgelist(data)
    raise ValueError("Unknown format {!r}, use one of {}".format(
        format, FORMATS))


def emit_graph(G, format='graph6'):
    """
    Encode a graph

    Parameters
    ----------
    G : Graph
        Graph to encode.
    format : str
        ``'graph6'`` or ``'edgelist'``.

    Returns
    -------
    out : bytes
        graph6 without header or trailing newline; edge lists end
        with a newline.

    Examples
    --------
    >>> from cind.generators import named
    >>> emit_graph(named('K4'))
    b'C~'
    >>> print(emit_graph(named('K3'), 'edgelist').decode())
    3
    0 1
    0 2
    1 2
    <BLANKLINE>
    """
    if format == 'graph6':
        return nx.to_graph6_bytes(to_networkx(G), header=False).rstrip(b'\n')
    elif format == 'edgelist':
        lines = [str(G.n)] + ['{} {}'.format(u, v) for u, v in G.edges()]
        return ('\n'.join(lines) + '\n').encode('ascii')
    raise ValueError("Unknown format {!r}, use one of {}".format(
        format, FORMATS))


def parse_vertex_set(text):
    """
    Parse vertices separated by commas or whitespace

    Examples
    --------
    >>> parse_vertex_set('4, 0 2')
    VertexSet([0, 2, 4])
    """
    fields = text.replace(',', ' ').split()
    try:
        vertices = [int(x) for x in fields]
    except ValueError:
        raise ValueError("Not a vertex list: {!r}".format(text))
    if any(v < 0 for v in vertices):
        raise ValueError("Negative vertex in {!r}".format(text))
    return VertexSet(vertices)


def decomposition_to_json(dec):
    """
    Serialise a tree of blocks

    Every tree edge is written with its slots, filled in where
    the decomposition leaves them open.

    Examples
    --------
    >>> from cind.generators import named
    >>> from cind.structure import decompose_4chordal
    >>> dec = decompose_4chordal(named('twin_dprime'))
    >>> json.loads(decomposition_to_json(dec))
    {'tree': [[0, 1]], 'labels': ['Dprime', 'Dprime'],
     'attachments': [[0, 1, 0, 0]]}
    """
    attachments = dec.resolved_attachments()
    return json.dumps({
        'tree': [list(e) for e in dec.tree.edges()],
        'labels': [repr(kind) for kind in dec.labels],
        'attachments': [[s, t, i, j] for (s, t), (i, j)
                        in sorted(attachments.items())],
    })


def decomposition_from_json(text):
    """
    Read a tree of blocks written by :func:`decomposition_to_json`

    ``attachments`` may be left out. The result is not validated;
    :func:`~cind.structure.assemble` does that.

    Raises
    ------
    GraphFormatError
        If the document does not have the expected shape.
    """
    try:
        doc = json.loads(text)
        labels = [BlockKind.parse(label) for label in doc['labels']]
        tree = build_graph(len(labels), [tuple(e) for e in doc['tree']])
        attachments = {}
        for s, t, i, j in doc.get('attachments', []):
            if s > t:
                s, t, i, j = t, s, j, i
            attachments[(s, t)] = (i, j)
    except (KeyError, TypeError, ValueError) as err:
        raise GraphFormatError("Malformed decomposition: {}".format(err))
    return BlockDecomposition(tree, labels, attachments)
