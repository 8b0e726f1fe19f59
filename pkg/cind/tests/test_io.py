import networkx as nx
import pytest
from hypothesis import given, settings

from cind.exceptions import GraphFormatError
from cind.generators import named, NAMED_GRAPHS, random_4chordal_cubic
from cind.graph import VertexSet
from cind.io import (parse_graph, emit_graph, to_networkx, from_networkx,
                     parse_vertex_set, decomposition_to_json,
                     decomposition_from_json)
from cind.structure import assemble

from .strategies import graphs


def test_graph6():
    K4 = named('K4')
    assert emit_graph(K4) == b'C~'
    assert parse_graph(b'C~') == K4
    assert parse_graph('C~\n') == K4
    assert parse_graph(b'>>graph6<<C~') == K4

    P = named('Petersen')
    expected = nx.to_graph6_bytes(nx.petersen_graph(), header=False)
    assert emit_graph(P) == expected.strip()
    assert parse_graph(expected) == P


def test_graph6_errors():
    with pytest.raises(GraphFormatError) as info:
        parse_graph(b'C~ x')
    assert info.value.offset == 2

    with pytest.raises(GraphFormatError) as info:
        parse_graph(b'>>graph6<<C~ x')
    assert info.value.offset == 12

    with pytest.raises(GraphFormatError):
        parse_graph(b'')

    with pytest.raises(GraphFormatError):
        parse_graph(b'C')


def test_edgelist():
    text = '# a triangle\n3\n\n0 1\n2 1\n0 2\n'
    G = parse_graph(text, 'edgelist')
    assert G == named('K3')
    assert emit_graph(G, 'edgelist') == b'3\n0 1\n0 2\n1 2\n'
    assert parse_graph('0', 'edgelist').n == 0


@pytest.mark.parametrize('text, line', [
    ('', 1),
    ('x', 1),
    ('-2', 1),
    ('3\n0 1\n1 5', 3),
    ('3\n0 0', 2),
    ('3\n0 1\n1 0', 3),
    ('3\n0 1 2', 2),
    ('3\n# comment\n0 one', 3),
])
def test_edgelist_errors(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text, 'edgelist')
    assert info.value.line == line


def test_unknown_format():
    with pytest.raises(ValueError):
        parse_graph(b'C~', 'dot')

    with pytest.raises(ValueError):
        emit_graph(named('K4'), 'dot')


def test_named_graphs_survive_both_formats():
    for name in NAMED_GRAPHS:
        G = named(name)
        for fmt in ('graph6', 'edgelist'):
            assert parse_graph(emit_graph(G, fmt), fmt) == G


@given(graphs(max_n=20))
@settings(max_examples=50, deadline=None)
def test_networkx_conversion(G):
    assert from_networkx(to_networkx(G)) == G
    assert parse_graph(emit_graph(G)) == G


def test_from_networkx_relabels():
    g = nx.Graph([('b', 'c'), ('a', 'b')])
    G = from_networkx(g)
    assert G.edges() == [(0, 1), (1, 2)]


def test_parse_vertex_set():
    assert parse_vertex_set('4, 0 2') == VertexSet([0, 2, 4])
    assert parse_vertex_set('') == VertexSet()

    with pytest.raises(ValueError):
        parse_vertex_set('1,-2')

    with pytest.raises(ValueError):
        parse_vertex_set('1,two')


def test_decomposition_json():
    G, dec = random_4chordal_cubic(5, seed=11, return_decomposition=True)
    again = decomposition_from_json(decomposition_to_json(dec))
    assert again.labels == dec.labels
    assert assemble(again) == G

    # attachments are optional
    text = '{"tree": [[0, 1]], "labels": ["Dprime", "Dprime"]}'
    assert assemble(decomposition_from_json(text)) == named('twin_dprime')

    for bad in ('not json', '{"tree": []}', '{"tree": 1, "labels": []}',
                '{"tree": [], "labels": ["Foo"]}'):
        with pytest.raises(GraphFormatError):
            decomposition_from_json(bad)
