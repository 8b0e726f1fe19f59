import networkx as nx
import pytest
from hypothesis import given, settings

from cind.exceptions import (VertexRangeError, SelfLoopError,
                             DuplicateEdgeError, GraphError)
from cind.generators import named
from cind.graph import (VertexSet, build_graph, kappa, cyclomatic_number,
                        closed_neighborhood, delete_vertices,
                        block_structure, degree_check, components,
                        disjoint_union)
from cind.io import to_networkx

from .strategies import graphs, cubic_graphs

C5 = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
PATH3 = build_graph(3, [(0, 1), (1, 2)])


def test_build_graph_errors():
    with pytest.raises(VertexRangeError):
        build_graph(3, [(0, 3)])

    with pytest.raises(SelfLoopError):
        build_graph(2, [(1, 1)])

    with pytest.raises(DuplicateEdgeError):
        build_graph(3, [(0, 1), (1, 2), (1, 0)])

    # All are GraphErrors, which are ValueErrors
    with pytest.raises(GraphError):
        build_graph(1, [(0, -1)])

    with pytest.raises(ValueError):
        build_graph(-1, [])


def test_vertex_set():
    S = VertexSet([3, 1])
    assert list(S) == [1, 3]
    assert S | [0] == VertexSet([0, 1, 3])
    assert S & [3, 4] == VertexSet([3])
    assert S - [1] == VertexSet([3])
    assert VertexSet([3]) <= S
    assert not S <= VertexSet([3])
    assert S.min() == 1 and S.max() == 3
    assert VertexSet().min() == -1 and VertexSet().max() == -1
    assert not VertexSet()
    assert -1 not in S
    assert hash(S) == hash(VertexSet([1, 3]))
    assert S.to_tuple() == (1, 3)
    assert VertexSet(S) == S
    assert VertexSet.from_bits(0b1010) == S


def test_graph_basics():
    K4 = named('K4')
    assert K4.n == len(K4) == 4
    assert K4.degrees() == (3, 3, 3, 3)
    assert K4.neighbors(0) == (1, 2, 3)
    assert K4.has_edge(2, 3)
    assert not C5.has_edge(0, 2)
    assert C5.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert build_graph(3, [(0, 1)]).with_edges([(1, 2)]) == PATH3
    assert C5 != PATH3
    assert build_graph(0, []).is_connected()


def test_induced_and_delete():
    K4 = named('K4')
    H, remap = K4.induced([0, 1, 2])
    assert (H.n, H.m) == (3, 3)
    assert remap.new_to_old == (0, 1, 2)

    H, remap = delete_vertices(C5, [4, 0, 1])
    assert H == build_graph(2, [(0, 1)])
    assert remap.push(VertexSet([0, 2, 3])) == VertexSet([0, 1])
    assert remap.lift(VertexSet([1])) == VertexSet([3])
    assert remap.old_to_new[0] is None

    with pytest.raises(VertexRangeError):
        K4.induced([7])


def test_counts():
    assert kappa(build_graph(4, [(0, 1)])) == 3
    assert kappa(build_graph(0, [])) == 0
    assert cyclomatic_number(named('Petersen')) == 6
    assert cyclomatic_number(PATH3) == 0
    assert closed_neighborhood(C5, [0]) == VertexSet([0, 1, 4])
    G = disjoint_union(named('K3'), named('K3'))
    assert (3, 4) in G.edges()
    assert components(G) == [VertexSet([0, 1, 2]), VertexSet([3, 4, 5])]


def test_block_structure():
    bs = block_structure(named('twin_dprime'))
    assert bs.bridges == ((4, 9),)
    assert len(bs.nontrivial_blocks) == 2
    assert bs.cutvertices == VertexSet([4, 9])
    assert not bs.is_biconnected

    assert block_structure(named('Petersen')).is_biconnected

    bs = block_structure(PATH3)
    assert bs.blocks == (VertexSet([0, 1]), VertexSet([1, 2]))
    assert bs.cutvertices == VertexSet([1])
    assert bs.bridges == ((0, 1), (1, 2))

    # Isolated vertices are in no block
    assert block_structure(build_graph(2, [])).blocks == ()


def test_degree_check():
    assert degree_check(named('K4')).kind == 'cubic'
    assert degree_check(build_graph(0, [])).kind == 'subcubic'
    star = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    report = degree_check(star)
    assert report.kind == 'neither'
    assert report.degrees == (4, 1, 1, 1, 1)


@given(graphs(max_n=12))
@settings(max_examples=60, deadline=None)
def test_block_structure_matches_networkx(G):
    g = to_networkx(G)
    bs = block_structure(G)
    ours = sorted(tuple(b) for b in bs.blocks)
    theirs = sorted(tuple(sorted(b)) for b in nx.biconnected_components(g))
    assert ours == theirs
    assert list(bs.cutvertices) == sorted(nx.articulation_points(g))
    assert sorted(bs.bridges) == sorted(
        tuple(sorted(e)) for e in nx.bridges(g))
    assert kappa(G) == nx.number_connected_components(g)


@given(cubic_graphs(max_n=20))
@settings(max_examples=30, deadline=None)
def test_cubic_cyclomatic_number(G):
    assert G.is_connected()
    assert degree_check(G).kind == 'cubic'
    assert cyclomatic_number(G) == G.n // 2 + 1
