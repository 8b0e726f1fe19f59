from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings

from cind.cycles import (InducedCycle, ACYCLIC, enumerate_induced_cycles,
                         chordality, is_k_chordal, verify_induced_2_regular,
                         component_cycles)
from cind.exceptions import PreconditionError, VertexRangeError
from cind.generators import named, ladder_family
from cind.graph import VertexSet, build_graph, disjoint_union
from cind.io import to_networkx

from .strategies import graphs


def cycle_graph(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_induced_cycle_canonical():
    assert InducedCycle([2, 0, 1]).vertices == (0, 1, 2)
    assert InducedCycle([0, 2, 1]) == InducedCycle([1, 2, 0])
    c = InducedCycle([5, 3, 4, 6])
    assert c.vertices == (3, 4, 6, 5)
    assert c.length == len(c) == 4
    assert c.as_set() == VertexSet([3, 4, 5, 6])
    assert len({c, InducedCycle([6, 4, 3, 5])}) == 1


def test_enumerate_induced_cycles():
    cycles = enumerate_induced_cycles(named('K33'))
    assert len(cycles) == 9
    assert all(len(c) == 4 for c in cycles)

    lengths = Counter(len(c) for c in enumerate_induced_cycles(
        named('Petersen')))
    assert lengths == {5: 12, 6: 10}

    assert enumerate_induced_cycles(named('Petersen'), max_length=4) == []
    assert enumerate_induced_cycles(cycle_graph(7)) == [
        InducedCycle(range(7))]
    assert enumerate_induced_cycles(build_graph(3, [(0, 1)])) == []


def test_chordality():
    assert chordality(named('K4')) == 3
    assert chordality(named('K33')) == 4
    assert chordality(named('Prism')) == 4
    assert chordality(named('Petersen')) == 6
    assert chordality(cycle_graph(6)) == 6
    assert chordality(build_graph(3, [(0, 1), (1, 2)])) is ACYCLIC
    assert chordality(build_graph(0, [])) is ACYCLIC
    assert str(ACYCLIC) == 'acyclic'


def test_necklace_is_not_4chordal():
    G = named('necklace')
    assert chordality(G) == 6
    assert not is_k_chordal(G, 4)
    assert is_k_chordal(G, 6)


def test_is_k_chordal():
    C6 = cycle_graph(6)
    assert not is_k_chordal(C6, 5)
    assert is_k_chordal(C6, 6)
    for k in range(3, 9):
        assert is_k_chordal(ladder_family('ladder', 6), k) == (k >= 4)

    with pytest.raises(ValueError):
        is_k_chordal(C6, 2)


@given(graphs(min_n=3, max_n=9))
@settings(max_examples=60, deadline=None)
def test_is_k_chordal_agrees_with_chordality(G):
    k = chordality(G)
    for j in range(3, 8):
        expected = k is ACYCLIC or k <= j
        assert is_k_chordal(G, j) == expected
    assert is_k_chordal(G, 3) == nx.is_chordal(to_networkx(G))


def test_verify_induced_2_regular():
    K4 = named('K4')
    assert verify_induced_2_regular(K4, [])
    assert verify_induced_2_regular(K4, VertexSet([1, 2, 3]))
    verdict = verify_induced_2_regular(K4, [0, 1])
    assert not verdict
    assert (verdict.vertex, verdict.degree) == (0, 1)

    with pytest.raises(VertexRangeError):
        verify_induced_2_regular(K4, [4])


def test_component_cycles():
    C4 = cycle_graph(4)
    G = disjoint_union(C4, named('K3'))
    cycles = component_cycles(G, range(7))
    assert cycles == [InducedCycle((0, 1, 2, 3)), InducedCycle((4, 5, 6))]

    with pytest.raises(PreconditionError) as info:
        component_cycles(named('K4'), range(4))
    assert info.value.check == 'not induced 2-regular'
