import networkx as nx
import pytest

from cind.blocks import (BlockKind, PLAIN, FIXED_TAGS, PARAMETRIC_TAGS,
                         find_embeddings, labels_for_degree)
from cind.cycles import is_k_chordal
from cind.generators import named
from cind.graph import block_structure
from cind.io import to_networkx


def all_kinds(ks=range(2, 7)):
    for tag in FIXED_TAGS:
        yield BlockKind(tag)
    for tag in PARAMETRIC_TAGS:
        for k in ks:
            yield BlockKind(tag, k)


def test_block_kind_errors():
    with pytest.raises(ValueError):
        BlockKind('Ladder')

    with pytest.raises(ValueError):
        BlockKind('Ladder', 1)

    with pytest.raises(ValueError):
        BlockKind('Ladder', 2.5)

    with pytest.raises(ValueError):
        BlockKind('K3', 2)

    with pytest.raises(ValueError):
        BlockKind('Foo')

    with pytest.raises(ValueError):
        BlockKind.parse('nonsense(')


def test_parse():
    assert BlockKind.parse('Ladder(k=3)') == BlockKind('Ladder', 3)
    assert BlockKind.parse(' Ladder( 3 ) ') == BlockKind('Ladder', 3)
    assert BlockKind.parse('PlainVertex') is not PLAIN
    assert BlockKind.parse('PlainVertex') == PLAIN
    for kind in all_kinds():
        assert BlockKind.parse(repr(kind)) == kind
    assert len({BlockKind('K3'), BlockKind.parse('K3')}) == 1


def test_templates():
    for kind in all_kinds():
        T = kind.template
        degrees = T.degrees()
        assert max(degrees) <= 3
        # the slots are the vertices of degree 2
        assert sorted(kind.slots) == [v for v, d in enumerate(degrees)
                                      if d == 2]
        assert sorted(kind.search_order) == list(range(T.n))

    assert BlockKind('Ladder', 4).template.n == 8
    assert BlockKind('LadderPrime', 4).template.n == 9
    assert BlockKind('LadderDoublePrime', 4).template.n == 10
    assert BlockKind('LadderDoublePrime', 3).slots == (7, 6)
    assert PLAIN.template.n == 1
    assert PLAIN.capacity == 3
    assert PLAIN.is_plain and not BlockKind('K3').is_plain


def test_templates_are_2connected_and_4chordal():
    for kind in all_kinds():
        T = kind.template
        assert block_structure(T).is_biconnected
        assert nx.is_biconnected(to_networkx(T))
        assert is_k_chordal(T, 4)


def test_labels_for_degree():
    for d in range(1, 5):
        for tag in labels_for_degree(d):
            k = 3 if tag in PARAMETRIC_TAGS else None
            assert BlockKind(tag, k).capacity == d
    assert labels_for_degree(0) == ()
    assert labels_for_degree(5) == ()


def test_find_embeddings():
    K3 = BlockKind('K3').template
    K4 = named('K4')
    assert len(list(find_embeddings(K3, K4))) == 24
    assert list(find_embeddings(K3, K4, iso=True)) == []
    assert list(find_embeddings(K3, BlockKind('Ladder', 2).template)) == []
    assert list(find_embeddings(K4, K3)) == []

    # Induced: the diamond is not in K4
    D = BlockKind('D').template
    assert list(find_embeddings(D, K4)) == []

    images = list(find_embeddings(K3, K4))
    assert images == sorted(images)
