"""
Hypothesis strategies for graphs
"""
from hypothesis import strategies as st

from cind.generators import random_cubic_connected, random_4chordal_cubic
from cind.graph import build_graph

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def graphs(draw, min_n=1, max_n=10):
    """
    Arbitrary simple graphs, every vertex pair decided by a coin
    """
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs),
                         max_size=len(pairs)))
    return build_graph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def cubic_graphs(draw, min_n=4, max_n=16):
    """
    Connected cubic graphs from the pairing model
    """
    n = 2 * draw(st.integers(min_value=min_n // 2, max_value=max_n // 2))
    return random_cubic_connected(n, draw(seeds))


@st.composite
def four_chordal_cubic_graphs(draw, max_tree_order=6):
    """
    Connected cubic 4-chordal graphs with their decompositions
    """
    order = draw(st.integers(min_value=2, max_value=max_tree_order))
    return random_4chordal_cubic(order, draw(seeds),
                                 return_decomposition=True)


@st.composite
def permutations_of(draw, G):
    """
    ``G`` with its vertices relabelled at random
    """
    perm = draw(st.permutations(range(G.n)))
    return build_graph(G.n, [(perm[u], perm[v]) for u, v in G.edges()])
