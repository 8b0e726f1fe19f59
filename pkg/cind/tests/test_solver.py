from fractions import Fraction

import pytest
from hypothesis import given, settings

from cind.blocks import BlockKind
from cind.cycles import enumerate_induced_cycles, verify_induced_2_regular
from cind.exceptions import PreconditionError
from cind.experiments import BLOCK_PLUS_TABLE
from cind.generators import named, ladder_family, random_4chordal_cubic
from cind.graph import (VertexSet, build_graph, closed_neighborhood,
                        degree_check, disjoint_union)
from cind.options import options
from cind.oracle import c_ind_exact
from cind.solver import (find_induced_ladder5, reduce_ladder5, lift_ladder5,
                         find_induced_ladder4prime, reduce_ladder4prime,
                         lift_ladder4prime, block_plus_pattern, solve,
                         check_tightness, lower_bound, RESIDUAL_KINDS)
from cind.structure import (BlockDecomposition, assemble, generate_extremal,
                            decompose_4chordal)

from .strategies import four_chordal_cubic_graphs

DPRIME = BlockKind('Dprime')
PATH3 = build_graph(3, [(0, 1), (1, 2)])
STAR3 = build_graph(4, [(0, 1), (0, 2), (0, 3)])
STAR4 = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


def star_of(kind, tree):
    leaves = tree.n - 1
    return assemble(BlockDecomposition(tree, [kind] + [DPRIME] * leaves))


def test_lower_bound():
    assert lower_bound(10) == 7
    assert lower_bound(18) == 12
    assert lower_bound(14) == Fraction(19, 2)


def test_ladder5_reduction():
    G = star_of(BlockKind('Ladder', 5), STAR4)
    assert G.n == 30

    e = find_induced_ladder5(G)
    assert e is not None
    assert e.apex is None
    assert e.vertices == VertexSet(range(10))

    reduced, context = reduce_ladder5(G, e)
    assert reduced.n == 24
    assert degree_check(reduced).kind == 'cubic'
    assert decompose_4chordal(reduced).labels[0] == BlockKind('Ladder', 2)

    H = solve(reduced).subgraph
    lifted = lift_ladder5(H, context)
    assert len(lifted) == len(H) + 4
    assert verify_induced_2_regular(G, lifted)

    # the empty certificate lifts too
    assert len(lift_ladder5(VertexSet(), context)) == 4


def test_ladder5_absent():
    assert find_induced_ladder5(ladder_family('ladder', 4)) is None
    assert find_induced_ladder5(named('twin_dprime')) is None


def test_ladder4prime_reduction():
    G = star_of(BlockKind('LadderPrime', 4), STAR3)
    assert G.n == 24

    e = find_induced_ladder4prime(G)
    assert e is not None
    assert len(e.a) == len(e.b) == 4
    assert e.vertices == VertexSet(range(9))
    assert G.has_edge(e.apex, e.a[3]) and G.has_edge(e.apex, e.b[3])

    reduced, context = reduce_ladder4prime(G, e)
    assert reduced == generate_extremal(STAR3)

    cert = solve(reduced)
    assert cert.order == 12 and cert.tight
    lifted = lift_ladder4prime(cert.subgraph, context)
    assert len(lifted) == 16
    assert verify_induced_2_regular(G, lifted)

    assert find_induced_ladder4prime(ladder_family('Bprime', 3)) is None


def induced_2_regular_sets(G):
    """
    Every induced 2-regular vertex set of G, the empty one included
    """
    cycles = [VertexSet(C) for C in enumerate_induced_cycles(G)]
    found = []

    def extend(start, chosen, blocked):
        found.append(chosen)
        for i in range(start, len(cycles)):
            C = cycles[i]
            if not C.bits & blocked:
                extend(i + 1, chosen | C,
                       blocked | closed_neighborhood(G, C).bits)

    extend(0, VertexSet(), 0)
    return found


LP4_TREE = build_graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
LP4_LABELS = [BlockKind('LadderPrime', 4), DPRIME, DPRIME, BlockKind('D'),
              DPRIME]


@pytest.mark.parametrize('dec, find, reduce, lift', [
    (BlockDecomposition(PATH3, [DPRIME, BlockKind('LadderDoublePrime', 5),
                                DPRIME]),
     find_induced_ladder5, reduce_ladder5, lift_ladder5),
    (BlockDecomposition(PATH3, [DPRIME, BlockKind('LadderDoublePrime', 4),
                                DPRIME]),
     find_induced_ladder4prime, reduce_ladder4prime, lift_ladder4prime),
    # the D branch on the apex, then on the first rung
    (BlockDecomposition(LP4_TREE, LP4_LABELS, {(0, 3): (2, 0)}),
     find_induced_ladder4prime, reduce_ladder4prime, lift_ladder4prime),
    (BlockDecomposition(LP4_TREE, LP4_LABELS, {(0, 3): (0, 0)}),
     find_induced_ladder4prime, reduce_ladder4prime, lift_ladder4prime),
])
def test_lift_every_certificate(dec, find, reduce, lift):
    G = assemble(dec)
    e = find(G)
    assert e is not None
    reduced, context = reduce(G, e)
    assert reduced.n == G.n - 6

    certificates = induced_2_regular_sets(reduced)
    assert len(certificates) > 1
    for H in certificates:
        assert verify_induced_2_regular(reduced, H)
        lifted = lift(H, context)
        assert len(lifted) == len(H) + 4
        assert verify_induced_2_regular(G, lifted)


def table_params():
    for name, values in BLOCK_PLUS_TABLE.items():
        kind = BlockKind.parse(name)
        order = kind.template.n + DPRIME.template.n * (kind.capacity - 1)
        if order > 16:
            yield pytest.param(name, values, marks=pytest.mark.slow)
        else:
            yield name, values


@pytest.mark.parametrize('name, values', list(table_params()))
def test_block_plus_table(name, values):
    p = block_plus_pattern(name)
    assert (p.c_ind_bplus, p.c_ind_bplus_minus_y) == values
    assert p.gain >= p.required
    assert verify_induced_2_regular(p.graph, p.witness)
    assert len(p.witness) == p.c_ind_bplus
    assert p.y not in p.witness_minus_y
    assert verify_induced_2_regular(p.graph, p.witness_minus_y)


def test_block_plus_tight_kinds():
    # only the blocks of extremal graphs gain exactly 5/8 per vertex
    for name in ('K3', 'LadderDoublePrime(k=3)'):
        p = block_plus_pattern(name)
        assert p.gain == p.required
    for name in ('D', 'K33minus', 'PlainVertex', 'K23'):
        p = block_plus_pattern(name)
        assert p.gain > p.required


def test_block_plus_apex_slot():
    p = block_plus_pattern(BlockKind('LadderPrime', 2), slot=2)
    assert p.y == 4
    assert (p.c_ind_bplus, p.c_ind_bplus_minus_y) == (11, 10)
    assert p.gain >= p.required


def test_block_plus_errors():
    with pytest.raises(ValueError):
        block_plus_pattern('Dprime')

    with pytest.raises(ValueError):
        block_plus_pattern(BlockKind('Ladder', 5))

    with pytest.raises(ValueError):
        block_plus_pattern('K3', slot=3)

    assert len(RESIDUAL_KINDS) == len(BLOCK_PLUS_TABLE)


def test_solve_base_and_extremal():
    cert = solve(named('twin_dprime'))
    assert cert.order == 7 and cert.tight
    assert cert.exceptional is None
    assert cert.verified

    cert = solve(generate_extremal(PATH3))
    assert cert.order == 12
    assert cert.bound == 12 and cert.tight
    assert cert.reduction_log == ('leaf(LadderDoublePrime(k=3))',
                                  'base-case')

    cert = solve(generate_extremal(STAR3))
    assert cert.order == 12 and cert.tight
    assert cert.reduction_log == ('leaf(K3)', 'base-case')

    G = star_of(BlockKind('LadderPrime', 4), STAR3)
    cert = solve(G)
    assert cert.reduction_log == ('B4prime-reduce', 'leaf(K3)', 'base-case')
    assert cert.order == 16


def test_solve_not_tight():
    tree = PATH3
    G = assemble(BlockDecomposition(tree, [DPRIME, BlockKind('D'), DPRIME]))
    cert = solve(G)
    assert cert.order >= 10
    assert not cert.tight
    assert not check_tightness(G)
    assert c_ind_exact(G).value >= cert.order


def test_solve_exceptional():
    for name, order in (('K4', 3), ('K33', 4), ('Prism', 4)):
        cert = solve(named(name))
        assert cert.order == order
        assert cert.exceptional == name
        assert cert.bound is None and not cert.tight
        assert cert.reduction_log == ('exceptional',)
        assert verify_induced_2_regular(named(name), cert.subgraph)


def test_solve_preconditions():
    for check, G in [
            ('not 4-chordal', named('Petersen')),
            ('not cubic', named('K3')),
            ('not connected', disjoint_union(named('twin_dprime'),
                                             named('twin_dprime'))),
    ]:
        with pytest.raises(PreconditionError) as info:
            solve(G)
        assert info.value.check == check


def test_solve_without_step_checks():
    with options(verify_steps=False):
        cert = solve(generate_extremal(STAR3))
    assert cert.order == 12
    assert cert.verified


def test_check_tightness():
    assert check_tightness(named('twin_dprime'))
    assert check_tightness(generate_extremal(PATH3))
    assert not check_tightness(star_of(BlockKind('LadderPrime', 4), STAR3))


def tightness_graphs():
    path = [
        assemble(BlockDecomposition(PATH3, [DPRIME, kind, DPRIME]))
        for kind in (BlockKind('D'), BlockKind('K33minus'),
                     BlockKind('LadderDoublePrime', 2))
    ]
    star = [star_of(BlockKind(tag), STAR3) for tag in ('K23', 'PlainVertex')]
    extremal = [named('twin_dprime'), generate_extremal(PATH3),
                generate_extremal(STAR3)]
    return extremal + path + star


@pytest.mark.parametrize('G', tightness_graphs())
def test_check_tightness_matches_oracle(G):
    assert check_tightness(G) == (c_ind_exact(G).value == lower_bound(G.n))


@given(four_chordal_cubic_graphs(max_tree_order=6))
@settings(max_examples=25, deadline=None)
def test_solve_meets_bound(pair):
    G, _ = pair
    cert = solve(G)
    assert cert.verified
    assert cert.order == len(cert.subgraph)
    assert cert.order >= lower_bound(G.n)
    assert verify_induced_2_regular(G, cert.subgraph)
    if check_tightness(G):
        assert cert.tight


@pytest.mark.slow
def test_solve_many():
    for seed in range(500):
        order = 2 + seed % 9
        G = random_4chordal_cubic(order, seed)
        cert = solve(G)
        assert cert.order >= lower_bound(G.n)
        if G.n <= 20:
            assert c_ind_exact(G).value >= cert.order
