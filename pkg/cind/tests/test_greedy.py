import pytest
from hypothesis import given, settings

from cind.cycles import InducedCycle, verify_induced_2_regular
from cind.exceptions import PreconditionError
from cind.generators import named
from cind.graph import cyclomatic_number, disjoint_union
from cind.greedy import greedy_decompose

from .strategies import cubic_graphs


def test_greedy_K4():
    trace = greedy_decompose(named('K4'))
    assert len(trace) == 1
    step = trace.steps[0]
    assert step.cycle == InducedCycle((0, 1, 2))
    assert (step.n_removed, step.m_removed) == (4, 6)
    assert (step.mu_drop, step.kappa_drop) == (3, 1)
    assert trace.residual_forest.n == 0
    assert trace.order == 3
    assert trace.violations() == []


def test_greedy_prefers_small_mu_drop():
    # hexagon and pentagon both drop mu by 6
    trace = greedy_decompose(named('Petersen'))
    assert trace.steps[0].length == 6
    assert trace.steps[0].mu_drop == 6
    assert trace.order == 6
    assert trace.residual_forest.n == 1
    assert trace.violations() == []


def test_greedy_preconditions():
    with pytest.raises(PreconditionError) as info:
        greedy_decompose(named('K3'))
    assert info.value.check == 'not cubic'

    G = disjoint_union(named('K4'), named('K4'))
    with pytest.raises(PreconditionError) as info:
        greedy_decompose(G)
    assert info.value.check == 'not connected'

    with pytest.warns(UserWarning):
        trace = greedy_decompose(G, per_component=True)
    assert trace.per_component
    assert trace.order == 6
    assert [s.component for s in trace.steps] == [0, 1]
    assert trace.violations() == []


@given(cubic_graphs(max_n=18))
@settings(max_examples=30, deadline=None)
def test_greedy_invariants(G):
    trace = greedy_decompose(G)
    assert trace.violations() == []
    assert sum(s.mu_drop for s in trace.steps) == cyclomatic_number(G)
    assert verify_induced_2_regular(G, trace.union)
    assert len(trace.union) == trace.order
    assert 2 * trace.steps[0].length >= trace.steps[0].mu_drop
    for step in trace.steps[1:]:
        assert step.mu_drop <= 2 * step.length - 2
