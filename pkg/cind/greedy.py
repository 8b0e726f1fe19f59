"""
Greedy cycle-removal decomposition of cubic graphs

Starting from ``G_0 = G`` the greedy repeatedly picks an induced
cycle ``C_i`` of ``G_{i-1}`` and deletes its closed neighborhood.
The cycle chosen minimises ``mu_i - l_i``, the drop of the
cyclomatic number minus the cycle length; ties go to the shorter
cycle, then to the lexicographically smaller vertex sequence. The
cycles found are pairwise non-adjacent, so their union induces a
2-regular subgraph.
"""
import warnings
from collections import namedtuple

from .cycles import enumerate_induced_cycles, verify_induced_2_regular
from .exceptions import PreconditionError
from .graph import VertexSet, cyclomatic_number, degree_check

__all__ = ['GreedyStep', 'GreedyTrace', 'greedy_decompose']


#: One deletion step. ``n_removed``, ``m_removed``, ``mu_drop``
#: and ``kappa_drop`` are the decreases of order, size,
#: cyclomatic number and number of components.
GreedyStep = namedtuple('GreedyStep', [
    'cycle', 'length', 'n_removed', 'm_removed', 'mu_drop',
    'kappa_drop', 'component'])


class GreedyTrace:
    """
    Record of a greedy run

    Parameters
    ----------
    graph : Graph
        The input graph.
    steps : list of GreedyStep
        Steps in the order they were taken.
    residual_bits : int
        Vertices of the final forest ``G_t``, as a bitmask.
    per_component : bool
        Whether the run was made per component of a
        disconnected input.
    """

    def __init__(self, graph, steps, residual_bits, per_component=False):
        self.graph = graph
        self.steps = list(steps)
        self.residual_bits = residual_bits
        self.per_component = per_component
        self.residual_forest, self.residual_remap = graph.induced(
            VertexSet.from_bits(residual_bits))
        union = 0
        for step in self.steps:
            union |= step.cycle.bits
        self.union = VertexSet.from_bits(union)

    def __repr__(self):
        return 'GreedyTrace(t={}, order={}, residual={})'.format(
            len(self.steps), self.order, self.residual_forest.n)

    def __len__(self):
        return len(self.steps)

    @property
    def cycles(self):
        return [step.cycle for step in self.steps]

    @property
    def order(self):
        """
        Order of the induced 2-regular subgraph found
        """
        return sum(step.length for step in self.steps)

    def violations(self):
        """
        Broken per-step inequalities and accounting identities

        Returns
        -------
        out : list of str
            Empty for a correct run on cubic input.
        """
        problems = []
        seen = set()
        for i, step in enumerate(self.steps, start=1):
            first = step.component not in seen
            seen.add(step.component)
            limit = 2 * step.length - (0 if first else 2)
            if step.mu_drop > limit:
                problems.append(
                    'step {}: mu drop {} > {}'.format(
                        i, step.mu_drop, limit))
            if step.n_removed > 2 * step.length:
                problems.append(
                    'step {}: removed {} vertices > {}'.format(
                        i, step.n_removed, 2 * step.length))

        residual_mu = cyclomatic_number(self.residual_forest)
        if residual_mu:
            problems.append(
                'residual has cyclomatic number {}'.format(residual_mu))
        total = sum(step.mu_drop for step in self.steps) + residual_mu
        expected = cyclomatic_number(self.graph)
        if total != expected:
            problems.append('mu drops sum to {}, expected {}'.format(
                total, expected))
        if not verify_induced_2_regular(self.graph, self.union):
            problems.append('union is not induced 2-regular')
        return problems


def _mu(G, bits):
    return (G.edges_within(bits) + len(G.component_bits(bits))
            - bits.bit_count())


def _run(G, cycles, alive, component, steps):
    """
    Greedy on ``G[alive]``, appending to ``steps``
    """
    mu = _mu(G, alive)
    m = G.edges_within(alive)
    k = len(G.component_bits(alive))
    while True:
        cycles = [c for c in cycles if not c.bits & ~alive]
        best = None
        for c in cycles:
            rest = alive & ~G.neighborhood_bits(c.bits)
            m_rest = G.edges_within(rest)
            k_rest = len(G.component_bits(rest))
            mu_rest = m_rest + k_rest - rest.bit_count()
            key = ((mu - mu_rest) - len(c), len(c), c.vertices)
            if best is None or key < best[0]:
                best = (key, c, rest, m_rest, k_rest, mu_rest)
        if best is None:
            return alive
        _, c, rest, m_rest, k_rest, mu_rest = best
        steps.append(GreedyStep(
            cycle=c,
            length=len(c),
            n_removed=(alive & ~rest).bit_count(),
            m_removed=m - m_rest,
            mu_drop=mu - mu_rest,
            kappa_drop=k - k_rest,
            component=component))
        alive, m, k, mu = rest, m_rest, k_rest, mu_rest


def greedy_decompose(G, per_component=False):
    """
    Greedy cycle-removal decomposition

    Parameters
    ----------
    G : Graph
        Connected cubic graph.
    per_component : bool
        If ``True``, a disconnected cubic input is processed one
        component at a time (with a warning) instead of being
        rejected.

    Returns
    -------
    out : GreedyTrace

    Raises
    ------
    PreconditionError
        If ``G`` is not cubic, or disconnected and
        ``per_component`` is ``False``.

    Examples
    --------
    >>> from cind.generators import named
    >>> trace = greedy_decompose(named('K4'))
    >>> trace.steps[0].cycle, trace.steps[0].mu_drop
    (InducedCycle((0, 1, 2)), 3)
    >>> trace.violations()
    []
    """
    if degree_check(G).kind != 'cubic':
        raise PreconditionError('not cubic')
    comps = G.component_bits()
    if len(comps) > 1:
        if not per_component:
            raise PreconditionError(
                'not connected', '{} components'.format(len(comps)))
        warnings.warn(
            "Graph has {} components, running the greedy on each "
            "component separately.".format(len(comps)))

    cycles = enumerate_induced_cycles(G)
    steps = []
    residual = 0
    for i, comp in enumerate(comps):
        residual |= _run(G, cycles, comp, i, steps)
    return GreedyTrace(G, steps, residual, per_component=len(comps) > 1)
