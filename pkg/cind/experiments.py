"""
Batch experiments and their reports

Every suite draws its instances from one seed, computes one row
per check and attaches a verdict to every row. Verdicts are
always recomputed from the values in their own row.
"""
import logging
from collections import namedtuple
from fractions import Fraction

import networkx as nx
import numpy as np
import pandas as pd

from .blocks import BlockKind
from .bounds import chordal_bound, check_independence_bound
from .cycles import chordality, is_k_chordal
from .exceptions import PreconditionError, InternalConsistencyError
from .generators import (named, ladder_family, random_graph,
                         random_cubic_connected, random_4chordal_cubic)
from .graph import block_structure, build_graph, delete_vertices
from .greedy import greedy_decompose
from .io import from_networkx
from .naive import (naive_max_induced_regular, naive_max_mixed_regular,
                    naive_fair_domination_number)
from .options import resolve
from .oracle import (c_ind_exact, max_induced_regular, max_mixed_regular,
                     fair_domination_number_regular)
from .solver import RESIDUAL_KINDS, block_plus_pattern, solve, check_tightness
from .structure import (EXTREMAL_LABELS, classify_2connected,
                        decompose_4chordal, generate_extremal)
from .utils import format_rational

__all__ = ['ExperimentReport', 'run_suite', 'SUITES', 'REPORT_COLUMNS',
           'REPORT_VERSION', 'BLOCK_PLUS_TABLE']

logger = logging.getLogger(__name__)

REPORT_VERSION = 1

#: Columns of every report, in order
REPORT_COLUMNS = (
    'version', 'suite', 'instance', 'seed', 'n', 'm', 'chordality',
    'greedy_order', 'chordal_bound', 'eps', 'alpha', 'c_ind_limit',
    'solver_order', 'solver_bound', 'tight', 'oracle', 'gain',
    'required', 'expected', 'observed', 'verdict')

#: ``c_ind`` of a leaf block with its pendant D' copies, with and
#: without the vertex at the free slot
BLOCK_PLUS_TABLE = {
    'D': (7, 6),
    'K33minus': (8, 8),
    'LadderDoublePrime(k=2)': (8, 8),
    'LadderDoublePrime(k=3)': (9, 8),
    'PlainVertex': (8, 8),
    'K3': (9, 8),
    'K23': (11, 10),
    'LadderPrime(k=2)': (11, 10),
    'LadderPrime(k=3)': (12, 12),
    'Ladder(k=2)': (13, 12),
    'Ladder(k=3)': (15, 14),
    'Ladder(k=4)': (16, 16),
}

Suite = namedtuple('Suite', ['rows', 'check', 'count', 'description'])


def _given(value):
    return value is not None and not pd.isna(value)


def _cell(value):
    if value is None or (not isinstance(value, str) and pd.isna(value)):
        return ''
    if isinstance(value, Fraction):
        return format_rational(value)
    return value


class ExperimentReport:
    """
    Rows of one experiment suite

    Parameters
    ----------
    suite : str
        Name of the suite.
    rows : list of dict
        Values keyed by :data:`REPORT_COLUMNS`; missing values
        are left empty.
    check : callable
        ``check(row) -> bool``, applied to every row to fill the
        ``verdict`` column.
    """

    def __init__(self, suite, rows, check):
        self.suite = suite
        records = []
        for i, row in enumerate(rows):
            record = dict.fromkeys(REPORT_COLUMNS)
            record.update(row, version=REPORT_VERSION, suite=suite)
            if record['instance'] is None:
                record['instance'] = i
            records.append(record)
        data = pd.DataFrame(records, columns=list(REPORT_COLUMNS),
                            dtype=object)
        data['verdict'] = [bool(check(row)) for _, row in data.iterrows()]
        self.data = data

    def __repr__(self):
        return 'ExperimentReport({!r}, {})'.format(
            self.suite, self.summary())

    def __len__(self):
        return len(self.data)

    @property
    def passed(self):
        return int(self.data['verdict'].sum())

    @property
    def failed(self):
        return len(self) - self.passed

    @property
    def ok(self):
        """
        Whether every row passed
        """
        return self.failed == 0

    def summary(self):
        """
        One line, e.g. ``'100/100 pass'``
        """
        return '{}/{} pass'.format(self.passed, len(self))

    def to_csv(self, path_or_buf=None):
        """
        Write the report as CSV

        Rationals are written exactly as ``p/q``.

        Parameters
        ----------
        path_or_buf : str or file-like, optional
            Destination. If ``None``, the CSV is returned as a
            string.
        """
        out = self.data.copy()
        for column in out:
            out[column] = out[column].map(_cell)
        return out.to_csv(path_or_buf, index=False, lineterminator='\n')


def _seeds(seed, count):
    rng = np.random.default_rng(seed)
    return rng.integers(0, 2**63, size=count).tolist()


def _sizes(n, default):
    return [n] if n is not None else list(default)


# chordal-bound

def _chordal_rows(count, n, seed, cap):
    sizes = _sizes(n, range(8, 26, 2))
    rows = []
    for i, s in enumerate(_seeds(seed, count)):
        order = sizes[i % len(sizes)]
        G = random_cubic_connected(order, s)
        trace = greedy_decompose(G)
        k = chordality(G)
        rows.append({
            'instance': i, 'seed': s, 'n': G.n, 'm': G.m,
            'chordality': k,
            'greedy_order': trace.order,
            'chordal_bound': chordal_bound(G.n, k),
            'oracle': c_ind_exact(G).value if G.n <= cap else None,
            'observed': '; '.join(trace.violations()),
        })
    return rows


def _chordal_check(row):
    ok = row['greedy_order'] >= row['chordal_bound'] and not row['observed']
    if _given(row['oracle']):
        ok = ok and row['oracle'] >= row['greedy_order']
    return ok


# independence-bound

def _independence_rows(count, n, seed, cap):
    sizes = [x for x in _sizes(n, range(8, 22, 2)) if x <= min(cap, 20)]
    rows = []
    if not sizes:
        return rows
    for i, s in enumerate(_seeds(seed, count)):
        G = random_cubic_connected(sizes[i % len(sizes)], s)
        for eps in (Fraction(1, 16), Fraction(1, 8)):
            report = check_independence_bound(G, eps)
            rows.append({
                'instance': '{}:{}'.format(i, eps), 'seed': s,
                'n': G.n, 'm': G.m,
                'greedy_order': report.greedy_order,
                'eps': eps, 'alpha': report.alpha,
                'c_ind_limit': report.c_ind_limit,
                'oracle': report.c_ind,
                'observed': report.status,
            })
    return rows


def _independence_check(row):
    if row['alpha'] > (Fraction(3, 8) - row['eps']) * row['n']:
        return True
    return (_given(row['oracle'])
            and row['oracle'] > row['c_ind_limit']
            and row['greedy_order'] > row['c_ind_limit'])


# classification

def _family():
    for tag in ('K3', 'K4', 'D', 'Dprime', 'Prism', 'K23', 'K33',
                'K33minus'):
        yield repr(BlockKind(tag)), named(tag)
    for family, tag in (('ladder', 'Ladder'),
                        ('ladder_prime', 'LadderPrime'),
                        ('ladder_double_prime', 'LadderDoublePrime')):
        for k in range(2, 9):
            yield repr(BlockKind(tag, k)), ladder_family(family, k)


def _random_block(rng, tries=200):
    """
    Random 2-connected subcubic 4-chordal graph, or None
    """
    for _ in range(tries):
        order = int(rng.choice([4, 6, 8, 10, 12]))
        G = random_cubic_connected(order, rng)
        drop = [v for v in range(G.n) if rng.random() < 0.2]
        G, _ = delete_vertices(G, drop)
        keep = [e for e in G.edges() if rng.random() >= 0.15]
        G = build_graph(G.n, keep)
        if block_structure(G).is_biconnected and is_k_chordal(G, 4):
            return G
    return None


def _classification_rows(count, n, seed, cap):
    rows = []
    instances = list(_family())
    rng = np.random.default_rng(seed)
    for _ in range(count):
        G = _random_block(rng)
        if G is not None:
            instances.append(('', G))
    for i, (expected, G) in enumerate(instances):
        try:
            observed = repr(classify_2connected(G))
        except InternalConsistencyError:
            observed = 'not in family'
        rows.append({'instance': i, 'n': G.n, 'm': G.m,
                     'expected': expected, 'observed': observed})
    return rows


def _classification_check(row):
    if row['observed'] == 'not in family':
        return False
    return not row['expected'] or row['expected'] == row['observed']


# roundtrip

def _tree_orders(n, rng, low, high):
    if n is not None:
        return lambda: n
    return lambda: int(rng.integers(low, high + 1))


def _roundtrip_rows(count, n, seed, cap):
    rows = []
    draw = _tree_orders(n, np.random.default_rng(seed), 2, 10)
    for i, s in enumerate(_seeds(seed, count)):
        G, dec = random_4chordal_cubic(draw(), s, return_decomposition=True)
        try:
            again = decompose_4chordal(G)
        except PreconditionError as err:
            observed = err.check
        else:
            same = again.label_profile() == dec.label_profile()
            observed = 'ok' if same else 'profile mismatch'
        rows.append({'instance': i, 'seed': s, 'n': G.n, 'm': G.m,
                     'expected': 'ok', 'observed': observed})
    return rows


def _observed_as_expected(row):
    return row['observed'] == row['expected']


# cubic4

def _solver_row(G, cap):
    cert = solve(G)
    return {
        'n': G.n, 'm': G.m,
        'solver_order': cert.order, 'solver_bound': cert.bound,
        'tight': cert.tight,
        'oracle': c_ind_exact(G).value if G.n <= cap else None,
        'observed': 'verified' if cert.verified else 'unverified',
    }


def _cubic4_rows(count, n, seed, cap):
    rows = []
    draw = _tree_orders(n, np.random.default_rng(seed), 2, 10)
    for i, s in enumerate(_seeds(seed, count)):
        G = random_4chordal_cubic(draw(), s)
        row = _solver_row(G, cap)
        row.update(instance=i, seed=s)
        rows.append(row)
    return rows


def _cubic4_check(row):
    ok = (row['observed'] == 'verified'
          and row['solver_order'] >= row['solver_bound'])
    if _given(row['oracle']):
        ok = ok and row['oracle'] >= row['solver_order']
    return ok


# table

def _table_rows(count, n, seed, cap):
    rows = []
    for kind in RESIDUAL_KINDS:
        p = block_plus_pattern(kind)
        name = repr(kind)
        rows.append({
            'instance': name, 'n': p.graph.n, 'm': p.graph.m,
            'gain': p.gain, 'required': p.required,
            'expected': '{},{}'.format(*BLOCK_PLUS_TABLE[name]),
            'observed': '{},{}'.format(p.c_ind_bplus,
                                       p.c_ind_bplus_minus_y),
        })
    return rows


def _table_check(row):
    return (row['expected'] == row['observed']
            and row['gain'] >= row['required'])


# tightness

def _is_extremal(dec):
    return all(EXTREMAL_LABELS.get(dec.tree.degree(s)) == kind
               for s, kind in enumerate(dec.labels))


def _small_4chordal(seed, limit, tries=100):
    """
    Random 4-chordal cubic graph of order at most ``limit``
    """
    rng = np.random.default_rng(seed)
    for _ in range(tries):
        G, dec = random_4chordal_cubic(int(rng.integers(2, 5)), rng,
                                       max_ladder_length=3,
                                       return_decomposition=True)
        if G.n <= limit:
            return G, dec
    # two D' joined by a bridge, 10 vertices
    return random_4chordal_cubic(2, rng, return_decomposition=True)


def _tightness_row(G, extremal, cap):
    row = _solver_row(G, cap)
    row.update(expected='extremal' if extremal else 'not extremal',
               observed=('extremal' if check_tightness(G)
                         else 'not extremal'))
    return row


def _tightness_rows(count, n, seed, cap):
    top = 5 if n is None else n
    rows = []
    for order in range(2, top + 1):
        for j, tree in enumerate(nx.nonisomorphic_trees(order)):
            if max(d for _, d in tree.degree()) > 3:
                continue
            G = generate_extremal(from_networkx(tree))
            row = _tightness_row(G, True, cap)
            row.update(instance='{}:{}'.format(order, j))
            rows.append(row)

    limit = max(10, min(cap, 24))
    for i, s in enumerate(_seeds(seed, count)):
        G, dec = _small_4chordal(s, limit)
        row = _tightness_row(G, _is_extremal(dec), cap)
        row.update(instance='random:{}'.format(i), seed=s)
        rows.append(row)
    return rows


def _tightness_check(row):
    extremal = row['expected'] == 'extremal'
    ok = (row['observed'] == row['expected']
          and row['solver_order'] >= row['solver_bound'])
    if extremal:
        ok = ok and row['tight']
    if _given(row['oracle']):
        ok = ok and (row['oracle'] == row['solver_bound']) == extremal
    return bool(ok)


# oracle

_PROBLEMS = ('s=0', 's=1', 's=2', 'mixed', 'fair')


def _oracle_rows(count, n, seed, cap):
    sizes = [min(x, 16) for x in _sizes(n, range(6, 17))]
    rows = []
    for i, s in enumerate(_seeds(seed, count)):
        order = sizes[i % len(sizes)]
        if i % 2 and order >= 4:
            G = random_cubic_connected(order - order % 2, s)
        else:
            G = random_graph(order, 0.3, s)
        for problem in _PROBLEMS:
            if problem.startswith('s='):
                d = int(problem[2:])
                fast = max_induced_regular(G, d).value
                slow = naive_max_induced_regular(G, d).value
            elif problem == 'mixed':
                fast = max_mixed_regular(G).value
                slow = naive_max_mixed_regular(G).value
            elif len(set(G.degrees())) == 1:
                fast = fair_domination_number_regular(G)
                slow = naive_fair_domination_number(G)
            else:
                continue
            rows.append({'instance': '{}:{}'.format(i, problem),
                         'seed': s, 'n': G.n, 'm': G.m,
                         'oracle': fast, 'expected': slow})
    return rows


def _oracle_check(row):
    return row['oracle'] == row['expected']


SUITES = {
    'chordal-bound': Suite(
        _chordal_rows, _chordal_check, 200,
        'greedy order against (n-2)/(4-4/k) on random cubic graphs'),
    'independence-bound': Suite(
        _independence_rows, _independence_check, 50,
        'c_ind > (1/4+eps)n - 1 when alpha <= (3/8-eps)n'),
    'classification': Suite(
        _classification_rows, _classification_check, 50,
        'every 2-connected subcubic 4-chordal graph has a kind'),
    'roundtrip': Suite(
        _roundtrip_rows, _observed_as_expected, 100,
        'decompose(assemble(dec)) has the labels of dec'),
    'cubic4': Suite(
        _cubic4_rows, _cubic4_check, 500,
        'solver order >= 5n/8 + 3/4 on random 4-chordal cubic graphs'),
    'table': Suite(
        _table_rows, _table_check, 0,
        'c_ind of every leaf block with its pendant D\' copies'),
    'tightness': Suite(
        _tightness_rows, _tightness_check, 50,
        'c_ind = 5n/8 + 3/4 exactly on the extremal graphs'),
    'oracle': Suite(
        _oracle_rows, _oracle_check, 50,
        'branch and bound against full enumeration'),
}


def run_suite(name, count=None, n=None, seed=0, oracle_max_n=None):
    """
    Run an experiment suite

    Parameters
    ----------
    name : str
        A key of :data:`SUITES`.
    count : int, optional
        Number of random instances. Each suite has its own
        default; ``table`` is not random. ``tightness`` adds
        this many random graphs of order at most 24 to the
        extremal graphs.
    n : int, optional
        Instance size: the graph order for ``chordal-bound``,
        ``independence-bound`` and ``oracle``, the tree order for
        ``roundtrip`` and ``cubic4`` and the largest extremal tree
        order for ``tightness`` (default 5). Otherwise sizes vary.
    seed : int
        Seed of all random choices.
    oracle_max_n : int, optional
        Largest order for which exact ``c_ind`` columns are
        computed. Defaults to the ``oracle_max_n`` option.

    Returns
    -------
    out : ExperimentReport

    Examples
    --------
    >>> run_suite('chordal-bound', count=3, n=8, seed=7)
    ExperimentReport('chordal-bound', 3/3 pass)
    """
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError("Unknown suite {!r}, use one of {}".format(
            name, sorted(SUITES)))
    count = suite.count if count is None else count
    cap = resolve('oracle_max_n', oracle_max_n)
    logger.info('Running %s: count=%s, n=%s, seed=%s', name, count, n, seed)
    report = ExperimentReport(name, suite.rows(count, n, seed, cap),
                              suite.check)
    logger.info('%s: %s', name, report.summary())
    return report
