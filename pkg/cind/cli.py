"""
Command line interface

Every subcommand reads its graph from a file (``-`` for standard
input) and maps onto one operation of the package. The exit code
is 0 when every verdict passes, 1 when one fails and 2 for usage
and input errors.
"""
import argparse
import functools
import logging
import sys

from . import __version__
from .bounds import chordal_bound
from .cycles import ACYCLIC, chordality, verify_induced_2_regular
from .exceptions import (BudgetExceededError, GraphError, GraphFormatError,
                         InternalConsistencyError, PreconditionError)
from .experiments import SUITES, run_suite
from .generators import (NAMED_GRAPHS, named, ladder_family,
                         random_cubic_connected, random_tree,
                         random_4chordal_cubic)
from .greedy import greedy_decompose
from .io import (FORMATS, decomposition_from_json, decomposition_to_json,
                 emit_graph, parse_graph, parse_vertex_set)
from .options import options
from .oracle import (c_ind_exact, independence_number, max_induced_regular,
                     max_mixed_regular, min_fair_dominating_set)
from .solver import solve
from .structure import (assemble, classify_2connected, decompose_4chordal,
                        generate_extremal)
from .utils import format_rational

__all__ = ['run', 'main', 'build_parser']

logger = logging.getLogger(__name__)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Streams:
    def __init__(self, stdin, stdout, stderr):
        self.stdin = stdin
        self.stdout = stdout
        self.stderr = stderr

    def read(self, path):
        if path == '-':
            return self.stdin.read()
        with open(path, 'rb') as f:
            return f.read()

    def print(self, *args):
        print(*args, file=self.stdout)


class _ArgumentParser(argparse.ArgumentParser):
    """
    Argument parser that prints its messages to the streams
    it was given instead of the process streams
    """
    def __init__(self, *args, **kwargs):
        self.streams = kwargs.pop('streams', None)
        super().__init__(*args, **kwargs)

    def _print_message(self, message, file=None):
        if message and self.streams is not None:
            if file is sys.stdout:
                file = self.streams.stdout
            else:
                file = self.streams.stderr
        super()._print_message(message, file)


def _vertices(S):
    return ' '.join(str(v) for v in S)


def _bool(value):
    return 'true' if value else 'false'


def _read_graph(args, io):
    return parse_graph(io.read(args.graph), args.format)


# Subcommands

def cmd_solve(args, io):
    G = _read_graph(args, io)
    cert = solve(G)
    io.print('order', cert.order)
    if cert.exceptional is not None:
        io.print('exceptional', cert.exceptional)
    else:
        io.print('bound', format_rational(cert.bound))
        io.print('tight', _bool(cert.tight))
    io.print('steps', ' '.join(cert.reduction_log))
    io.print('vertices', _vertices(cert.subgraph))
    return EXIT_PASS if cert.verified else EXIT_FAIL


def cmd_oracle(args, io):
    G = _read_graph(args, io)
    problem = args.problem
    if problem == 'c_ind':
        res = c_ind_exact(G)
    elif problem == 'alpha':
        res = independence_number(G)
    elif problem == 'regular':
        res = max_induced_regular(G, args.degree)
    elif problem == 'mixed':
        res = max_mixed_regular(G)
    else:
        S = min_fair_dominating_set(G)
        io.print('value', len(S))
        io.print('vertices', _vertices(S))
        return EXIT_PASS
    io.print('value', res.value)
    io.print('vertices', _vertices(res.certificate))
    io.print('explored', res.explored)
    return EXIT_PASS


def cmd_greedy(args, io):
    G = _read_graph(args, io)
    trace = greedy_decompose(G, per_component=args.per_component)
    for i, step in enumerate(trace.steps, start=1):
        io.print('step {}: cycle {} mu_drop {} removed {}'.format(
            i, _vertices(step.cycle), step.mu_drop, step.n_removed))
    io.print('order', trace.order)
    k = chordality(G)
    if k is not ACYCLIC:
        io.print('bound', format_rational(chordal_bound(G.n, k)))
    problems = trace.violations()
    for problem in problems:
        io.print('violation', problem)
    return EXIT_FAIL if problems else EXIT_PASS


def cmd_classify(args, io):
    io.print(repr(classify_2connected(_read_graph(args, io))))
    return EXIT_PASS


def cmd_decompose(args, io):
    dec = decompose_4chordal(_read_graph(args, io))
    io.print(decomposition_to_json(dec))
    return EXIT_PASS


def cmd_assemble(args, io):
    dec = decomposition_from_json(io.read(args.decomposition).decode())
    io.print(emit_graph(assemble(dec), args.format).decode().rstrip('\n'))
    return EXIT_PASS


def cmd_generate(args, io):
    if args.named:
        G = named(args.named)
    elif args.ladder:
        kind, k = args.ladder
        G = ladder_family(kind, int(k))
    elif args.random_cubic is not None:
        G = random_cubic_connected(args.random_cubic, args.seed)
    elif args.random_4chordal is not None:
        G = random_4chordal_cubic(args.random_4chordal, args.seed)
    else:
        tree = random_tree(args.extremal, args.seed, max_degree=3)
        G = generate_extremal(tree)
    io.print(emit_graph(G, args.format).decode().rstrip('\n'))
    return EXIT_PASS


def cmd_chordality(args, io):
    io.print(chordality(_read_graph(args, io)))
    return EXIT_PASS


def cmd_verify(args, io):
    G = _read_graph(args, io)
    verdict = verify_induced_2_regular(G, parse_vertex_set(args.set))
    if verdict:
        io.print('ok')
        return EXIT_PASS
    io.print('fail: vertex {} has degree {}'.format(
        verdict.vertex, verdict.degree))
    return EXIT_FAIL


def cmd_experiment(args, io):
    report = run_suite(args.suite, count=args.count, n=args.n,
                       seed=args.seed, oracle_max_n=args.oracle_max_n)
    if args.output == '-':
        report.to_csv(io.stdout)
        summary = io.stderr
    else:
        report.to_csv(args.output)
        summary = io.stdout
    print('{}: {}'.format(args.suite, report.summary()), file=summary)
    return EXIT_PASS if report.ok else EXIT_FAIL


def _add_graph_input(parser):
    parser.add_argument('graph', nargs='?', default='-',
                        help="Graph file, '-' for standard input")
    parser.add_argument('--format', choices=FORMATS, default='graph6')


def build_parser(streams=None):
    """
    Create the argument parser

    ``streams`` has ``stdout`` and ``stderr`` attributes. Help,
    usage and error messages go there. By default they go to
    the process streams.
    """
    parser = _ArgumentParser(
        prog='cind', streams=streams,
        description='Induced 2-regular subgraphs of cubic graphs')
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='Log progress (twice for debug output)')
    parser.add_argument('--budget', type=int, default=None,
                        help='Node budget of the exact solvers')
    sub = parser.add_subparsers(
        dest='command', metavar='command',
        parser_class=functools.partial(_ArgumentParser, streams=streams))
    sub.required = True

    p = sub.add_parser('solve', help='Order 5n/8 + 3/4 on 4-chordal '
                       'cubic graphs')
    _add_graph_input(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser('oracle', help='Exact optimum of a problem')
    _add_graph_input(p)
    p.add_argument('--problem', default='c_ind',
                   choices=('c_ind', 'alpha', 'regular', 'mixed', 'fair'))
    p.add_argument('--degree', type=int, default=2,
                   help='Degree for --problem regular')
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser('greedy', help='Greedy cycle removal')
    _add_graph_input(p)
    p.add_argument('--per-component', action='store_true')
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser('classify', help='Kind of a 2-connected block')
    _add_graph_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser('decompose', help='Tree of blocks as JSON')
    _add_graph_input(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser('assemble', help='Graph of a JSON tree of blocks')
    p.add_argument('decomposition', nargs='?', default='-')
    p.add_argument('--format', choices=FORMATS, default='graph6')
    p.set_defaults(func=cmd_assemble)

    p = sub.add_parser('generate', help='Named and random graphs')
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--named', choices=NAMED_GRAPHS)
    group.add_argument('--ladder', nargs=2, metavar=('KIND', 'K'))
    group.add_argument('--random-cubic', type=int, metavar='N')
    group.add_argument('--random-4chordal', type=int, metavar='TREE_ORDER')
    group.add_argument('--extremal', type=int, metavar='TREE_ORDER')
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--format', choices=FORMATS, default='graph6')
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser('chordality', help='Longest induced cycle')
    _add_graph_input(p)
    p.set_defaults(func=cmd_chordality)

    p = sub.add_parser('verify', help='Check an induced 2-regular set')
    _add_graph_input(p)
    p.add_argument('--set', required=True,
                   help='Vertices, separated by commas or spaces')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('experiment', help='Run an experiment suite')
    p.add_argument('--suite', required=True, choices=sorted(SUITES))
    p.add_argument('--count', type=int, default=None)
    p.add_argument('--n', type=int, default=None)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--oracle-max-n', type=int, default=None,
                   help='Largest order with exact columns (default 24)')
    p.add_argument('--output', default='-', help='CSV file')
    p.set_defaults(func=cmd_experiment)
    return parser


def run(argv=None, stdin=None, stdout=None, stderr=None):
    """
    Run the command line interface

    Parameters
    ----------
    argv : list of str, optional
        Arguments without the program name. Defaults to
        ``sys.argv[1:]``.
    stdin : binary file-like, optional
    stdout, stderr : text file-like, optional
        Output and messages, including help and usage errors.

    Returns
    -------
    code : int
        0 if every verdict passes, 1 if one fails, 2 for usage
        and input errors.
    """
    io = _Streams(stdin if stdin is not None else sys.stdin.buffer,
                  stdout if stdout is not None else sys.stdout,
                  stderr if stderr is not None else sys.stderr)
    parser = build_parser(io)
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        # --help, --version and usage errors, already reported
        return err.code

    if args.verbose:
        level = logging.DEBUG if args.verbose > 1 else logging.INFO
        logging.basicConfig(level=level, stream=io.stderr)

    def fail(err, code):
        print('cind: error: {}'.format(err), file=io.stderr)
        return code

    overrides = {} if args.budget is None else {'node_budget': args.budget}
    try:
        with options(**overrides):
            return args.func(args, io)
    except (GraphFormatError, GraphError, PreconditionError,
            ValueError, OSError) as err:
        return fail(err, EXIT_USAGE)
    except (BudgetExceededError, InternalConsistencyError) as err:
        return fail(err, EXIT_FAIL)


def main():
    sys.exit(run())
