# -*- coding: utf-8 -*-
"""Command line front-end.

Exit codes: 0 success, 1 parse/usage/input errors, 2 not a split graph,
3 not decomposable, 4 the coloring has conflicts, 5 the oracle disagrees.
"""
import argparse
import logging
import os
import sys
from multiprocessing import Pool

from ..exceptions import (
    ConstructionFailed, NotSplitError, OracleBudgetExceeded, SplitIrregularError, UserError,
)
from ..models.decomposer import decompose_graph
from ..models.generators import gen_split_graph
from ..models.graph import COLOR_NAMES, verify_decomposition
from ..models.oracle import oracle_chi
from ..models.res_config_settings import ResConfigSettings
from .dot_export import coloring_to_dot
from .graph_io import format_coloring, format_graph, read_coloring, read_graph, write_text

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_SPLIT = 2
EXIT_NOT_DECOMPOSABLE = 3
EXIT_CONFLICTS = 4
EXIT_ORACLE_DISAGREES = 5

GRAPH_SUFFIXES = ('.col', '.dimacs', '.graph', '.gr', '.txt')


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_ERROR)


def _int_list(text):
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _format_d(d):
    return '(' + ','.join(str(x) for x in d) + ')'


def _chi_report(path, certificate=None, use_oracle=False, k_max=None):
    """Classify one graph file; returns ``(exit code, report lines)``."""
    settings = ResConfigSettings()
    g = read_graph(path)
    lines = []
    try:
        result = decompose_graph(g, settings)
    except NotSplitError:
        return EXIT_NOT_SPLIT, ["not a split graph"]
    p = result.partition
    if p is not None:
        kept = [v for v in g.vertices() if v not in set(result.removed)]
        clique = ' '.join(str(kept[v] + 1) for v in p.clique)
        lines.append(f"n={p.n} d={_format_d(p.d)} |Y|={len(p.stable)} isolated={len(result.removed)}")
        lines.append(f"clique: {clique}")
    else:
        lines.append(f"edgeless graph on {g.vertex_count} vertices")
    summary = f"chi={result.chi} rule={result.rule}"
    if result.construction:
        summary += f" construction={result.construction}"
    if result.is_decomposable:
        lines.append(summary)
        code = EXIT_OK
    else:
        lines.append("not decomposable (K2/K3/P4)")
        code = EXIT_NOT_DECOMPOSABLE
    lines.extend(f"repair: {note}" for note in result.repairs)

    if certificate and result.certificate is not None:
        write_text(certificate, format_coloring(
            result.certificate, comments=[summary]))
        lines.append(f"certificate: {certificate}")

    if use_oracle:
        try:
            oracle = oracle_chi(g, k_max=k_max, settings=settings)
        except OracleBudgetExceeded as e:
            lines.append(f"oracle: skipped ({e})")
        else:
            shown = 'not-decomposable' if oracle.chi is None else oracle.chi
            if oracle.chi == result.chi:
                lines.append(f"oracle: chi={shown} agree nodes={oracle.nodes_explored}")
            else:
                _logger.error("Oracle reports %s, decomposer %s for %s", shown, result.status, path)
                lines.append(f"oracle: chi={shown} DISAGREE nodes={oracle.nodes_explored}")
                code = EXIT_ORACLE_DISAGREES
    return code, lines


def _chi_batch_item(task):
    path, certificate, use_oracle, k_max = task
    try:
        return path, _chi_report(path, certificate, use_oracle, k_max)
    except (SplitIrregularError, OSError) as e:
        return path, (EXIT_ERROR, [f"error: {e}"])


def cmd_chi(args):
    if os.path.isdir(args.input):
        return _chi_batch(args)
    code, lines = _chi_report(args.input, args.certificate, args.oracle, args.k_max)
    print('\n'.join(lines))
    return code


def _chi_batch(args):
    paths = sorted(
        os.path.join(args.input, name) for name in os.listdir(args.input)
        if name.endswith(GRAPH_SUFFIXES)
    )
    if args.certificate:
        os.makedirs(args.certificate, exist_ok=True)
    tasks = []
    for path in paths:
        certificate = None
        if args.certificate:
            stem = os.path.splitext(os.path.basename(path))[0]
            certificate = os.path.join(args.certificate, stem + '.coloring')
        tasks.append((path, certificate, args.oracle, args.k_max))
    _logger.info("Classifying %s graph file(s) with %s worker(s)", len(tasks), args.jobs)
    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            results = pool.map(_chi_batch_item, tasks)
    else:
        results = [_chi_batch_item(task) for task in tasks]
    worst = EXIT_OK
    for path, (code, lines) in results:
        print(f"{path}: " + '; '.join(lines))
        worst = max(worst, code)
    return worst


def cmd_verify(args):
    g = read_graph(args.graph)
    col = read_coloring(args.coloring, g)
    report = verify_decomposition(col)
    if report.is_clean:
        print(f"ok: locally irregular {col.k}-edge coloring of {g.edge_count} edges")
        return EXIT_OK
    for conflict in report:
        u, v = conflict.edge
        print(f"conflict color={COLOR_NAMES[conflict.color]} edge={u + 1}-{v + 1} degree={conflict.degree}")
    return EXIT_CONFLICTS


def cmd_oracle(args):
    g = read_graph(args.graph)
    result = oracle_chi(g, k_max=args.k_max)
    if result.chi is None:
        print(f"not decomposable with at most {result.k_max} colors nodes={result.nodes_explored}")
        return EXIT_NOT_DECOMPOSABLE
    print(f"chi={result.chi} nodes={result.nodes_explored}")
    if args.certificate and result.witness is not None:
        write_text(args.certificate, format_coloring(result.witness, comments=[f"oracle chi={result.chi}"]))
    return EXIT_OK


def cmd_gen(args):
    g = gen_split_graph(args.n, args.d, args.y, seed=args.seed)
    comments = [
        f"split graph n={args.n} seed={args.seed}",
        f"d={_format_d(args.d)} y={_format_d(args.y)}",
    ]
    text = format_graph(g, comments)
    if args.output:
        write_text(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_export_dot(args):
    g = read_graph(args.graph)
    col = read_coloring(args.coloring, g)
    source = coloring_to_dot(col)
    if args.output:
        write_text(args.output, source)
    else:
        sys.stdout.write(source)
    return EXIT_OK


def build_parser():
    settings = ResConfigSettings()
    parser = _ArgumentParser(
        prog='split-irregular',
        description='Irregular chromatic index of split graphs with certificates.')
    parser.add_argument('--log-level', default=settings.get_param('log_level'),
                        help='Logging level (default: %(default)s)')
    commands = parser.add_subparsers(dest='command', parser_class=_ArgumentParser)
    commands.required = True

    chi = commands.add_parser('chi', help='Classify a graph file or a directory of graph files')
    chi.add_argument('input', help='Graph file, or directory for batch mode')
    chi.add_argument('--certificate', help='Write the certificate coloring here (a directory in batch mode)')
    chi.add_argument('--oracle', action='store_true', help='Cross-check with the exhaustive oracle')
    chi.add_argument('--k-max', type=int, default=None, help='Oracle color bound')
    chi.add_argument('--jobs', type=int, default=1, help='Worker processes for batch mode')
    chi.set_defaults(handler=cmd_chi)

    verify = commands.add_parser('verify', help='Check a coloring for conflicting edges')
    verify.add_argument('graph')
    verify.add_argument('coloring')
    verify.set_defaults(handler=cmd_verify)

    oracle = commands.add_parser('oracle', help='Exhaustive search on a small graph')
    oracle.add_argument('graph')
    oracle.add_argument('--k-max', type=int, default=None)
    oracle.add_argument('--certificate', help='Write the witness coloring here')
    oracle.set_defaults(handler=cmd_oracle)

    gen = commands.add_parser('gen', help='Generate a split graph from a degree profile')
    gen.add_argument('--n', type=int, required=True, help='Clique size')
    gen.add_argument('--d', type=_int_list, required=True, help='Stable-set degree of each clique vertex')
    gen.add_argument('--y', type=_int_list, default=[], help='Degree of each stable vertex')
    gen.add_argument('--seed', type=int, default=0)
    gen.add_argument('--output', help='Write here instead of standard output')
    gen.set_defaults(handler=cmd_gen)

    export = commands.add_parser('export-dot', help='DOT rendering of a colored graph')
    export.add_argument('graph')
    export.add_argument('coloring')
    export.add_argument('--output', help='Write here instead of standard output')
    export.set_defaults(handler=cmd_export_dot)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )
    try:
        return args.handler(args)
    except NotSplitError as e:
        print(f"not a split graph: {e}", file=sys.stderr)
        return EXIT_NOT_SPLIT
    except (UserError, ConstructionFailed) as e:
        _logger.error("%s failed: %s", args.command, e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
