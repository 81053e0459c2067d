"""The splice-indices command line launcher."""
import json
import logging
import sys
from contextlib import contextmanager

import click
import numpy as np
import pandas as pd

from splice_indices.edgelist import FORMATS, load_graph, write_edgelist
from splice_indices.exceptions import (CampaignConfigError, EdgeListParseError,
                                       GraphValidationError, IndexOverflowError)
from splice_indices.formulas import METHOD_VARIANTS, splice_index_report
from splice_indices.graph import Counters
from splice_indices.indices import INDEX_NAMES, Method, compute_indices
from splice_indices.report import comparison_dict, dumps, index_dict
from splice_indices.splice import SpliceSpec, Variant, splice
from splice_indices.verify import (CampaignConfig, random_connected_graph, replay_witness,
                                   run_campaign)
from splice_indices.version import VERSION

logging.basicConfig()
L = logging.getLogger(__name__)
PACKAGE_LOGGER = logging.getLogger('splice_indices')
PACKAGE_LOGGER.setLevel(logging.INFO)

REQUIRED_PATH = click.Path(exists=True, readable=True, dir_okay=False, resolve_path=True)

EXIT_PARSE_ERROR = 1
EXIT_MISMATCH = 1
EXIT_VALIDATION_ERROR = 2
EXIT_OVERFLOW = 3

INDEX_CHOICES = {
    'all': INDEX_NAMES,
    'sz': ('szeged',),
    'sze': ('edge_szeged',),
    'pi': ('pi_edge',),
    'piv': ('pi_vertex',),
    'ecc': ('eccentric_connectivity',),
}

SPLICE_METHODS = {
    'direct': Method.DIRECT,
    'formula': Method.FORMULA_CORRECTED,
    'formula-printed': Method.FORMULA_PRINTED,
}

VARIANT_CHOICES = {
    'printed': (Variant.PRINTED,),
    'corrected': (Variant.CORRECTED,),
    'both': tuple(Variant),
}


def _set_quiet(quiet):
    PACKAGE_LOGGER.setLevel(logging.WARNING if quiet else logging.INFO)


@contextmanager
def _exit_codes():
    """Turns library errors into the documented exit codes."""
    try:
        yield
    except EdgeListParseError as e:
        click.echo(f'Parse error: {e}', err=True)
        sys.exit(EXIT_PARSE_ERROR)
    except GraphValidationError as e:
        click.echo(f'Invalid graph: {e}', err=True)
        sys.exit(EXIT_VALIDATION_ERROR)
    except IndexOverflowError as e:
        click.echo(f'Overflow: {e}', err=True)
        sys.exit(EXIT_OVERFLOW)


def _format_option(function):
    function = click.option('--format', 'fmt', type=click.Choice(FORMATS), default='edgelist',
                            help='Format of the graph files')(function)
    return click.option('--one-based', is_flag=True,
                        help='Vertex ids of edge-list files start at 1')(function)


def _echo_values(values, names):
    for name in names:
        click.echo(f'{name}: {values[name]}')


@click.group()
@click.version_option(VERSION)
def cli():
    """The CLI entry point."""


@cli.command(short_help='Compute the indices of a graph')
@click.argument('input_file', type=REQUIRED_PATH)
@click.option('--index', 'index_name', type=click.Choice(list(INDEX_CHOICES)), default='all',
              help='The index to print')
@click.option('--json', 'as_json', is_flag=True, help='Print a JSON report')
@_format_option
@click.option('--quiet/--no-quiet', default=False)
def compute(input_file, index_name, as_json, fmt, one_based, quiet):
    """Compute the Szeged, edge-Szeged, PI, vertex-PI and eccentric connectivity indices."""
    _set_quiet(quiet)
    with _exit_codes():
        graph = load_graph(input_file, fmt, one_based)
        report = compute_indices(graph)

    names = INDEX_CHOICES[index_name]
    if as_json:
        click.echo(dumps(index_dict(graph, report, names)))
    else:
        _echo_values(report.values(), names)


@cli.command('splice', short_help='Splice two graphs and compute the indices')
@click.argument('file1', type=REQUIRED_PATH)
@click.argument('file2', type=REQUIRED_PATH)
@click.option('--u1', type=int, required=True, help='Glue vertex of the first graph')
@click.option('--u2', type=int, required=True, help='Glue vertex of the second graph')
@click.option('--out', type=click.Path(dir_okay=False, writable=True),
              help='Where to write the splice as an edge list')
@click.option('--method', 'method_name', type=click.Choice(list(SPLICE_METHODS)),
              default='formula',
              help='direct recomputation, corrected formulas, or formulas as printed')
@click.option('--compare', is_flag=True, help='Show direct and formula values side by side')
@click.option('--json', 'as_json', is_flag=True, help='Print a JSON report')
@_format_option
@click.option('--quiet/--no-quiet', default=False)
def splice_command(file1, file2, u1, u2, out, method_name, compare, as_json, fmt, one_based,
                   quiet):
    """Splice FILE1 and FILE2 by identifying their vertices U1 and U2.

    The vertices of FILE1 keep their ids, the other vertices of FILE2 follow in increasing
    order. The formula-printed method uses the formulas as published, with their known errata.
    """
    # pylint: disable=too-many-arguments,too-many-locals
    _set_quiet(quiet)
    method = SPLICE_METHODS[method_name]
    with _exit_codes():
        spec = SpliceSpec(load_graph(file1, fmt, one_based), load_graph(file2, fmt, one_based),
                          u1, u2)
        graph, _ = splice(spec)
        report = splice_index_report(spec, method)
        comparison = None
        if compare:
            variant = METHOD_VARIANTS.get(method, Variant.CORRECTED)
            formula = report if method is not Method.DIRECT else \
                splice_index_report(spec, Method.FORMULA_CORRECTED)
            direct = report if method is Method.DIRECT else \
                splice_index_report(spec, Method.DIRECT)
            comparison = comparison_dict(direct, formula, variant)

    if out:
        write_edgelist(graph, out)

    if as_json:
        click.echo(dumps(index_dict(graph, report, comparison=comparison)))
        return

    click.echo(f'method: {report.method.value}')
    if method is Method.FORMULA_PRINTED:
        click.echo('(formulas as printed, Sz, PI_v and Ecc count the glue vertex twice)')
    _echo_values(report.values(), INDEX_NAMES)
    click.echo(f'bfs_calls: {report.counters.bfs_calls}')
    if comparison is not None:
        df = pd.DataFrame([dict(index=name, **row) for name, row in comparison.items()],
                          columns=['index', 'direct', 'formula', 'variant', 'match'])
        click.echo(df.to_string(index=False))


def _load_witness(path):
    try:
        with open(path, encoding='utf-8') as f:
            witness = json.load(f)
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise EdgeListParseError(f'{path} is not a JSON witness: {e}') from e
    if isinstance(witness, dict) and 'first_witness' in witness:
        witness = witness['first_witness']
    if not isinstance(witness, dict):
        raise EdgeListParseError(f'{path} does not hold a splice witness')
    return witness


def _replay(path, variants, as_json):
    with _exit_codes():
        result = replay_witness(_load_witness(path), variants)
    if as_json:
        click.echo(dumps({'comparisons': [
            {'index': c.index, 'variant': c.variant.value, 'direct': c.direct,
             'formula': c.formula, 'match': c.match} for c in result.comparisons],
            'version': VERSION}))
    else:
        for c in result.comparisons:
            click.echo(f'{c.index} ({c.variant.value}): direct {c.direct}, formula {c.formula}'
                       f'{"" if c.match else "  MISMATCH"}')
    if any(not c.match for c in result.comparisons if c.variant is Variant.CORRECTED):
        sys.exit(EXIT_MISMATCH)


@cli.command(short_help='Check the splice formulas against direct computation')
@click.option('--trials', type=click.IntRange(min=0), default=200,
              help='Number of random splices')
@click.option('--min-n', type=click.IntRange(min=1), default=10,
              help='Smallest component size of the random splices')
@click.option('--max-n', type=click.IntRange(min=1), default=40,
              help='Largest component size of the random splices')
@click.option('--density-min', type=click.FloatRange(0, 1), default=0.1,
              help='Lowest probability of a non-tree edge')
@click.option('--density-max', type=click.FloatRange(0, 1), default=0.5,
              help='Highest probability of a non-tree edge')
@click.option('--exhaustive-limit', type=click.IntRange(0, 7), default=4,
              help='Splice every pair of connected graphs up to this size (0 to skip)')
@click.option('--seed', type=click.IntRange(0, 2**64 - 1), default=0,
              help='Seed of the random splices')
@click.option('--variant', 'variant_name', type=click.Choice(list(VARIANT_CHOICES)),
              default='both', help='Formula reading to check')
@click.option('--workers', type=click.IntRange(min=1), default=1,
              help='Number of dask workers (needs splice-indices[parallel])')
@click.option('--replay', type=REQUIRED_PATH,
              help='Re-check a witness from a previous report instead of running a campaign')
@click.option('--json', 'as_json', is_flag=True, help='Print a JSON report')
@click.option('--quiet/--no-quiet', default=False)
def verify(trials, min_n, max_n, density_min, density_max, exhaustive_limit, seed,
           variant_name, workers, replay, as_json, quiet):
    """Check the splice formulas against direct computation.

    Exit code 0 if the corrected formulas never differ from direct computation, 1 otherwise.
    Mismatches of the printed formulas are reported but do not change the exit code.
    """
    # pylint: disable=too-many-arguments,too-many-locals
    _set_quiet(quiet)
    variants = VARIANT_CHOICES[variant_name]
    if replay:
        _replay(replay, variants, as_json)
        return

    try:
        config = CampaignConfig(trials=trials, min_n=min_n, max_n=max_n,
                                density=(density_min, density_max), seed=seed,
                                variants=variants, exhaustive_limit=exhaustive_limit,
                                workers=workers)
    except CampaignConfigError as e:
        raise click.UsageError(str(e)) from e

    report = run_campaign(config)
    output = dumps(report.to_dict()) if as_json else report.df.to_string(index=False)
    if not report.corrected_ok:
        L.info('The corrected formulas differ from direct computation')
        click.echo(output, err=True)
        sys.exit(EXIT_MISMATCH)
    click.echo(output)


@cli.command(short_help='Time formula composition against direct recomputation')
@click.argument('file1', type=REQUIRED_PATH)
@click.argument('file2', type=REQUIRED_PATH)
@click.option('--u1', type=int, required=True, help='Glue vertex of the first graph')
@click.option('--u2', type=int, required=True, help='Glue vertex of the second graph')
@click.option('--repeat', type=click.IntRange(min=1), default=5, help='Number of runs per method')
@click.option('--json', 'as_json', is_flag=True, help='Print a JSON report')
@_format_option
@click.option('--quiet/--no-quiet', default=False)
def bench(file1, file2, u1, u2, repeat, as_json, fmt, one_based, quiet):
    """Compare the corrected formulas with direct recomputation on the splice of FILE1 and FILE2.

    Exit code 1 if the breadth-first search counts or the index values do not agree with
    their expected relation.
    """
    # pylint: disable=too-many-arguments,too-many-locals
    _set_quiet(quiet)
    with _exit_codes():
        spec = SpliceSpec(load_graph(file1, fmt, one_based), load_graph(file2, fmt, one_based),
                          u1, u2)
        rows, values = [], {}
        for method in (Method.DIRECT, Method.FORMULA_CORRECTED):
            times = []
            for _ in range(repeat):
                counters = Counters()
                report = splice_index_report(spec, method, counters)
                times.append(report.wall_time)
            values[method] = report.values()
            rows.append({'method': method.value, 'bfs_calls': counters.bfs_calls,
                         'median_s': float(np.median(times)), 'min_s': min(times)})

    df = pd.DataFrame(rows, columns=['method', 'bfs_calls', 'median_s', 'min_s'])
    n1, n2 = spec.g1.n, spec.g2.n
    counter_check = (rows[0]['bfs_calls'] == n1 + n2 - 1 and rows[1]['bfs_calls'] == n1 + n2)
    values_check = values[Method.DIRECT] == values[Method.FORMULA_CORRECTED]
    wall_time_check = 'pass' if rows[1]['median_s'] < rows[0]['median_s'] else 'warn'
    if wall_time_check == 'pass':
        L.info('Formula composition is faster than direct recomputation (median of %d runs)',
               repeat)
    else:
        L.warning('Formula composition was not faster than direct recomputation '
                  '(median of %d runs)', repeat)

    if as_json:
        output = dumps({'graph1': {'n': n1, 'm': spec.g1.m},
                        'graph2': {'n': n2, 'm': spec.g2.m},
                        'repeat': repeat,
                        'rows': rows,
                        'counter_check': counter_check,
                        'values_check': values_check,
                        'wall_time_check': wall_time_check,
                        'version': VERSION})
    else:
        output = df.to_string(index=False)

    if not (counter_check and values_check):
        click.echo(output, err=True)
        sys.exit(EXIT_MISMATCH)
    click.echo(output)


@cli.command(short_help='Write a random connected graph')
@click.argument('output_file', type=click.Path(dir_okay=False, writable=True))
@click.option('--n', 'n_vertices', type=click.IntRange(min=1), required=True,
              help='Number of vertices')
@click.option('--density', type=click.FloatRange(0, 1), default=0.,
              help='Probability of each edge outside the random spanning tree')
@click.option('--seed', type=click.IntRange(0, 2**64 - 1), default=0)
def generate(output_file, n_vertices, density, seed):
    """Write a seeded random connected graph to OUTPUT_FILE as an edge list."""
    graph = random_connected_graph(n_vertices, density, np.random.default_rng(seed))
    write_edgelist(graph, output_file)
    L.info('Wrote %s to %s', graph, output_file)
