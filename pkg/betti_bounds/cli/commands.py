"""
Command Line Interface
click commands for graphs, strata, Dyer-Lashof modules and Betti bounds
"""

import functools
import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional

import click
from marshmallow import ValidationError

from .. import __version__, create_context
from ..algebra.dyer_lashof import dl_basis_words, qx_homology_series
from ..algebra.target_spaces import classifying_space_series, thom_generator_dims
from ..bounds.engine import best_bounds, betti_lower_bounds, d_plus, sigma_quotient_range
from ..errors import BettiBoundsError, ContractViolation
from ..graphs.enumeration import elementary_info, enumerate_stable_graphs
from ..graphs.isomorphism import automorphisms, canonical_form, is_isomorphic
from ..graphs.operations import contract_edges, cut_edges, delete_edges, genus, validate
from ..models.boundary import BoundaryComponent, LevelMap
from ..models.field import FieldSpec
from ..models.graph import StableGraph
from ..models.series import GradedDims
from ..utils.run_log import RunEventType, RunSeverity
from ..validation.schemas import (BestBoundsSchema, BoundReportSchema, DLWordSchema, RunConfigSchema,
                                  fraction_text, graph_to_dict, load_graph)
from .formatters import emit, emit_error

logger = logging.getLogger(__name__)

FORMAT_CHOICE = click.Choice(['table', 'json', 'csv'])


def format_option(func):
    return click.option('--format', 'output_format', type=FORMAT_CHOICE, default='table',
                        show_default=True, help='Output format')(func)


def command_runner(name: str):
    """Validate common parameters, log the run and turn domain errors into JSON on stderr"""
    def decorator(func):
        @functools.wraps(func)
        @click.pass_context
        def wrapper(ctx, **kwargs):
            context = ctx.obj['context']
            settings = {
                'command': name,
                'g': kwargs.get('g'),
                'n': kwargs.get('n'),
                'characteristic': kwargs.get('char', 0),
                'cap': kwargs.get('cap'),
                'convention': ctx.obj['convention'],
                'output_format': kwargs.get('output_format', 'table'),
                'cache_dir': ctx.obj['cache_dir'],
                'workers': context.workers,
            }
            try:
                RunConfigSchema().load(settings)
            except ValidationError as e:
                context.run_log.log_event(RunEventType.VALIDATION, RunSeverity.MEDIUM, name,
                                          settings, success=False, error_message=str(e.messages))
                emit_error({'error': 'ValidationError', 'message': 'Invalid parameters',
                            'details': e.messages})
                ctx.exit(2)
            parameters = {k: v for k, v in kwargs.items() if v is not None}
            try:
                with context.run_log.track(name, parameters) as outcome:
                    result = func(context, ctx.obj['convention'], **kwargs)
                    if context.cache.stats.lookups:
                        outcome['cache'] = context.cache.stats.as_dict()
                    return result
            except BettiBoundsError as e:
                logger.debug(f"{name} failed: {e.message}")
                emit_error(e.to_dict())
                ctx.exit(1)
        return wrapper
    return decorator


@click.group()
@click.option('--dl-convention', 'convention', type=click.Choice(['strict', 'paper']),
              default='strict', show_default=True,
              help='Excess condition: strict (e + b > deg) or non-strict (e + b >= deg)')
@click.option('--cache-dir', envvar='BETTI_BOUNDS_CACHE_DIR', default=None,
              help='Directory for cached enumerations')
@click.option('--workers', type=click.IntRange(min=1), default=None,
              help='Parallel workers for independent subproblems')
@click.option('--config', 'config_name', type=click.Choice(['development', 'production', 'testing']),
              default=None, help='Configuration profile (default from BETTI_BOUNDS_ENV)')
@click.version_option(version=__version__, prog_name='betti-bounds')
@click.pass_context
def main(ctx, convention, cache_dir, workers, config_name):
    """Lower bounds on Betti numbers of moduli stacks of stable curves"""
    ctx.ensure_object(dict)
    ctx.obj['context'] = create_context(config_name, cache_dir, workers)
    ctx.obj['convention'] = convention
    ctx.obj['cache_dir'] = cache_dir


# -- argument parsing -----------------------------------------------------------

def _split_top_level(text: str) -> List[str]:
    """Split on commas outside braces"""
    parts, depth, current = [], 0, ''
    for char in text:
        if char == '{':
            depth += 1
        elif char == '}':
            depth -= 1
        if char == ',' and depth == 0:
            parts.append(current)
            current = ''
        else:
            current += char
    parts.append(current)
    return [p.strip() for p in parts if p.strip()]


def parse_components(text: str) -> List[BoundaryComponent]:
    return [BoundaryComponent.parse(part) for part in _split_top_level(text)]


def parse_levels(components: List[BoundaryComponent], text: Optional[str]) -> LevelMap:
    """--ell syntax irr=1,sep:2=0; unspecified levels default to 1"""
    levels: Dict[BoundaryComponent, int] = {}
    for part in _split_top_level(text or ''):
        if '=' not in part:
            raise ContractViolation(f"Level assignment '{part}' must look like sep:2=0")
        name, value = part.rsplit('=', 1)
        alpha = BoundaryComponent.parse(name)
        if alpha not in components:
            raise ContractViolation(f"Level given for {alpha.label()}, which is not in A")
        try:
            levels[alpha] = int(value)
        except ValueError:
            raise ContractViolation(f"Level of {alpha.label()} must be 0 or 1, got '{value}'")
    return LevelMap.of(components, levels)


def read_graph(path: str) -> StableGraph:
    try:
        payload = json.loads(Path(path).read_text(encoding='utf-8'))
    except (OSError, ValueError) as e:
        raise ContractViolation(f"Cannot read graph file {path}: {e}")
    try:
        return load_graph(payload)
    except ValidationError as e:
        raise ContractViolation(f"Malformed graph file {path}", {'fields': e.messages})


def parse_edges(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise ContractViolation(f"Edges must be half-edge indices like 0,2; got '{text}'")


def _series_rows(coeffs) -> List[List[Any]]:
    return [[degree, value] for degree, value in enumerate(coeffs)]


# -- graph commands ---------------------------------------------------------------

@main.group()
def graph():
    """Operations on stable graph JSON files"""


@graph.command('validate')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--allow-disconnected', is_flag=True, help='Do not require connectedness')
@format_option
@command_runner('graph validate')
def graph_validate(context, convention, path, allow_disconnected, output_format):
    """Check every stable-graph invariant"""
    report = validate(read_graph(path), require_connected=not allow_disconnected)
    payload = report.to_dict()
    emit(output_format, payload, ['ok', 'rule', 'vertex', 'message'],
         [[report.ok, report.rule or '', '' if report.vertex is None else report.vertex, report.message]])
    if not report.ok:
        click.get_current_context().exit(1)


@graph.command('genus')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@format_option
@command_runner('graph genus')
def graph_genus(context, convention, path, output_format):
    """Arithmetic genus of a connected graph"""
    value = genus(read_graph(path))
    emit(output_format, {'genus': value}, ['genus'], [[value]])


def _emit_graph(output_format: str, graph_: StableGraph, extra: Optional[dict] = None) -> None:
    payload = graph_to_dict(graph_)
    if extra:
        payload = {**extra, 'graph': payload}
    rows = [[v, data.genus, data.pointed, '' if data.decoration is None else data.decoration,
             graph_.valence(v), ' '.join(str(l) for l in graph_.labeled_legs_at(v))]
            for v, data in enumerate(graph_.vertices)]
    emit(output_format, payload, ['vertex', 'genus', 'pointed', 'decoration', 'valence', 'legs'], rows)


@graph.command('contract')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--edges', required=True, help='Half-edge indices naming the edges, e.g. 0,2')
@format_option
@command_runner('graph contract')
def graph_contract(context, convention, path, edges, output_format):
    """Contract edges, adding genera"""
    _emit_graph(output_format, contract_edges(read_graph(path), parse_edges(edges)))


def _emit_split(output_format: str, split) -> None:
    extra = {'components': [{'vertices': list(c.vertices), 'stable': c.stable,
                             'report': c.report.to_dict()} for c in split.components]}
    _emit_graph(output_format, split.graph, extra)


@graph.command('cut')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--edges', required=True, help='Half-edge indices naming the edges, e.g. 0,2')
@format_option
@command_runner('graph cut')
def graph_cut(context, convention, path, edges, output_format):
    """Cut edges into pairs of unlabeled legs"""
    _emit_split(output_format, cut_edges(read_graph(path), parse_edges(edges)))


@graph.command('delete')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.option('--edges', required=True, help='Half-edge indices naming the edges, e.g. 0,2')
@format_option
@command_runner('graph delete')
def graph_delete(context, convention, path, edges, output_format):
    """Delete edges and smooth bivalent genus-0 vertices"""
    _emit_split(output_format, delete_edges(read_graph(path), parse_edges(edges)))


@graph.command('aut')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@format_option
@command_runner('graph aut')
def graph_aut(context, convention, path, output_format):
    """Automorphism group order and generators"""
    group = automorphisms(read_graph(path))
    payload = {'order': group.order,
               'generators': [{'half_edges': list(a.half_edges), 'vertices': list(a.vertices)}
                              for a in group.generators]}
    emit(output_format, payload, ['order', 'generators'], [[group.order, len(group.generators)]])


@graph.command('canon')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@format_option
@command_runner('graph canon')
def graph_canon(context, convention, path, output_format):
    """Canonical encoding of the isomorphism class"""
    iso = canonical_form(read_graph(path))
    payload = {'encoding': iso.canonical_encoding.decode('utf-8'), 'digest': iso.digest}
    emit(output_format, payload, ['digest', 'encoding'], [[iso.digest, payload['encoding']]])


@graph.command('iso')
@click.argument('first', type=click.Path(exists=True, dir_okay=False))
@click.argument('second', type=click.Path(exists=True, dir_okay=False))
@format_option
@command_runner('graph iso')
def graph_iso(context, convention, first, second, output_format):
    """Decide whether two graphs are isomorphic"""
    result = is_isomorphic(read_graph(first), read_graph(second))
    emit(output_format, {'isomorphic': result}, ['isomorphic'], [[result]])


# -- enumeration commands -----------------------------------------------------------

@main.command()
@click.option('--g', type=int, required=True)
@click.option('--n', type=int, required=True)
@click.option('--max-edges', type=click.IntRange(min=0), default=None)
@format_option
@command_runner('strata')
def strata(context, convention, g, n, max_edges, output_format):
    """Isomorphism classes of stable graphs of type (g, n)"""
    found = enumerate_stable_graphs(g, n, max_edges, workers=context.workers, cache=context.cache)
    payload = [{'digest': s.iso_class.digest, 'codimension': s.codimension,
                'dimension': s.dimension, 'graph': graph_to_dict(s.graph)} for s in found]
    rows = [[i, s.codimension, s.dimension, s.graph.vertex_count,
             ' '.join(str(v.genus) for v in s.graph.vertices), s.iso_class.digest[:12]]
            for i, s in enumerate(found)]
    emit(output_format, payload, ['index', 'codim', 'dim', 'vertices', 'genera', 'digest'], rows)


@main.command()
@click.option('--g', type=int, required=True)
@click.option('--n', type=int, required=True)
@format_option
@command_runner('elementary')
def elementary(context, convention, g, n, output_format):
    """Boundary components with their elementary graph data"""
    infos = elementary_info(g, n)
    payload = [{'component': i.component.label(), 'g_alpha': i.component.g_alpha,
                'aut_order': i.aut_order, 'self_intersecting': i.self_intersecting,
                'structure_group': i.structure_group, 'graph': graph_to_dict(i.graph)}
               for i in infos]
    rows = [[i.component.label(), i.component.g_alpha, i.aut_order, i.self_intersecting,
             i.structure_group] for i in infos]
    emit(output_format, payload,
         ['component', 'g_alpha', 'aut_order', 'self_intersecting', 'structure_group'], rows)


@main.command()
@click.option('--g', type=int, required=True)
@click.option('--n', type=int, required=True)
@format_option
@command_runner('dplus')
def dplus(context, convention, g, n, output_format):
    """Self-intersecting boundary components"""
    components = d_plus(g, n)
    emit(output_format, [alpha.label() for alpha in components], ['component', 'g_alpha'],
         [[alpha.label(), alpha.g_alpha] for alpha in components])


# -- algebra commands -----------------------------------------------------------------

@main.command()
@click.option('--gens', required=True, help='Reduced homology of X as degree:count,...')
@click.option('--char', type=int, default=0, show_default=True)
@click.option('--cap', type=click.IntRange(min=0), required=True)
@format_option
@command_runner('qx')
def qx(context, convention, gens, char, cap, output_format):
    """Poincare series of H_*(QX; F)"""
    series = qx_homology_series(GradedDims.parse(gens), FieldSpec(char), cap, convention,
                                context.workers)
    emit(output_format, series.to_dict(), ['degree', 'dim'], _series_rows(series.coeffs))


@main.command('dl-basis')
@click.option('--deg', type=click.IntRange(min=1), required=True, help='Degree of the generator x')
@click.option('--p', type=int, required=True)
@click.option('--cap', type=click.IntRange(min=0), required=True)
@command_runner('dl-basis')
def dl_basis(context, convention, deg, p, cap):
    """Dump basis words Q^I x as JSON lines"""
    schema = DLWordSchema()
    words = sorted(dl_basis_words(deg, p, cap, convention), key=lambda item: (item[1], item[0].letters))
    for word, degree in words:
        click.echo(json.dumps(schema.dump({'word': word, 'degree': degree}), sort_keys=True))


@main.command()
@click.option('--group', 'group_name', required=True, help='U1, T2 or N2')
@click.option('--char', type=int, default=0, show_default=True)
@click.option('--cap', type=click.IntRange(min=0), required=True)
@format_option
@command_runner('thom')
def thom(context, convention, group_name, char, cap, output_format):
    """Cohomology of BG and reduced homology of its Thom space"""
    field = FieldSpec(char)
    base = classifying_space_series(group_name, field, cap)
    shifted = thom_generator_dims(group_name, field, cap)
    payload = {'classifying_space': base.to_dict(), 'thom_space': shifted.to_dict()}
    rows = [[d, base[d], shifted[d]] for d in range(cap + 1)]
    emit(output_format, payload, ['degree', 'BG', 'BG^V'], rows)


# -- bound commands -------------------------------------------------------------------

@main.command()
@click.option('--g', type=int, required=True)
@click.option('--n', type=int, required=True)
@click.option('--A', 'a_spec', required=True, help='Components, e.g. irr,sep:2')
@click.option('--ell', default=None, help='Levels, e.g. sep:2=0 (default 1)')
@click.option('--char', type=int, default=0, show_default=True)
@click.option('--cap', type=click.IntRange(min=0), default=None)
@format_option
@command_runner('bounds')
def bounds(context, convention, g, n, a_spec, ell, char, cap, output_format):
    """Betti number lower bounds for one choice of (A, l)"""
    components = parse_components(a_spec)
    report = betti_lower_bounds(g, n, parse_levels(components, ell), FieldSpec(char), cap,
                                convention, context.workers)
    witness = ' '.join(alpha.label() for alpha in report.levels.A)
    # positive degrees with nonzero bounds
    rows = [[i, dim, witness] for i, dim in sorted(report.bounds.items()) if i > 0 and dim]
    emit(output_format, BoundReportSchema().dump(report), ['degree', 'bound', 'witness'], rows)


@main.command('best-bounds')
@click.option('--g', type=int, required=True)
@click.option('--n', type=int, required=True)
@click.option('--char', type=int, default=0, show_default=True)
@click.option('--cap', type=click.IntRange(min=0), default=None)
@format_option
@command_runner('best-bounds')
def best_bounds_command(context, convention, g, n, char, cap, output_format):
    """Best lower bound in each degree over all (A, l)"""
    best = best_bounds(g, n, FieldSpec(char), cap, convention, context.workers)
    rows = []
    for i, entry in sorted(best.degrees.items()):
        levels = ' '.join(f"{alpha.label()}={level}" for alpha, level in entry.witness.ell.items())
        rows.append([i, entry.bound, levels])
    emit(output_format, BestBoundsSchema().dump(best), ['degree', 'bound', 'witness'], rows)


@main.command('sigma-range')
@click.option('--g', type=int, required=True)
@click.option('--h', type=int, required=True)
@click.option('--sizeP', 'size_p', type=click.IntRange(min=0), required=True)
@format_option
@command_runner('sigma-range')
def sigma_range(context, convention, g, h, size_p, output_format):
    """Degree range of the Sigma_n-quotient map and the n it requires"""
    degree_range, n_min = sigma_quotient_range(g, h, size_p)
    payload = {'g': g, 'h': h, 'sizeP': size_p, 'range': fraction_text(degree_range),
               'floor': math.floor(degree_range), 'min_n': n_min}
    emit(output_format, payload, ['range', 'floor', 'min_n'],
         [[fraction_text(degree_range), math.floor(degree_range), n_min]])


def run(argv: Optional[List[str]] = None) -> None:
    """Console entry point"""
    main(args=argv, prog_name='betti-bounds')
