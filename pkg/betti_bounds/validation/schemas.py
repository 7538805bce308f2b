"""
Serialization Schemas
Marshmallow schemas for graph files, run configuration and report output
"""

import logging
from fractions import Fraction
from typing import Any, Dict

from marshmallow import Schema, ValidationError, fields, post_load, validate, validates_schema
from sympy import isprime

from ..models.graph import StableGraph, VertexData

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ['table', 'json', 'csv']
CONVENTIONS = ['strict', 'paper']


def fraction_text(value: Fraction) -> str:
    """Exact rational as 'p/q', or 'p' when integral"""
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class VertexSchema(Schema):
    """Vertex record of a graph file"""
    genus = fields.Int(required=True, validate=validate.Range(min=0, error='Genus must be nonnegative'))
    pointed = fields.Bool(load_default=False)
    decoration = fields.Int(load_default=None, allow_none=True)

    @validates_schema
    def validate_decoration(self, data, **kwargs):
        """Decoration is present exactly on pointed vertices"""
        if data.get('pointed') != (data.get('decoration') is not None):
            raise ValidationError('Decoration must be given exactly when the vertex is pointed', 'decoration')


class GraphSchema(Schema):
    """Graph file: vertices, half-edge count, sigma, tau and leg labels"""
    vertices = fields.List(fields.Nested(VertexSchema), required=True,
                           validate=validate.Length(min=1, error='A graph needs at least one vertex'))
    half_edges = fields.Int(required=True, validate=validate.Range(min=0))
    sigma = fields.List(fields.Int(), required=True)
    tau = fields.List(fields.Int(), required=True)
    legs = fields.Dict(keys=fields.Str(), values=fields.Int(allow_none=True), load_default=dict)

    @validates_schema
    def validate_lengths(self, data, **kwargs):
        """sigma and tau have one entry per half-edge; leg keys are half-edges"""
        count = data.get('half_edges', 0)
        for name in ('sigma', 'tau'):
            if len(data.get(name, [])) != count:
                raise ValidationError(f'{name} must have {count} entries', name)
        for key in data.get('legs', {}):
            if not key.isdigit() or int(key) >= count:
                raise ValidationError(f'Leg key {key!r} is not a half-edge index', 'legs')

    @post_load
    def make_graph(self, data, **kwargs) -> StableGraph:
        vertices = tuple(VertexData(v['genus'], v['pointed'], v['decoration']) for v in data['vertices'])
        legs = {int(h): label for h, label in data['legs'].items()}
        return StableGraph(vertices, tuple(data['sigma']), tuple(data['tau']), legs)


def graph_to_dict(graph: StableGraph) -> Dict[str, Any]:
    """Graph file form, the inverse of GraphSchema.load"""
    return {
        'vertices': [{'genus': v.genus, 'pointed': v.pointed, 'decoration': v.decoration}
                     for v in graph.vertices],
        'half_edges': graph.half_edge_count,
        'sigma': list(graph.sigma),
        'tau': list(graph.tau),
        'legs': {str(h): label for h, label in graph.leg_labels},
    }


def load_graph(payload: Dict[str, Any]) -> StableGraph:
    return GraphSchema().load(payload)


class RunConfigSchema(Schema):
    """Common command parameters"""
    command = fields.Str(required=True)
    g = fields.Int(load_default=None, allow_none=True, validate=validate.Range(min=0))
    n = fields.Int(load_default=None, allow_none=True, validate=validate.Range(min=0))
    characteristic = fields.Int(load_default=0, validate=validate.Range(min=0))
    cap = fields.Int(load_default=None, allow_none=True,
                     validate=validate.Range(min=0, error='cap must be nonnegative'))
    convention = fields.Str(load_default='strict',
                            validate=validate.OneOf(CONVENTIONS, error='Unknown Dyer-Lashof convention'))
    output_format = fields.Str(load_default='table',
                               validate=validate.OneOf(OUTPUT_FORMATS, error='Unknown output format'))
    cache_dir = fields.Str(load_default=None, allow_none=True)
    workers = fields.Int(load_default=1, validate=validate.Range(min=1, error='workers must be at least 1'))

    @validates_schema
    def validate_characteristic(self, data, **kwargs):
        """Characteristic is 0 or a prime"""
        p = data.get('characteristic', 0)
        if p != 0 and not isprime(p):
            raise ValidationError(f'Characteristic must be 0 or a prime, got {p}', 'characteristic')


class SeriesSchema(Schema):
    """Poincare series with exact integer coefficients as strings"""
    cap = fields.Int()
    coeffs = fields.Method('dump_coeffs')

    def dump_coeffs(self, series):
        return [str(c) for c in series.coeffs]


class BoundReportSchema(Schema):
    """Bound report JSON"""
    g = fields.Int()
    n = fields.Int()
    A = fields.Method('dump_components')
    ell = fields.Method('dump_levels')
    char = fields.Int(attribute='characteristic')
    cap = fields.Int()
    convention = fields.Str()
    c = fields.Method('dump_c')
    closed_form = fields.Method('dump_closed_form')
    optimal_m = fields.Method('dump_partition')
    bounds = fields.Method('dump_bounds')

    def dump_components(self, report):
        return [alpha.label() for alpha in report.levels.A]

    def dump_levels(self, report):
        return report.levels.to_dict()

    def dump_c(self, report):
        return fraction_text(report.c_value)

    def dump_closed_form(self, report):
        return None if report.closed_form is None else fraction_text(report.closed_form)

    def dump_partition(self, report):
        return report.optimal_partition.to_dict()

    def dump_bounds(self, report):
        return {str(i): str(dim) for i, dim in sorted(report.bounds.items())}


class BestBoundsSchema(Schema):
    """Per-degree best bounds with witnesses"""
    g = fields.Int()
    n = fields.Int()
    char = fields.Int(attribute='characteristic')
    cap = fields.Int()
    convention = fields.Str()
    pairs_considered = fields.Int()
    bounds = fields.Method('dump_bounds')

    def dump_bounds(self, best):
        return {
            str(i): {
                'bound': str(entry.bound),
                'A': [alpha.label() for alpha in entry.witness.A],
                'ell': entry.witness.to_dict(),
                'c': fraction_text(entry.c_value),
            }
            for i, entry in sorted(best.degrees.items())
        }


class DLWordSchema(Schema):
    """One basis word Q^I x of a Dyer-Lashof module"""
    word = fields.Method('dump_word')
    degree = fields.Int()

    def dump_word(self, item):
        return item['word'].word()
