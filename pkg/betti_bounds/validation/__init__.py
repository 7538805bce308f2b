"""
Validation package for betti-bounds
"""

from .schemas import (BestBoundsSchema, BoundReportSchema, DLWordSchema, GraphSchema,
                      RunConfigSchema, SeriesSchema, VertexSchema, fraction_text, graph_to_dict,
                      load_graph)

__all__ = [
    'GraphSchema', 'VertexSchema', 'RunConfigSchema', 'SeriesSchema', 'BoundReportSchema',
    'BestBoundsSchema', 'DLWordSchema', 'graph_to_dict', 'load_graph', 'fraction_text',
]
