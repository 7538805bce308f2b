"""
Models package for betti-bounds
"""

from .boundary import APartition, BoundaryComponent, BoundReport, LevelMap
from .dyer_lashof import AdmissibleSeq, DLConvention, b_of, degree_shift, excess
from .field import FieldSpec
from .graph import (Automorphism, AutGroup, GraphIsoClass, StableGraph, ValidationReport,
                    VertexData)
from .series import GradedDims, PoincareSeries

__all__ = [
    'FieldSpec', 'PoincareSeries', 'GradedDims',
    'StableGraph', 'VertexData', 'GraphIsoClass', 'AutGroup', 'Automorphism', 'ValidationReport',
    'AdmissibleSeq', 'DLConvention', 'excess', 'b_of', 'degree_shift',
    'BoundaryComponent', 'LevelMap', 'APartition', 'BoundReport',
]
