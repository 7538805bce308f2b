"""
Bound engine: feasible ranges, target series and Betti number lower bounds.
"""

from .comparison import ComparisonGraph, WreathFactor, build_test_graph
from .engine import (BestBounds, DegreeBound, admissible_pairs, best_bounds, best_bounds_exhaustive,
                     betti_lower_bounds, c_best, c_best_exhaustive, c_of_partition, check_admissible,
                     closed_form_range, d_plus, sigma_quotient_range, target_series)

__all__ = [
    'd_plus', 'c_of_partition', 'c_best', 'c_best_exhaustive', 'closed_form_range', 'target_series',
    'check_admissible', 'betti_lower_bounds', 'best_bounds', 'best_bounds_exhaustive',
    'admissible_pairs', 'BestBounds', 'DegreeBound', 'sigma_quotient_range', 'build_test_graph',
    'ComparisonGraph', 'WreathFactor',
]
