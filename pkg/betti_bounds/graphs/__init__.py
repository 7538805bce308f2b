"""
Stable graph services: validation, edge operations, isomorphism and
enumeration of strata and boundary components.
"""

from .enumeration import (ElementaryInfo, Stratum, elementary_graph, elementary_info,
                          enumerate_elementary, enumerate_stable_graphs,
                          enumerate_stable_graphs_bruteforce, is_self_intersecting,
                          is_stable_signature, require_stable)
from .isomorphism import (automorphisms, canonical_form, count_automorphisms_exhaustive,
                          find_isomorphism, graph_from_canonical, is_automorphism,
                          is_isomorphic, is_isomorphic_exhaustive)
from .operations import (ComponentInfo, SplitResult, contract_edges, cut_edges, delete_edges,
                         dimension, genus, validate)

__all__ = [
    'validate', 'genus', 'dimension', 'contract_edges', 'cut_edges', 'delete_edges',
    'SplitResult', 'ComponentInfo',
    'canonical_form', 'graph_from_canonical', 'is_isomorphic', 'find_isomorphism',
    'automorphisms', 'is_automorphism',
    'is_isomorphic_exhaustive', 'count_automorphisms_exhaustive',
    'Stratum', 'enumerate_stable_graphs', 'enumerate_stable_graphs_bruteforce',
    'enumerate_elementary', 'elementary_graph', 'elementary_info', 'ElementaryInfo',
    'is_self_intersecting', 'is_stable_signature', 'require_stable',
]
