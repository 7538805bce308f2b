"""
Graded algebra services: series arithmetic, classifying and Thom spaces,
Dyer-Lashof modules and the homology of free infinite loop spaces.
"""

from .dyer_lashof import (dl_basis_words, dl_module_dims, enumerate_dl_basis,
                          enumerate_dl_basis_exhaustive, qx_homology_series)
from .series_ops import (count_monomials, free_graded_commutative, graded_commutative_generators,
                         presentation_series, series_mul, series_product)
from .target_spaces import (GroupKind, classifying_space_series, rational_generators,
                            sigma2_invariant_series_bruteforce, thom_generator_dims)

__all__ = [
    'series_mul', 'series_product', 'free_graded_commutative', 'presentation_series',
    'count_monomials', 'graded_commutative_generators',
    'GroupKind', 'classifying_space_series', 'thom_generator_dims', 'rational_generators',
    'sigma2_invariant_series_bruteforce',
    'enumerate_dl_basis', 'enumerate_dl_basis_exhaustive', 'dl_basis_words', 'dl_module_dims',
    'qx_homology_series',
]
