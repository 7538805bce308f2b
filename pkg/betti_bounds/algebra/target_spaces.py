"""
Target Spaces
Graded dimensions of H^*(BG; F) for G in {U(1), T(2), N(2)} and of the
reduced homology of the Thom spaces BG^V.

V is the universal complex line bundle pulled back along
T(2) -> N(2) -> U(1).  Its Euler class is a non-zero-divisor in every
case (in characteristic 2 on BN(2) it is c_1(V) = y_1 + w^2), so the
reduced homology of BG^V is H_*(BG) shifted up by the real rank 2.
These identities are recorded here; only dimensions are computed.
"""

import logging
from itertools import product
from typing import List, Tuple, Union

from ..models.field import FieldSpec
from ..models.group import GroupKind
from ..models.series import GradedDims, PoincareSeries
from .series_ops import presentation_series

logger = logging.getLogger(__name__)

THOM_SHIFT = 2


def classifying_space_series(group: Union[GroupKind, str], field: FieldSpec, cap: int) -> PoincareSeries:
    """Poincare series of H^*(BG; F) truncated at cap"""
    group = GroupKind.parse(group)
    if group is GroupKind.U1:
        return presentation_series([2], [], cap)
    if group is GroupKind.T2:
        return presentation_series([2, 2], [], cap)
    if field.is_even:
        # F_2[w, y_1, y_2]/(w^3), |w| = 1, |y_1| = 2, |y_2| = 4
        return presentation_series([2, 4], [(1, 3)], cap)
    # Sigma_2-invariants F[sigma_1, sigma_2] of H^*(BT(2))
    return presentation_series([2, 4], [], cap)


def thom_generator_dims(group: Union[GroupKind, str], field: FieldSpec, cap: int) -> GradedDims:
    """Graded dimensions of the reduced homology of BG^V up to degree cap"""
    if cap < THOM_SHIFT:
        return GradedDims()
    base = classifying_space_series(group, field, cap - THOM_SHIFT)
    return GradedDims.from_series(base, THOM_SHIFT)


def rational_generators(cap: int) -> List[Tuple[int, int]]:
    """Pairs (i, j) with 2 + 2i + 4j <= cap, the degrees of the a_{i,j}"""
    return [(i, j) for j in range(cap // 4 + 1) for i in range(cap // 2 + 1)
            if 2 + 2 * i + 4 * j <= cap]


def sigma2_invariant_series_bruteforce(cap: int) -> PoincareSeries:
    """Dimensions of the swap-invariant polynomials in two degree-2 variables

    Counts orbits of monomials x_1^a x_2^b under a <-> b, which span the
    invariants in characteristic 0 and odd characteristic.
    """
    coeffs = [0] * (cap + 1)
    for a, b in product(range(cap // 2 + 1), repeat=2):
        degree = 2 * (a + b)
        if degree <= cap and a <= b:
            coeffs[degree] += 1
    return PoincareSeries(cap, tuple(coeffs))
