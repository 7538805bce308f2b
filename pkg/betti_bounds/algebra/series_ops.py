"""
Series Operations
Exact arithmetic on truncated Poincare series and free graded-commutative closures
"""

import logging
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from ..errors import ContractViolation
from ..models.field import FieldSpec
from ..models.series import GradedDims, PoincareSeries

logger = logging.getLogger(__name__)


def _require_same_cap(a: PoincareSeries, b: PoincareSeries) -> None:
    if a.cap != b.cap:
        raise ContractViolation(
            f"Series caps differ ({a.cap} vs {b.cap}); truncate explicitly first",
            {'left_cap': a.cap, 'right_cap': b.cap},
        )


def series_mul(a: PoincareSeries, b: PoincareSeries) -> PoincareSeries:
    """Cauchy product truncated at the shared cap"""
    _require_same_cap(a, b)
    cap = a.cap
    out = [0] * (cap + 1)
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j in range(cap - i + 1):
            bj = b.coeffs[j]
            if bj:
                out[i + j] += ai * bj
    return PoincareSeries(cap, tuple(out))


def series_product(factors: Sequence[PoincareSeries], cap: int) -> PoincareSeries:
    """Product of several series; the empty product is 1"""
    result = PoincareSeries.one(cap)
    for factor in factors:
        result = series_mul(result, factor)
    return result


def _multiply_polynomial(coeffs: List[int], degree: int, times: int) -> None:
    # in place: coeffs *= (1 - t^degree)^(-times)
    cap = len(coeffs) - 1
    for _ in range(times):
        for k in range(degree, cap + 1):
            coeffs[k] += coeffs[k - degree]


def _multiply_exterior(coeffs: List[int], degree: int, times: int) -> None:
    # in place: coeffs *= (1 + t^degree)^times
    cap = len(coeffs) - 1
    for _ in range(times):
        for k in range(cap, degree - 1, -1):
            coeffs[k] += coeffs[k - degree]


def _multiply_truncated(coeffs: List[int], degree: int, height: int) -> None:
    # in place: coeffs *= 1 + t^d + ... + t^(d(height-1))
    cap = len(coeffs) - 1
    original = list(coeffs)
    for e in range(1, height):
        shift = e * degree
        if shift > cap:
            break
        for k in range(shift, cap + 1):
            coeffs[k] += original[k - shift]


def free_graded_commutative(gens: GradedDims, field: FieldSpec, cap: int) -> PoincareSeries:
    """Poincare series of the free graded-commutative algebra on gens

    In characteristic 2 every generator is polynomial; otherwise odd
    generators are exterior and even generators polynomial.
    """
    if cap < 0:
        raise ContractViolation(f"cap must be nonnegative, got {cap}")
    if not isinstance(gens, GradedDims):
        gens = GradedDims(gens)
    coeffs = [1] + [0] * cap
    for degree, count in gens.items():
        if degree > cap:
            continue
        if field.is_even or degree % 2 == 0:
            _multiply_polynomial(coeffs, degree, count)
        else:
            _multiply_exterior(coeffs, degree, count)
    return PoincareSeries(cap, tuple(coeffs))


def presentation_series(polynomial_degrees: Sequence[int],
                        truncated: Sequence[Tuple[int, int]],
                        cap: int) -> PoincareSeries:
    """Series of F[x_i] tensor F[w_j]/(w_j^height_j) by the product formula

    ``truncated`` holds (degree, height) pairs.
    """
    coeffs = [1] + [0] * cap
    for degree in polynomial_degrees:
        _multiply_polynomial(coeffs, degree, 1)
    for degree, height in truncated:
        _multiply_truncated(coeffs, degree, height)
    return PoincareSeries(cap, tuple(coeffs))


def count_monomials(generators: Sequence[Tuple[int, Optional[int]]], cap: int) -> PoincareSeries:
    """Count monomials degree by degree by direct recursion over exponents

    Each generator is (degree, max_exponent) with None for unbounded.
    Used as an independent oracle for the product formulas above.
    """
    gens = tuple((d, m) for d, m in generators if d <= cap)
    if any(d <= 0 for d, _ in gens):
        raise ContractViolation("Monomial generators must have positive degree")

    @lru_cache(maxsize=None)
    def count(index: int, remaining: int) -> int:
        if index == len(gens):
            return 1 if remaining == 0 else 0
        degree, bound = gens[index]
        top = remaining // degree
        if bound is not None:
            top = min(top, bound)
        return sum(count(index + 1, remaining - e * degree) for e in range(top + 1))

    coeffs = tuple(count(0, d) for d in range(cap + 1))
    count.cache_clear()
    return PoincareSeries(cap, coeffs)


def graded_commutative_generators(gens: GradedDims, field: FieldSpec) -> List[Tuple[int, Optional[int]]]:
    """Generator list for count_monomials matching free_graded_commutative's rule"""
    result: List[Tuple[int, Optional[int]]] = []
    for degree, count in gens.items():
        bound = None if field.is_even or degree % 2 == 0 else 1
        result.extend([(degree, bound)] * count)
    return result
