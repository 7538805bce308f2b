"""
Dyer-Lashof Operations
Basis counting for free unstable Dyer-Lashof modules and H_*(QX; F)
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple, Union

from ..errors import ContractViolation
from ..models.dyer_lashof import (AdmissibleSeq, DLConvention, Letter, b_of, degree_shift,
                                  excess, letter_lead, letter_shift)
from ..models.field import FieldSpec
from ..models.series import GradedDims, PoincareSeries
from .series_ops import free_graded_commutative

logger = logging.getLogger(__name__)


def _check_inputs(deg_x: int, p: int, cap: int) -> None:
    if deg_x < 1:
        raise ContractViolation(
            f"Dyer-Lashof generators need positive degree, got {deg_x}", {'degree': deg_x}
        )
    if cap < deg_x:
        raise ContractViolation(f"cap {cap} is below the generator degree {deg_x}")
    AdmissibleSeq(p)  # validates p


def _letters_up_to(p: int, budget: int, s_bound: Optional[int] = None) -> Iterator[Letter]:
    """Letters with shift <= budget and s <= s_bound, in increasing (s, epsilon) order"""
    s = 1
    while letter_shift(p, (1 if p != 2 else 0, s)) <= budget:
        if s_bound is not None and s > s_bound:
            return
        epsilons = (0,) if p == 2 else (0, 1)
        for eps in epsilons:
            if letter_shift(p, (eps, s)) <= budget:
                yield (eps, s)
        s += 1


@lru_cache(maxsize=None)
def _tail_count(p: int, s_bound: int, total: int) -> int:
    """Admissible words (empty included) of exact shift total whose first s is <= s_bound"""
    if total == 0:
        return 1
    count = 0
    for eps, s in _letters_up_to(p, total, s_bound):
        count += _tail_count(p, p * s - eps, total - letter_shift(p, (eps, s)))
    return count


def enumerate_dl_basis(deg_x: int, p: int, cap: int,
                       conv: Union[DLConvention, str] = DLConvention.STRICT) -> GradedDims:
    """Graded dimensions of the span of admissible Q^I x, by recursive counting"""
    _check_inputs(deg_x, p, cap)
    conv = DLConvention.parse(conv)
    strict_offset = 1 if conv is DLConvention.STRICT else 0
    dims: Dict[int, int] = {deg_x: 1}
    budget = cap - deg_x
    for eps, s in _letters_up_to(p, budget):
        first_shift = letter_shift(p, (eps, s))
        # e(I) + b(I) = lead + eps - tail_shift must clear deg_x
        allowance = letter_lead(p, (eps, s)) + (eps if p != 2 else 0) - deg_x - strict_offset
        for tail in range(0, min(allowance, budget - first_shift) + 1):
            count = _tail_count(p, p * s - eps, tail)
            if count:
                degree = deg_x + first_shift + tail
                dims[degree] = dims.get(degree, 0) + count
    return GradedDims(dims)


def dl_basis_words(deg_x: int, p: int, cap: int,
                   conv: Union[DLConvention, str] = DLConvention.STRICT) -> Iterator[Tuple[AdmissibleSeq, int]]:
    """Yield every basis word Q^I x with its degree by explicit search

    Words are extended letter by letter; a branch is abandoned once the
    excess condition fails, since appending letters only lowers excess.
    """
    _check_inputs(deg_x, p, cap)
    conv = DLConvention.parse(conv)
    budget = cap - deg_x

    def extend(letters: Tuple[Letter, ...], used: int) -> Iterator[Tuple[AdmissibleSeq, int]]:
        for letter in _letters_up_to(p, budget - used):
            candidate = letters + (letter,)
            try:
                word = AdmissibleSeq(p, candidate)
            except ContractViolation:
                continue
            if not conv.allows(excess(word) + b_of(word), deg_x):
                continue
            yield word, deg_x + degree_shift(word)
            yield from extend(candidate, used + letter_shift(p, letter))

    yield AdmissibleSeq(p), deg_x
    yield from extend((), 0)


def enumerate_dl_basis_exhaustive(deg_x: int, p: int, cap: int,
                                  conv: Union[DLConvention, str] = DLConvention.STRICT) -> GradedDims:
    """Same dimensions as enumerate_dl_basis, counted from the explicit word list"""
    dims: Dict[int, int] = {}
    for _, degree in dl_basis_words(deg_x, p, cap, conv):
        dims[degree] = dims.get(degree, 0) + 1
    return GradedDims(dims)


def dl_module_dims(gens: GradedDims, p: int, cap: int,
                   conv: Union[DLConvention, str] = DLConvention.STRICT,
                   workers: int = 1) -> GradedDims:
    """Graded dimensions of DL(V) for V with the given generator dims"""
    conv = DLConvention.parse(conv)
    inputs = [(d, m) for d, m in gens.items() if d <= cap]

    def one(item):
        degree, multiplicity = item
        basis = enumerate_dl_basis(degree, p, cap, conv)
        return GradedDims({d: c * multiplicity for d, c in basis.items()})

    if workers > 1 and len(inputs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts: List[GradedDims] = list(pool.map(one, inputs))
    else:
        parts = [one(item) for item in inputs]

    total = GradedDims()
    for part in parts:
        total = total.direct_sum(part)
    return total


def qx_homology_series(x_reduced: GradedDims, field: FieldSpec, cap: int,
                       conv: Union[DLConvention, str] = DLConvention.STRICT,
                       workers: int = 1) -> PoincareSeries:
    """Poincare series of H_*(QX; F) from the reduced homology of X"""
    if not isinstance(x_reduced, GradedDims):
        x_reduced = GradedDims(x_reduced)
    if field.is_rational:
        return free_graded_commutative(x_reduced, field, cap)
    module = dl_module_dims(x_reduced, field.characteristic, cap, conv, workers)
    logger.debug(f"DL module over {field} to degree {cap}: {module.total()} basis elements")
    return free_graded_commutative(module, field, cap)
