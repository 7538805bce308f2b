"""
Bound Engine
Feasible degree ranges c(A, l), target series of the Pontrjagin-Thom
maps and the resulting lower bounds on Betti numbers of the moduli stack.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Tuple, Union

from ..algebra.dyer_lashof import qx_homology_series
from ..algebra.series_ops import series_product
from ..algebra.target_spaces import thom_generator_dims
from ..errors import BoundaryComponentError, ContractViolation
from ..graphs.enumeration import is_self_intersecting, require_stable
from ..models.boundary import APartition, BoundaryComponent, BoundReport, LevelMap
from ..models.dyer_lashof import DLConvention
from ..models.field import FieldSpec
from ..models.group import GroupKind
from ..models.series import PoincareSeries

logger = logging.getLogger(__name__)

Convention = Union[DLConvention, str]


def d_plus(g: int, n: int) -> List[BoundaryComponent]:
    """Boundary components with nontrivial self-intersection"""
    require_stable(g, n)
    result = []
    if g >= 1:
        result.append(BoundaryComponent.irr())
    for h in range(1, g // 2 + 1):
        alpha = BoundaryComponent.sep(h)
        if is_self_intersecting(alpha, g, n):
            result.append(alpha)
    return result


def c_of_partition(g: int, levels: LevelMap, m: APartition) -> Fraction:
    """min{r/2 - 1, m_a/2, g_a/2 - 1 for separating a at level 1}"""
    if m.g != g:
        raise ContractViolation(f"Partition is of genus {m.g}, expected {g}")
    stray = [alpha.label() for alpha in m.m if alpha not in levels.ell and m.count(alpha)]
    if stray:
        raise ContractViolation(f"Partition uses components outside A: {', '.join(stray)}")
    if not m.is_valid:
        raise ContractViolation(f"Not an A-partition of {g}: residual genus {m.r} < 0",
                                {'r': m.r})
    candidates = [Fraction(m.r, 2) - 1]
    for alpha in levels.A:
        candidates.append(Fraction(m.count(alpha), 2))
        if levels.level(alpha) == 1 and not alpha.is_irr:
            candidates.append(Fraction(alpha.g_alpha, 2) - 1)
    return min(candidates)


def _partitions(g: int, A: Tuple[BoundaryComponent, ...], first: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Every m with sum m_a g_a <= g, in lexicographic order"""
    def rec(index: int, remaining: int) -> Iterator[Tuple[int, ...]]:
        if index == len(A):
            yield ()
            return
        weight = A[index].g_alpha
        top = remaining // weight if weight else 0
        choices = range(top + 1) if (index or first is None) else [first]
        for count in choices:
            if count * weight > remaining:
                continue
            for rest in rec(index + 1, remaining - count * weight):
                yield (count,) + rest
    yield from rec(0, g)


def c_best(g: int, levels: LevelMap) -> Tuple[Fraction, APartition]:
    """Maximise c over all A-partitions; ties go to the least m vector

    Every candidate in the minimum is a multiple of 1/2, so c >= s/2 is
    decided directly: each m_a must be at least s, and the residual genus
    g - s * sum g_a must still reach s + 2.  The coordinatewise least m
    attaining the optimum is also the lexicographically least.
    """
    A = levels.A
    if not A:
        raise ContractViolation("A must contain at least one boundary component")
    weight = sum(alpha.g_alpha for alpha in A)
    if g >= 2:
        steps = (g - 2) // (weight + 1)
    else:
        steps = g - 2
    caps = [Fraction(steps, 2)]
    for alpha in A:
        if alpha.g_alpha == 0:
            caps.append(Fraction(0))
        elif levels.level(alpha) == 1 and not alpha.is_irr:
            caps.append(Fraction(alpha.g_alpha, 2) - 1)
    value = min(caps)
    count = max(0, int(2 * value))
    partition = APartition(g, {alpha: (count if alpha.g_alpha else 0) for alpha in A})
    return c_of_partition(g, levels, partition), partition


def c_best_exhaustive(g: int, levels: LevelMap, workers: int = 1) -> Tuple[Fraction, APartition]:
    """Reference optimum by searching every A-partition"""
    A = levels.A
    if not A:
        raise ContractViolation("A must contain at least one boundary component")

    def best_with_first(first: int) -> Optional[Tuple[Fraction, Tuple[int, ...]]]:
        best = None
        for vector in _partitions(g, A, first):
            value = c_of_partition(g, levels, APartition(g, dict(zip(A, vector))))
            if best is None or value > best[0]:
                best = (value, vector)
        return best

    heads = range(g // A[0].g_alpha + 1) if A[0].g_alpha else range(1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partial = list(pool.map(best_with_first, heads))
    else:
        partial = [best_with_first(head) for head in heads]

    # heads ascend, so the first strict maximum is lexicographically least
    value, vector = None, None
    for found in partial:
        if found is not None and (value is None or found[0] > value):
            value, vector = found
    return value, APartition(g, dict(zip(A, vector)))


def closed_form_range(g: int, levels: LevelMap) -> Optional[Fraction]:
    """Real-valued supremum of the degree range for a single component"""
    if len(levels.A) != 1:
        return None
    alpha = levels.A[0]
    if alpha.is_irr:
        return Fraction(g - 2, 4)
    h = alpha.h
    separating = Fraction(g - 2, 2 * h + 2)
    if levels.level(alpha) == 0:
        return separating
    return min(Fraction(h, 2) - 1, separating)


def target_series(levels: LevelMap, field: FieldSpec, cap: int,
                  conv: Convention = DLConvention.STRICT, workers: int = 1) -> PoincareSeries:
    """Poincare series of the product of Q(BG_a^V) over a in A"""
    factors: Dict[GroupKind, PoincareSeries] = {}
    series = []
    for alpha in levels.A:
        group = levels.group(alpha)
        if group not in factors:
            factors[group] = qx_homology_series(
                thom_generator_dims(group, field, cap), field, cap, conv, workers
            )
        series.append(factors[group])
    return series_product(series, cap)


def check_admissible(g: int, n: int, levels: LevelMap) -> None:
    allowed = set(d_plus(g, n))
    for alpha in levels.A:
        if alpha not in allowed:
            raise BoundaryComponentError(
                f"{alpha.label()} is not a self-intersecting boundary component of type ({g}, {n})",
                {'component': alpha.label(), 'g': g, 'n': n},
            )


def betti_lower_bounds(g: int, n: int, levels: LevelMap, field: FieldSpec,
                       cap: Optional[int] = None, conv: Convention = DLConvention.STRICT,
                       workers: int = 1) -> BoundReport:
    """Lower bounds on dim H_i of the moduli stack for 0 <= i <= c(A, l)"""
    require_stable(g, n)
    check_admissible(g, n, levels)
    conv = DLConvention.parse(conv)
    c_value, partition = c_best(g, levels)
    top = math.floor(c_value)
    if cap is None:
        cap = max(top, 0)
    if cap < top:
        raise ContractViolation(f"cap {cap} is below the feasible range {top}",
                                {'cap': cap, 'c': str(c_value)})
    target = target_series(levels, field, cap, conv, workers)
    bounds = {i: target[i] for i in range(top + 1)} if c_value >= 0 else {}
    logger.debug(f"Bounds for ({g}, {n}) with A = {levels.to_dict()}: c = {c_value}")
    return BoundReport(
        g=g, n=n, levels=levels, characteristic=field.characteristic, cap=cap,
        convention=conv.value, c_value=c_value, optimal_partition=partition,
        bounds=bounds, closed_form=closed_form_range(g, levels), target=target,
    )


# -- sweeps over (A, l) -------------------------------------------------------

@dataclass(frozen=True)
class DegreeBound:
    """Best bound in one degree with the pair that attains it"""
    degree: int
    bound: int
    witness: LevelMap
    c_value: Fraction


@dataclass(frozen=True)
class BestBounds:
    """Per-degree maxima over admissible (A, l) pairs"""
    g: int
    n: int
    characteristic: int
    cap: int
    convention: str
    degrees: Dict[int, DegreeBound]
    pairs_considered: int = 0


def admissible_pairs(g: int, n: int) -> List[LevelMap]:
    """(A, l) pairs able to contribute a bound

    Reaching degree 1 needs m_a >= 2 for every a in A and r >= 4, so
    only A with 2 * sum g_a + 4 <= g are swept beyond the singletons.
    Every pair yields 1 in degree 0.
    """
    components = d_plus(g, n)
    seen = set()
    pairs: List[LevelMap] = []
    for size in range(1, len(components) + 1):
        for A in combinations(components, size):
            if size > 1 and 2 * sum(a.g_alpha for a in A) + 4 > g:
                continue
            separating = [a for a in A if not a.is_irr]
            for choice in product((0, 1), repeat=len(separating)):
                levels = LevelMap.of(A, dict(zip(separating, choice)))
                if levels not in seen:
                    seen.add(levels)
                    pairs.append(levels)
    return pairs


def best_bounds_exhaustive(g: int, n: int, field: FieldSpec, cap: Optional[int] = None,
                           conv: Convention = DLConvention.STRICT, workers: int = 1) -> BestBounds:
    """Reference sweep evaluating every admissible (A, l)"""
    require_stable(g, n)
    conv = DLConvention.parse(conv)
    pairs = admissible_pairs(g, n)

    def evaluate(levels: LevelMap) -> Tuple[LevelMap, Fraction]:
        return levels, c_best(g, levels)[0]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            ranges = list(pool.map(evaluate, pairs))
    else:
        ranges = [evaluate(levels) for levels in pairs]

    reachable = max((math.floor(c) for _, c in ranges), default=-1)
    top = reachable if cap is None else min(cap, reachable)
    series = _ShapeSeries(field, max(top, 0), conv, workers)
    degrees: Dict[int, DegreeBound] = {}
    for levels, c_value in ranges:
        if c_value < 0:
            continue
        upto = min(math.floor(c_value), top)
        target = series.of(levels)
        for i in range(upto + 1):
            current = degrees.get(i)
            if current is None or target[i] > current.bound:
                degrees[i] = DegreeBound(i, target[i], levels, c_value)
    logger.info(f"best_bounds_exhaustive({g}, {n}) over {len(pairs)} pairs reaches degree {top}")
    return BestBounds(g, n, field.characteristic, max(top, 0), conv.value,
                      dict(sorted(degrees.items())), len(pairs))


class _ShapeSeries:
    """Target series keyed by (irr present, level-1 count, level-0 count)"""

    def __init__(self, field: FieldSpec, cap: int, conv: DLConvention, workers: int):
        self.field = field
        self.cap = cap
        self.conv = conv
        self.workers = workers
        self._qx: Dict[GroupKind, PoincareSeries] = {}
        self._shapes: Dict[Tuple[int, int, int], PoincareSeries] = {}

    def _factor(self, group: GroupKind) -> PoincareSeries:
        if group not in self._qx:
            self._qx[group] = qx_homology_series(
                thom_generator_dims(group, self.field, self.cap), self.field, self.cap,
                self.conv, self.workers
            )
        return self._qx[group]

    def shape(self, a: int, t: int, u: int) -> PoincareSeries:
        key = (a, t, u)
        if key not in self._shapes:
            factors = ([self._factor(GroupKind.N2)] * a + [self._factor(GroupKind.T2)] * t
                       + [self._factor(GroupKind.U1)] * u)
            self._shapes[key] = series_product(factors, self.cap)
        return self._shapes[key]

    def of(self, levels: LevelMap) -> PoincareSeries:
        groups = [levels.group(alpha) for alpha in levels.A]
        return self.shape(groups.count(GroupKind.N2), groups.count(GroupKind.T2),
                          groups.count(GroupKind.U1))


def _witness(has_irr: bool, separating: List[int], degree: int,
             a: int, t: int, u: int) -> Optional[LevelMap]:
    """Least-genus (A, l) of the given shape whose level-1 members reach the degree"""
    if a and not has_irr:
        return None
    high = [h for h in separating if h >= 2 * degree + 2][:t]
    if len(high) < t:
        return None
    low = [h for h in separating if h not in high][:u]
    if len(low) < u:
        return None
    ell = {BoundaryComponent.sep(h): 1 for h in high}
    ell.update({BoundaryComponent.sep(h): 0 for h in low})
    if a:
        ell[BoundaryComponent.irr()] = 1
    return LevelMap(ell)


def best_bounds(g: int, n: int, field: FieldSpec, cap: Optional[int] = None,
                conv: Convention = DLConvention.STRICT, workers: int = 1) -> BestBounds:
    """Maximum lower bound in each degree over all admissible (A, l)

    The target series only sees how many members of A map to each group,
    and c(A, l) only drops as members are added or grow in genus.  So per
    degree it is enough to test the least-genus pair of every shape,
    stopping a run of shapes at the first one out of range.
    """
    require_stable(g, n)
    conv = DLConvention.parse(conv)
    components = d_plus(g, n)
    has_irr = any(alpha.is_irr for alpha in components)
    separating = sorted(alpha.h for alpha in components if not alpha.is_irr)

    ranges: Dict[LevelMap, Fraction] = {}

    def c_of(levels: LevelMap) -> Fraction:
        if levels not in ranges:
            ranges[levels] = c_best(g, levels)[0]
        return ranges[levels]

    singletons = [LevelMap.of([alpha], {alpha: level})
                  for alpha in components for level in ((1,) if alpha.is_irr else (0, 1))]
    reachable = max((math.floor(c_of(levels)) for levels in singletons), default=-1)
    top = reachable if cap is None else min(cap, reachable)
    series = _ShapeSeries(field, max(top, 0), conv, workers)

    degrees: Dict[int, DegreeBound] = {}
    for i in range(top + 1):
        if i == 0:
            # every pair in range gives 1
            levels = next(levels for levels in singletons if ranges[levels] >= 0)
            degrees[0] = DegreeBound(0, series.of(levels)[0], levels, ranges[levels])
            continue
        feasible = []
        for a in (0, 1):
            for t in range(len(separating) + 1):
                for u in range(len(separating) - t + 1):
                    if a + t + u == 0:
                        continue
                    levels = _witness(has_irr, separating, i, a, t, u)
                    if levels is None or c_of(levels) < i:
                        break
                    feasible.append(((a + t + u, a, t, u), levels))
                else:
                    continue
                if u == 0 and a + t:
                    break
        for (_, a, t, u), levels in sorted(feasible, key=lambda item: item[0]):
            bound = series.shape(a, t, u)[i]
            current = degrees.get(i)
            if current is None or bound > current.bound:
                degrees[i] = DegreeBound(i, bound, levels, ranges[levels])
    logger.info(f"best_bounds({g}, {n}) over {len(ranges)} witnesses reaches degree {top}")
    return BestBounds(g, n, field.characteristic, max(top, 0), conv.value,
                      dict(sorted(degrees.items())), len(ranges))


def sigma_quotient_range(g: int, h: int, size_p: int) -> Tuple[Fraction, int]:
    """Degree range (g-2)/(2h+2) for the Sigma_n-quotient and the least n it needs"""
    if h < 1 or 2 * h >= g:
        raise ContractViolation(f"Need 1 <= h < g/2, got h = {h}, g = {g}", {'g': g, 'h': h})
    if size_p < 0:
        raise ContractViolation("|P| must be nonnegative")
    degree_range = Fraction(g - 2, 2 * h + 2)
    return degree_range, max(0, math.ceil(size_p * degree_range))
