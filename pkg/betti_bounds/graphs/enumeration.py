"""
Strata Enumeration
Isomorphism classes of stable graphs of type (g, n) and the elementary
boundary components of the moduli stack.

Strata with k edges are generated from those with k - 1 edges by
degenerating one vertex: either growing a loop (genus drops by one) or
splitting it in two along a new edge, with the genus and the incident
half-edges shared out.  Every stable graph arises this way, since
contracting any edge of a stable graph leaves a stable graph, and each
split is checked for stability before it is kept.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Dict, Iterator, List, Optional, Set, Tuple

from ..config.cache import CacheManager
from ..errors import UnstableSignatureError
from ..models.boundary import BoundaryComponent
from ..models.graph import GraphIsoClass, StableGraph
from .isomorphism import automorphisms, canonical_form, graph_from_canonical, is_isomorphic_exhaustive
from .operations import dimension, validate

logger = logging.getLogger(__name__)


def is_stable_signature(g: int, n: int) -> bool:
    return g >= 0 and n >= 0 and 2 * g - 2 + n > 0


def require_stable(g: int, n: int) -> None:
    if not is_stable_signature(g, n):
        raise UnstableSignatureError(g, n)


@dataclass(frozen=True)
class Stratum:
    """One isomorphism class of stable graphs with a representative"""
    iso_class: GraphIsoClass
    graph: StableGraph
    g: int
    n: int

    @property
    def codimension(self) -> int:
        return self.graph.edge_count

    @property
    def dimension(self) -> int:
        return dimension(self.g, self.n) - self.codimension


class _SeenSet:
    """Insert-if-absent set shared by the enumeration workers"""

    def __init__(self):
        self._items: Set[bytes] = set()
        self._lock = threading.Lock()

    def add(self, item: bytes) -> bool:
        with self._lock:
            if item in self._items:
                return False
            self._items.add(item)
            return True


def _vertex_stable(genus: int, valence: int) -> bool:
    return 2 * genus - 2 + valence > 0


def _rebuild(graph: StableGraph, genera: List[int], place: Dict[int, int],
             extra_edge: Tuple[int, int]) -> StableGraph:
    """Graph with half-edges moved to new vertices and one edge added"""
    edges = [(place.get(a, graph.tau[a]), place.get(b, graph.tau[b])) for a, b in graph.edges()]
    legs = {label: place.get(h, graph.tau[h]) for h, label in graph.leg_labels}
    return StableGraph.build(genera, edges + [extra_edge], legs)


def _degenerations(graph: StableGraph) -> Iterator[StableGraph]:
    """Stable graphs with one more edge that contract back onto graph"""
    genera = [v.genus for v in graph.vertices]
    fresh = graph.vertex_count
    for v, g_v in enumerate(genera):
        if g_v >= 1:
            looped = list(genera)
            looped[v] -= 1
            yield _rebuild(graph, looped, {}, (v, v))

        around = graph.half_edges_at(v)
        for h in range(g_v + 1):
            for mask in product((False, True), repeat=len(around)):
                moved = sum(mask)
                # each side carries the new half-edge as well
                if not (_vertex_stable(h, moved + 1)
                        and _vertex_stable(g_v - h, len(around) - moved + 1)):
                    continue
                split = genera[:v] + [g_v - h] + genera[v + 1:] + [h]
                place = {half: fresh for half, go in zip(around, mask) if go}
                yield _rebuild(graph, split, place, (v, fresh))


def _strata_records(g: int, n: int, bound: int, workers: int) -> List[dict]:
    """Canonical encodings of every stratum, level by level"""
    seen = _SeenSet()
    root = canonical_form(StableGraph.build([g], [], {i: 0 for i in range(1, n + 1)}))
    seen.add(root.canonical_encoding)
    level = [root.canonical_encoding]
    found = list(level)

    def expand(code: bytes) -> List[bytes]:
        fresh = []
        for child in _degenerations(graph_from_canonical(GraphIsoClass(code))):
            encoding = canonical_form(child).canonical_encoding
            if seen.add(encoding):
                fresh.append(encoding)
        return fresh

    for k in range(1, bound + 1):
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                batches = list(pool.map(expand, level))
        else:
            batches = [expand(code) for code in level]
        level = sorted(code for batch in batches for code in batch)
        if not level:
            break
        logger.debug(f"Strata ({g}, {n}): {len(level)} classes with {k} edges")
        found.extend(level)
    return [{'encoding': code.decode('utf-8')} for code in found]


def _edge_bound(g: int, n: int, max_edges: Optional[int]) -> int:
    bound = dimension(g, n)
    return bound if max_edges is None else min(bound, max_edges)


def _from_record(record: dict, g: int, n: int) -> Stratum:
    iso = GraphIsoClass(record['encoding'].encode('utf-8'))
    return Stratum(iso, graph_from_canonical(iso), g, n)


def enumerate_stable_graphs(g: int, n: int, max_edges: Optional[int] = None,
                            workers: int = 1, cache: Optional[CacheManager] = None) -> List[Stratum]:
    """All isomorphism classes of connected stable graphs of type (g, n)

    Ordered by edge count, then canonical encoding.  Representatives are
    rebuilt from the canonical encoding, so they do not depend on the
    order in which workers reach a class.
    """
    require_stable(g, n)
    bound = _edge_bound(g, n, max_edges)
    if cache is None:
        records = _strata_records(g, n, bound, workers)
    else:
        records = cache.get_or_set(cache.generate_key('strata', g, n, bound),
                                   _strata_records, g, n, bound, workers)
    strata = [_from_record(r, g, n) for r in records]
    logger.info(f"Enumerated {len(strata)} strata of type ({g}, {n}) up to {bound} edges")
    return strata


def _bruteforce_candidates(g: int, n: int, k: int, V: int) -> Iterator[StableGraph]:
    """Every connected stable graph with k edges on V labelled vertices"""
    total = g - k - 1 + V
    if total < 0:
        return
    pairs = list(combinations_with_replacement(range(V), 2))
    for genera in product(range(total + 1), repeat=V):
        if sum(genera) != total:
            continue
        for leg_places in product(range(V), repeat=n):
            legs = {label: v for label, v in enumerate(leg_places, start=1)}
            for edges in combinations_with_replacement(pairs, k):
                graph = StableGraph.build(genera, edges, legs)
                if validate(graph, require_connected=True).ok:
                    yield graph


def enumerate_stable_graphs_bruteforce(g: int, n: int, max_edges: Optional[int] = None) -> List[StableGraph]:
    """Reference enumeration deduplicated by exhaustive isomorphism tests"""
    require_stable(g, n)
    reps: List[StableGraph] = []
    for k in range(_edge_bound(g, n, max_edges) + 1):
        for V in range(1, k + 2):
            for graph in _bruteforce_candidates(g, n, k, V):
                if not any(rep.vertex_count == V and rep.edge_count == k
                           and is_isomorphic_exhaustive(rep, graph) for rep in reps):
                    reps.append(graph)
    return reps


# -- elementary boundary components ---------------------------------------------

def enumerate_elementary(g: int, n: int) -> List[BoundaryComponent]:
    """Isomorphism classes of one-edge stable graphs, as boundary components

    (h, P) and (g - h, P^c) name the same component; the representative
    has h <= g/2, and when 2h = g the lexicographically smaller sorted P.
    """
    require_stable(g, n)
    result: List[BoundaryComponent] = []
    if g >= 1:
        result.append(BoundaryComponent.irr())
    markings = list(range(1, n + 1))
    for h in range(g // 2 + 1):
        for size in range(n + 1):
            for P in combinations(markings, size):
                comp = tuple(i for i in markings if i not in P)
                if not (_side_stable(h, len(P)) and _side_stable(g - h, len(comp))):
                    continue
                # (h, P) ~ (g - h, P^c): at (2, 1) this leaves irr and sep:1 only
                if 2 * h == g and comp < P:
                    continue
                result.append(BoundaryComponent.sep(h, P))
    return sorted(result)


def _side_stable(h: int, markings: int) -> bool:
    """Stability of one side of a separating node, counting the node"""
    return 2 * h - 2 + markings + 1 > 0


def elementary_graph(alpha: BoundaryComponent, g: int, n: int) -> StableGraph:
    """The one-edge stable graph of a boundary component"""
    if alpha.is_irr:
        return StableGraph.build([g - 1], [(0, 0)], {i: 0 for i in range(1, n + 1)})
    legs = {i: (0 if i in alpha.P else 1) for i in range(1, n + 1)}
    return StableGraph.build([alpha.h, g - alpha.h], [(0, 1)], legs)


def is_self_intersecting(alpha: BoundaryComponent, g: int, n: int) -> bool:
    """Whether the divisor of alpha has a nontrivial self-intersection

    irr always does; a separating (h, P) does exactly when P is empty and
    a stable two-node degeneration with two genus-h ends exists.
    """
    if alpha.is_irr:
        return g >= 1
    if alpha.P or alpha.h < 1:
        return False
    return 2 * alpha.h < g or (2 * alpha.h == g and n >= 1)


@dataclass(frozen=True)
class ElementaryInfo:
    """Boundary component metadata: aut order and self-intersection"""
    component: BoundaryComponent
    graph: StableGraph
    aut_order: int
    self_intersecting: bool

    @property
    def structure_group(self) -> str:
        return 'T(2)' if self.aut_order == 1 else 'T(2)⋊Z/2'


def elementary_info(g: int, n: int) -> List[ElementaryInfo]:
    infos = []
    for alpha in enumerate_elementary(g, n):
        graph = elementary_graph(alpha, g, n)
        infos.append(ElementaryInfo(alpha, graph, automorphisms(graph).order,
                                    is_self_intersecting(alpha, g, n)))
    return infos
