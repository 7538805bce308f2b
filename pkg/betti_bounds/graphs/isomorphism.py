"""
Stable Graph Isomorphism
Canonical forms, isomorphism tests and automorphism groups.

An isomorphism is a pair of bijections on half-edges and vertices that
commutes with sigma and tau, preserves genus, pointing, decorations and
marking labels.  Unlabeled legs are interchangeable.
"""

import json
import logging
import math
from collections import Counter, defaultdict
from typing import Dict, List, Optional, Tuple

from ..models.graph import Automorphism, AutGroup, GraphIsoClass, StableGraph

logger = logging.getLogger(__name__)

IsoMap = Tuple[Tuple[int, ...], Tuple[int, ...]]


def vertex_invariant(graph: StableGraph, v: int) -> tuple:
    data = graph.vertices[v]
    return (
        data.invariant(),
        graph.valence(v),
        graph.labeled_legs_at(v),
        graph.unlabeled_legs_at(v),
        graph.loops_at(v),
    )


# -- colour refinement ------------------------------------------------------

def _refine(graph: StableGraph, cells: List[List[int]]) -> List[List[int]]:
    """Split cells by the multiset of neighbour cells until stable"""
    while True:
        cell_of = {v: i for i, cell in enumerate(cells) for v in cell}
        refined: List[List[int]] = []
        for cell in cells:
            groups: Dict[tuple, List[int]] = defaultdict(list)
            for v in cell:
                groups[tuple(sorted(cell_of[w] for w in graph.neighbours(v)))].append(v)
            for key in sorted(groups):
                refined.append(groups[key])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _initial_cells(graph: StableGraph) -> List[List[int]]:
    groups: Dict[tuple, List[int]] = defaultdict(list)
    for v in range(graph.vertex_count):
        groups[vertex_invariant(graph, v)].append(v)
    return [groups[key] for key in sorted(groups)]


def _encode(graph: StableGraph, order: List[int]) -> bytes:
    pos = {v: i for i, v in enumerate(order)}
    vertices = []
    for v in order:
        data = graph.vertices[v]
        vertices.append([data.genus, data.pointed, data.decoration,
                         list(graph.labeled_legs_at(v)), graph.unlabeled_legs_at(v)])
    edges = sorted(sorted((pos[graph.tau[a]], pos[graph.tau[b]])) for a, b in graph.edges())
    return json.dumps([vertices, edges], separators=(',', ':')).encode('utf-8')


def _interchangeable(graph: StableGraph, cell: List[int]) -> bool:
    """Pairwise non-adjacent vertices with one common neighbourhood

    Any transposition of such vertices is an automorphism, so one branch
    of the search covers them all.
    """
    members = set(cell)
    shapes = set()
    for v in cell:
        around = [w for w in graph.neighbours(v) if w != v]
        if members.intersection(around):
            return False
        shapes.add(tuple(sorted(around)))
    return len(shapes) == 1


def canonical_form(graph: StableGraph) -> GraphIsoClass:
    """Encoding equal for two graphs exactly when they are isomorphic

    Individualization-refinement over vertex orderings, keeping the
    least encoding.
    """
    best: List[Optional[bytes]] = [None]

    def search(cells: List[List[int]]) -> None:
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            code = _encode(graph, [cell[0] for cell in cells])
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        cell = cells[target]
        branches = cell[:1] if _interchangeable(graph, cell) else cell
        for v in branches:
            rest = [w for w in cell if w != v]
            search(_refine(graph, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(_refine(graph, _initial_cells(graph)))
    return GraphIsoClass(best[0])


def graph_from_canonical(iso: GraphIsoClass) -> StableGraph:
    """Rebuild the graph whose vertices are in canonical order"""
    vertices, edges = json.loads(iso.canonical_encoding.decode('utf-8'))
    legs, unlabeled, pointed = {}, [], {}
    for v, (_, is_pointed, decoration, labels, loose) in enumerate(vertices):
        legs.update({label: v for label in labels})
        unlabeled.extend([v] * loose)
        if is_pointed:
            pointed[v] = decoration
    return StableGraph.build([data[0] for data in vertices], [tuple(e) for e in edges],
                             legs, unlabeled, pointed)


# -- backtracking isomorphism search -------------------------------------------

class _Matcher:
    """Half-edge backtracking search for isomorphisms a -> b"""

    def __init__(self, a: StableGraph, b: StableGraph):
        self.a, self.b = a, b
        self.color_a = [self._color(a, v) for v in range(a.vertex_count)]
        self.color_b = [self._color(b, v) for v in range(b.vertex_count)]
        self.type_a = [self._type(a, self.color_a, h) for h in range(a.half_edge_count)]
        self.type_b = [self._type(b, self.color_b, h) for h in range(b.half_edge_count)]
        self.order = self._search_order()
        self.hmap: Dict[int, int] = {}
        self.hinv: Dict[int, int] = {}
        self.vmap: Dict[int, int] = {}
        self.vinv: Dict[int, int] = {}

    @staticmethod
    def _color(graph: StableGraph, v: int) -> tuple:
        own = vertex_invariant(graph, v)
        around = tuple(sorted(vertex_invariant(graph, w) for w in graph.neighbours(v)))
        return (own, around)

    @staticmethod
    def _type(graph: StableGraph, colors: List[tuple], h: int) -> tuple:
        s = graph.sigma[h]
        if s == h:
            return (colors[graph.tau[h]], 'leg', graph.legs[h])
        loop = graph.tau[s] == graph.tau[h]
        return (colors[graph.tau[h]], 'edge', loop, colors[graph.tau[s]])

    def _search_order(self) -> List[int]:
        """Half-edges in breadth-first vertex order"""
        a = self.a
        order, seen = [], set()
        for comp in a.components():
            queue = [comp[0]]
            seen.add(comp[0])
            while queue:
                v = queue.pop(0)
                for h in a.half_edges_at(v):
                    order.append(h)
                    w = a.tau[a.sigma[h]]
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
        return order

    def compatible(self) -> bool:
        return (self.a.half_edge_count == self.b.half_edge_count
                and self.a.vertex_count == self.b.vertex_count
                and Counter(self.color_a) == Counter(self.color_b)
                and Counter(self.type_a) == Counter(self.type_b))

    def _bind_vertex(self, v: int, w: int, trail: list) -> bool:
        if v in self.vmap:
            return self.vmap[v] == w
        if w in self.vinv or self.color_a[v] != self.color_b[w]:
            return False
        self.vmap[v] = w
        self.vinv[w] = v
        trail.append(('v', v, w))
        return True

    def _bind_half_edge(self, h: int, k: int, trail: list) -> bool:
        if h in self.hmap:
            return self.hmap[h] == k
        if k in self.hinv or self.type_a[h] != self.type_b[k]:
            return False
        if not self._bind_vertex(self.a.tau[h], self.b.tau[k], trail):
            return False
        self.hmap[h] = k
        self.hinv[k] = h
        trail.append(('h', h, k))
        return True

    def assign(self, h: int, k: int, trail: list) -> bool:
        """Map h to k and sigma(h) to sigma(k)"""
        if not self._bind_half_edge(h, k, trail):
            return False
        s, t = self.a.sigma[h], self.b.sigma[k]
        if (s == h) != (t == k):
            return False
        return s == h or self._bind_half_edge(s, t, trail)

    def undo(self, trail: list) -> None:
        for kind, x, y in reversed(trail):
            if kind == 'h':
                del self.hmap[x]
                del self.hinv[y]
            else:
                del self.vmap[x]
                del self.vinv[y]
        trail.clear()

    def _candidates(self, h: int) -> List[int]:
        v = self.a.tau[h]
        if v in self.vmap:
            pool = self.b.half_edges_at(self.vmap[v])
        else:
            pool = range(self.b.half_edge_count)
        return [k for k in pool if k not in self.hinv and self.type_b[k] == self.type_a[h]]

    def _extend(self, index: int) -> bool:
        while index < len(self.order) and self.order[index] in self.hmap:
            index += 1
        if index == len(self.order):
            return True
        h = self.order[index]
        for k in self._candidates(h):
            trail: list = []
            if self.assign(h, k, trail) and self._extend(index + 1):
                return True
            self.undo(trail)
        return False

    def _match_isolated(self) -> bool:
        free_a = [v for v in range(self.a.vertex_count) if v not in self.vmap]
        free_b = [w for w in range(self.b.vertex_count) if w not in self.vinv]
        for v in free_a:
            w = next((w for w in free_b if w not in self.vinv
                      and self.color_b[w] == self.color_a[v]), None)
            if w is None:
                return False
            self.vmap[v] = w
            self.vinv[w] = v
        return True

    def find(self, fixed: Optional[Dict[int, int]] = None) -> Optional[IsoMap]:
        """An isomorphism extending ``fixed`` (half-edge -> half-edge), if any"""
        self.hmap, self.hinv, self.vmap, self.vinv = {}, {}, {}, {}
        if not self.compatible():
            return None
        trail: list = []
        for h, k in (fixed or {}).items():
            if not self.assign(h, k, trail):
                return None
        if not self._extend(0) or not self._match_isolated():
            return None
        hs = tuple(self.hmap[h] for h in range(self.a.half_edge_count))
        vs = tuple(self.vmap[v] for v in range(self.a.vertex_count))
        return hs, vs


def find_isomorphism(a: StableGraph, b: StableGraph) -> Optional[Automorphism]:
    found = _Matcher(a, b).find()
    return Automorphism(*found) if found else None


def is_isomorphic(a: StableGraph, b: StableGraph) -> bool:
    return _Matcher(a, b).find() is not None


def automorphisms(graph: StableGraph) -> AutGroup:
    """Order and generators of Aut(graph) via a stabilizer chain on half-edges"""
    matcher = _Matcher(graph, graph)
    fixed: Dict[int, int] = {}
    order = 1
    generators: List[Automorphism] = []
    for h in matcher.order:
        if h in fixed:
            continue
        orbit = 1
        for k in range(graph.half_edge_count):
            if k == h or matcher.type_a[k] != matcher.type_a[h]:
                continue
            found = matcher.find({**fixed, h: k})
            if found:
                orbit += 1
                generators.append(Automorphism(*found))
        order *= orbit
        fixed[h] = h
        fixed[graph.sigma[h]] = graph.sigma[h]

    # isolated vertices with equal attributes permute freely
    isolated: Dict[tuple, List[int]] = defaultdict(list)
    for v in range(graph.vertex_count):
        if graph.valence(v) == 0:
            isolated[vertex_invariant(graph, v)].append(v)
    identity_h = tuple(range(graph.half_edge_count))
    for group in isolated.values():
        order *= math.factorial(len(group))
        for u, w in zip(group, group[1:]):
            vs = list(range(graph.vertex_count))
            vs[u], vs[w] = w, u
            generators.append(Automorphism(identity_h, tuple(vs)))
    logger.debug(f"Automorphism group of order {order} with {len(generators)} generator(s)")
    return AutGroup(order, tuple(generators))


def is_automorphism(graph: StableGraph, aut: Automorphism) -> bool:
    """Check that a half-edge/vertex permutation pair is an automorphism"""
    hs, vs = aut.half_edges, aut.vertices
    if sorted(hs) != list(range(graph.half_edge_count)) or sorted(vs) != list(range(graph.vertex_count)):
        return False
    legs = graph.legs
    for h in range(graph.half_edge_count):
        if hs[graph.sigma[h]] != graph.sigma[hs[h]] or vs[graph.tau[h]] != graph.tau[hs[h]]:
            return False
        if h in legs and legs[h] != legs[hs[h]]:
            return False
    return all(graph.vertices[v] == graph.vertices[vs[v]] for v in range(graph.vertex_count))


# -- exhaustive oracles ------------------------------------------------------

def _bijections(a: StableGraph, b: StableGraph):
    """Every half-edge bijection a -> b commuting with sigma and tau"""
    if a.half_edge_count != b.half_edge_count or a.vertex_count != b.vertex_count:
        return
    H = a.half_edge_count
    legs_a, legs_b = a.legs, b.legs
    image: List[Optional[int]] = [None] * H
    used = [False] * H
    vmap: Dict[int, int] = {}

    def consistent(h: int, k: int) -> bool:
        if (h in legs_a) != (k in legs_b):
            return False
        if h in legs_a and legs_a[h] != legs_b[k]:
            return False
        v, w = a.tau[h], b.tau[k]
        if v in vmap and vmap[v] != w:
            return False
        if v not in vmap and (w in vmap.values() or a.vertices[v] != b.vertices[w]):
            return False
        s = a.sigma[h]
        if s < h and image[s] is not None and b.sigma[k] != image[s]:
            return False
        return True

    def walk(h: int):
        if h == H:
            yield tuple(image)
            return
        for k in range(H):
            if used[k] or not consistent(h, k):
                continue
            v = a.tau[h]
            added = v not in vmap
            vmap[v] = b.tau[k]
            image[h], used[k] = k, True
            yield from walk(h + 1)
            image[h], used[k] = None, False
            if added:
                del vmap[v]

    yield from walk(0)


def _isolated_profile(graph: StableGraph) -> Counter:
    return Counter(graph.vertices[v] for v in range(graph.vertex_count) if graph.valence(v) == 0)


def is_isomorphic_exhaustive(a: StableGraph, b: StableGraph) -> bool:
    """Reference test by search over all half-edge bijections"""
    if _isolated_profile(a) != _isolated_profile(b):
        return False
    return next(_bijections(a, b), None) is not None


def count_automorphisms_exhaustive(graph: StableGraph) -> int:
    """Reference |Aut| by counting all half-edge bijections"""
    count = sum(1 for _ in _bijections(graph, graph))
    for group_size in _isolated_profile(graph).values():
        count *= math.factorial(group_size)
    return count
