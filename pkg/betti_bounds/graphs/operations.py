"""
Stable Graph Operations
Validation, genus, and the edge operations contract / cut / delete
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Set, Tuple

from ..errors import GraphError
from ..models.graph import Edge, StableGraph, ValidationReport, VertexData

logger = logging.getLogger(__name__)


def validate(graph: StableGraph, require_connected: bool = True) -> ValidationReport:
    """Check every stable-graph invariant and report the first violation"""
    H = graph.half_edge_count
    V = graph.vertex_count
    if V == 0:
        return ValidationReport(False, 'structure', None, "graph has no vertices")
    for h in range(H):
        s, t = graph.sigma[h], graph.tau[h]
        if not 0 <= s < H:
            return ValidationReport(False, 'structure', None, f"sigma({h}) = {s} is not a half-edge")
        if not 0 <= t < V:
            return ValidationReport(False, 'structure', None, f"tau({h}) = {t} is not a vertex")
    for h in range(H):
        if graph.sigma[graph.sigma[h]] != h:
            return ValidationReport(False, 'involution', graph.tau[h], f"sigma is not an involution at half-edge {h}")

    fixed_points = {h for h in range(H) if graph.sigma[h] == h}
    labeled = set(graph.legs)
    if labeled != fixed_points:
        stray = sorted(labeled ^ fixed_points)
        return ValidationReport(False, 'legs', None, f"leg data must cover exactly the fixed points of sigma; mismatch at {stray}")
    seen_labels: Set[int] = set()
    for h, label in graph.leg_labels:
        if label is None:
            continue
        if not isinstance(label, int) or label < 1:
            return ValidationReport(False, 'legs', graph.tau[h], f"leg label {label!r} is not a positive integer")
        if label in seen_labels:
            return ValidationReport(False, 'legs', graph.tau[h], f"leg label {label} is used twice")
        seen_labels.add(label)

    for v, data in enumerate(graph.vertices):
        valence = graph.valence(v)
        if data.genus < 0:
            return ValidationReport(False, 'genus', v, f"vertex {v} has negative genus")
        if data.pointed != (data.decoration is not None):
            return ValidationReport(False, 'decoration', v, f"vertex {v}: decoration must be present exactly when pointed")
        if data.pointed and valence != 1:
            return ValidationReport(False, 'pointed', v, f"pointed vertex {v} has valence {valence}, must be univalent")
        if valence == 0 and data.genus < 2:
            return ValidationReport(False, 'stability', v, f"isolated vertex {v} has genus {data.genus} < 2")
        if valence < 3 and data.genus < 1:
            return ValidationReport(False, 'stability', v, f"vertex {v} of valence {valence} has genus 0")

    if require_connected and not graph.is_connected():
        return ValidationReport(False, 'connected', None, "graph is disconnected")
    return ValidationReport(True)


def genus(graph: StableGraph) -> int:
    """Arithmetic genus sum_v (g(v) - 1) + |E| + 1 of a connected graph"""
    if not graph.is_connected():
        raise GraphError("genus is only defined for connected graphs",
                         {'components': len(graph.components())})
    return sum(v.genus - 1 for v in graph.vertices) + graph.edge_count + 1


def dimension(g: int, n: int) -> int:
    """Complex dimension 3g - 3 + n, the maximal number of edges of a stratum"""
    return 3 * g - 3 + n


class _Workspace:
    """Mutable copy of a graph keyed by the original indices"""

    def __init__(self, graph: StableGraph):
        self.vertices: Dict[int, VertexData] = dict(enumerate(graph.vertices))
        self.sigma: Dict[int, int] = dict(enumerate(graph.sigma))
        self.tau: Dict[int, int] = dict(enumerate(graph.tau))
        self.labels: Dict[int, Optional[int]] = graph.legs

    def half_edges_at(self, v: int) -> List[int]:
        return sorted(h for h, t in self.tau.items() if t == v)

    def drop_half_edge(self, h: int) -> None:
        del self.sigma[h]
        del self.tau[h]
        self.labels.pop(h, None)

    def to_graph(self) -> StableGraph:
        vmap = {v: i for i, v in enumerate(sorted(self.vertices))}
        hmap = {h: i for i, h in enumerate(sorted(self.sigma))}
        return StableGraph(
            tuple(self.vertices[v] for v in sorted(self.vertices)),
            tuple(hmap[self.sigma[h]] for h in sorted(self.sigma)),
            tuple(vmap[self.tau[h]] for h in sorted(self.sigma)),
            {hmap[h]: lab for h, lab in self.labels.items()},
        )


def _edge_set(graph: StableGraph, K: Iterable[int]) -> List[Edge]:
    """Normalise half-edge indices naming edges; legs are rejected"""
    return sorted({graph.canonical_edge(int(h)) for h in K})


def contract_edges(graph: StableGraph, K: Iterable[int]) -> StableGraph:
    """Gamma/K: contract each edge of K, adding genera (a loop adds one)"""
    edges = _edge_set(graph, K)
    work = _Workspace(graph)
    for a, b in edges:
        u, v = work.tau[a], work.tau[b]
        if u == v:
            old = work.vertices[u]
            work.vertices[u] = VertexData(old.genus + 1, old.pointed, old.decoration)
        else:
            # the merged vertex is an ordinary vertex
            merged = VertexData(work.vertices[u].genus + work.vertices[v].genus)
            keep, gone = min(u, v), max(u, v)
            work.vertices[keep] = merged
            del work.vertices[gone]
            for h, t in list(work.tau.items()):
                if t == gone:
                    work.tau[h] = keep
        work.drop_half_edge(a)
        work.drop_half_edge(b)
    logger.debug(f"Contracted {len(edges)} edge(s)")
    return work.to_graph()


@dataclass(frozen=True)
class ComponentInfo:
    """One connected component of a possibly disconnected result"""
    vertices: Tuple[int, ...]
    report: ValidationReport

    @property
    def stable(self) -> bool:
        return self.report.ok


@dataclass(frozen=True)
class SplitResult:
    """Graph produced by cut or delete, with per-component flags"""
    graph: StableGraph
    components: Tuple[ComponentInfo, ...]

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1

    @property
    def unstable_components(self) -> Tuple[ComponentInfo, ...]:
        return tuple(c for c in self.components if not c.stable)


def component_reports(graph: StableGraph) -> Tuple[ComponentInfo, ...]:
    infos = []
    for comp in graph.components():
        report = validate(graph.subgraph(comp), require_connected=True)
        infos.append(ComponentInfo(tuple(comp), report))
    return tuple(infos)


def cut_edges(graph: StableGraph, K: Iterable[int]) -> SplitResult:
    """Gamma|K: each edge of K becomes two unlabeled legs"""
    edges = _edge_set(graph, K)
    work = _Workspace(graph)
    for a, b in edges:
        work.sigma[a] = a
        work.sigma[b] = b
        work.labels[a] = None
        work.labels[b] = None
    result = work.to_graph()
    return SplitResult(result, component_reports(result))


def _smooth_bivalent(work: _Workspace) -> int:
    """Replace bivalent genus-0 ordinary vertices by a single edge or leg"""
    smoothed = 0
    changed = True
    while changed:
        changed = False
        for v in sorted(work.vertices):
            data = work.vertices[v]
            if data.genus != 0 or data.pointed:
                continue
            hs = work.half_edges_at(v)
            if len(hs) != 2:
                continue
            x, y = hs
            if work.sigma[x] == y:
                continue  # bare loop, kept and flagged
            x_leg, y_leg = work.sigma[x] == x, work.sigma[y] == y
            if x_leg and y_leg:
                continue  # nothing left to attach to, kept and flagged
            if x_leg or y_leg:
                leg, edge = (x, y) if x_leg else (y, x)
                far = work.sigma[edge]
                work.sigma[far] = far
                work.labels[far] = work.labels[leg]
            else:
                xf, yf = work.sigma[x], work.sigma[y]
                work.sigma[xf] = yf
                work.sigma[yf] = xf
            work.drop_half_edge(x)
            work.drop_half_edge(y)
            del work.vertices[v]
            smoothed += 1
            changed = True
    return smoothed


def delete_edges(graph: StableGraph, K: Iterable[int]) -> SplitResult:
    """Gamma minus K: remove the edges of K, then smooth bivalent genus-0 vertices

    Components left unstable are kept and flagged, never dropped.
    """
    edges = _edge_set(graph, K)
    work = _Workspace(graph)
    for a, b in edges:
        work.drop_half_edge(a)
        work.drop_half_edge(b)
    smoothed = _smooth_bivalent(work)
    result = work.to_graph()
    split = SplitResult(result, component_reports(result))
    if split.unstable_components:
        logger.info(f"delete_edges left {len(split.unstable_components)} unstable component(s)")
    logger.debug(f"Deleted {len(edges)} edge(s), smoothed {smoothed} vertex(es)")
    return split
