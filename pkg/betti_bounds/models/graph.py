"""
Stable Graph Models

A stable graph is stored as half-edge data: an involution ``sigma`` on
half-edge indices whose fixed points are the legs, a map ``tau`` from
half-edges to vertices, and per-vertex genus/pointing data.
"""

import hashlib
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..errors import GraphError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class VertexData:
    """Genus and pointing data of one vertex"""
    genus: int
    pointed: bool = False
    decoration: Optional[int] = None

    def invariant(self) -> Tuple[int, int, int]:
        """Sortable key; decorations compare by equality only"""
        return (self.genus, int(self.pointed), -1 if self.decoration is None else self.decoration)


@dataclass(frozen=True)
class StableGraph:
    """Genus-labeled graph with half-edge involution and legs"""
    vertices: Tuple[VertexData, ...]
    sigma: Tuple[int, ...]
    tau: Tuple[int, ...]
    leg_labels: Tuple[Tuple[int, Optional[int]], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        object.__setattr__(self, 'sigma', tuple(int(s) for s in self.sigma))
        object.__setattr__(self, 'tau', tuple(int(t) for t in self.tau))
        labels = self.leg_labels
        if isinstance(labels, Mapping):
            labels = labels.items()
        object.__setattr__(self, 'leg_labels', tuple(sorted((int(h), lab) for h, lab in labels)))
        if len(self.sigma) != len(self.tau):
            raise GraphError("sigma and tau must have one entry per half-edge")

    # -- constructors -------------------------------------------------

    @classmethod
    def build(cls,
              genera: Sequence[int],
              edges: Iterable[Edge] = (),
              legs: Optional[Mapping[int, int]] = None,
              unlabeled_legs: Iterable[int] = (),
              pointed: Optional[Mapping[int, int]] = None) -> 'StableGraph':
        """Assemble a graph from vertex genera, vertex-pair edges and legs

        ``legs`` maps a marking label to its vertex, ``pointed`` maps a
        vertex to its decoration.  Half-edges are numbered edge by edge,
        then labeled legs by label, then unlabeled legs.
        """
        pointed = dict(pointed or {})
        vertices = tuple(
            VertexData(g, v in pointed, pointed.get(v)) for v, g in enumerate(genera)
        )
        sigma: List[int] = []
        tau: List[int] = []
        for u, v in edges:
            h = len(sigma)
            sigma.extend([h + 1, h])
            tau.extend([u, v])
        leg_labels: Dict[int, Optional[int]] = {}
        for label, v in sorted((legs or {}).items()):
            h = len(sigma)
            sigma.append(h)
            tau.append(v)
            leg_labels[h] = label
        for v in unlabeled_legs:
            h = len(sigma)
            sigma.append(h)
            tau.append(v)
            leg_labels[h] = None
        return cls(vertices, tuple(sigma), tuple(tau), leg_labels)

    # -- basic queries ------------------------------------------------

    @property
    def half_edge_count(self) -> int:
        return len(self.sigma)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def legs(self) -> Dict[int, Optional[int]]:
        """Leg half-edge -> label (None for unlabeled legs)"""
        return dict(self.leg_labels)

    def is_leg(self, h: int) -> bool:
        return self.sigma[h] == h

    def edges(self) -> List[Edge]:
        """Edges as (h, sigma(h)) with h < sigma(h)"""
        return [(h, s) for h, s in enumerate(self.sigma) if h < s]

    @property
    def edge_count(self) -> int:
        return sum(1 for h, s in enumerate(self.sigma) if h < s)

    def half_edges_at(self, v: int) -> List[int]:
        return [h for h, t in enumerate(self.tau) if t == v]

    def valence(self, v: int) -> int:
        return sum(1 for t in self.tau if t == v)

    def labeled_legs_at(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted(lab for h, lab in self.leg_labels if self.tau[h] == v and lab is not None))

    def unlabeled_legs_at(self, v: int) -> int:
        return sum(1 for h, lab in self.leg_labels if self.tau[h] == v and lab is None)

    def loops_at(self, v: int) -> int:
        return sum(1 for h, s in self.edges() if self.tau[h] == v and self.tau[s] == v)

    def marking_count(self) -> int:
        return sum(1 for _, lab in self.leg_labels if lab is not None)

    def canonical_edge(self, h: int) -> Edge:
        """Name the edge containing half-edge h; rejects legs"""
        if not 0 <= h < self.half_edge_count:
            raise GraphError(f"Half-edge {h} does not exist", {'half_edge': h})
        s = self.sigma[h]
        if s == h:
            raise GraphError(f"Half-edge {h} is a leg, not part of an edge", {'half_edge': h})
        return (min(h, s), max(h, s))

    def neighbours(self, v: int) -> List[int]:
        """Adjacent vertices with multiplicity (loops listed twice)"""
        return [self.tau[self.sigma[h]] for h in self.half_edges_at(v) if self.sigma[h] != h]

    def components(self) -> List[List[int]]:
        """Vertex sets of connected components, each sorted, ordered by least vertex"""
        seen = set()
        result = []
        for start in range(self.vertex_count):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.neighbours(v):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            result.append(sorted(comp))
        return result

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def subgraph(self, vertex_set: Iterable[int]) -> 'StableGraph':
        """Induced graph on a union of components"""
        keep = sorted(set(vertex_set))
        vmap = {v: i for i, v in enumerate(keep)}
        hs = [h for h in range(self.half_edge_count) if self.tau[h] in vmap]
        hmap = {h: i for i, h in enumerate(hs)}
        if any(self.sigma[h] not in hmap for h in hs):
            raise GraphError("Vertex set is not a union of components")
        labels = {hmap[h]: lab for h, lab in self.leg_labels if h in hmap}
        return StableGraph(
            tuple(self.vertices[v] for v in keep),
            tuple(hmap[self.sigma[h]] for h in hs),
            tuple(vmap[self.tau[h]] for h in hs),
            labels,
        )


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of graph validation; never raised"""
    ok: bool
    rule: Optional[str] = None
    vertex: Optional[int] = None
    message: str = 'valid'

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {'ok': self.ok, 'rule': self.rule, 'vertex': self.vertex, 'message': self.message}


@dataclass(frozen=True)
class GraphIsoClass:
    """Canonical encoding of an isomorphism class"""
    canonical_encoding: bytes

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.canonical_encoding).hexdigest()


@dataclass(frozen=True)
class Automorphism:
    """Half-edge permutation together with the induced vertex permutation"""
    half_edges: Tuple[int, ...]
    vertices: Tuple[int, ...]


@dataclass(frozen=True)
class AutGroup:
    """Automorphism group given by its order and a generating set"""
    order: int
    generators: Tuple[Automorphism, ...] = field(default_factory=tuple)
