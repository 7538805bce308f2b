"""
Test Graph Construction
The stable graph whose stratum carries the Pontrjagin-Thom comparison
for an A-partition: a central vertex of residual genus with loops for
irr and pendant vertices for every separating component.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..errors import ContractViolation, GraphError
from ..graphs.enumeration import elementary_graph
from ..graphs.isomorphism import automorphisms
from ..graphs.operations import validate
from ..models.boundary import APartition, BoundaryComponent, LevelMap
from ..models.graph import StableGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WreathFactor:
    """One factor G_a wr Sigma_{m_a} of the stabiliser"""
    component: BoundaryComponent
    group: str
    multiplicity: int
    elementary_aut_order: int

    @property
    def order_contribution(self) -> int:
        return self.elementary_aut_order ** self.multiplicity * math.factorial(self.multiplicity)


@dataclass(frozen=True)
class ComparisonGraph:
    """Test graph with its ordinary half-edges and wreath decomposition"""
    graph: StableGraph
    partition: APartition
    h0: Tuple[int, ...]
    wreath: Tuple[WreathFactor, ...]

    @property
    def expected_aut_order(self) -> int:
        return math.prod(f.order_contribution for f in self.wreath)


def build_test_graph(g: int, n: int, levels: LevelMap, m: APartition) -> ComparisonGraph:
    """Central vertex of genus r with n legs and m_irr loops, plus m_a
    univalent genus-g_a vertices per separating a, pointed when l(a) = 0
    """
    if m.g != g:
        raise ContractViolation(f"Partition is of genus {m.g}, expected {g}")
    if not m.is_valid:
        raise ContractViolation(f"Not an A-partition of {g}: residual genus {m.r} < 0", {'r': m.r})
    for alpha in m.m:
        if m.count(alpha) and alpha not in levels.ell:
            raise ContractViolation(f"{alpha.label()} is not in A")

    genera: List[int] = [m.r]
    edges: List[Tuple[int, int]] = []
    pointed: Dict[int, int] = {}
    wreath: List[WreathFactor] = []
    for decoration, alpha in enumerate(levels.A):
        count = m.count(alpha)
        if alpha.is_irr:
            edges.extend([(0, 0)] * count)
        else:
            for _ in range(count):
                v = len(genera)
                genera.append(alpha.g_alpha)
                edges.append((0, v))
                if levels.level(alpha) == 0:
                    pointed[v] = decoration
        aut = automorphisms(elementary_graph(alpha, g, n)).order if alpha.is_irr else 1
        wreath.append(WreathFactor(alpha, levels.group(alpha).value, count, aut))

    graph = StableGraph.build(genera, edges, {i: 0 for i in range(1, n + 1)}, pointed=pointed)
    report = validate(graph)
    if not report.ok:
        raise GraphError(f"Test graph is not stable: {report.message}", report.to_dict())
    h0 = tuple(h for h in range(graph.half_edge_count)
               if not graph.is_leg(h) and not graph.vertices[graph.tau[h]].pointed)
    logger.debug(f"Built test graph for g={g}, n={n}, m={m.to_dict()} with {graph.vertex_count} vertices")
    return ComparisonGraph(graph, m, h0, tuple(wreath))
