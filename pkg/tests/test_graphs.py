"""
Stable Graph Tests
Validation, genus, edge operations, isomorphism and automorphisms
"""

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from betti_bounds.errors import GraphError
from betti_bounds.graphs import (automorphisms, canonical_form, contract_edges,
                                 count_automorphisms_exhaustive, cut_edges, delete_edges,
                                 enumerate_stable_graphs, find_isomorphism, genus, is_automorphism,
                                 is_isomorphic, is_isomorphic_exhaustive, validate)
from betti_bounds.models.graph import StableGraph, VertexData

from .conftest import relabel


@st.composite
def stable_graphs(draw):
    """Connected graphs with a spanning path, kept when stable"""
    V = draw(st.integers(min_value=1, max_value=4))
    genera = draw(st.lists(st.integers(min_value=0, max_value=2), min_size=V, max_size=V))
    edges = [(i, i + 1) for i in range(V - 1)]
    extra = draw(st.lists(st.tuples(st.integers(0, V - 1), st.integers(0, V - 1)), max_size=3))
    n = draw(st.integers(min_value=0, max_value=3))
    places = draw(st.lists(st.integers(0, V - 1), min_size=n, max_size=n))
    graph = StableGraph.build(genera, edges + extra, {i + 1: v for i, v in enumerate(places)})
    assume(validate(graph).ok)
    return graph


class TestValidate:
    """Test stable-graph validation"""

    def test_valid_graph(self, banana_graph):
        """Test the banana graph is valid"""
        assert validate(banana_graph).ok

    def test_unstable_vertex(self):
        """Test a genus-0 vertex needs valence three"""
        report = validate(StableGraph.build([0], legs={1: 0, 2: 0}))
        assert not report.ok
        assert report.rule == 'stability'
        assert report.vertex == 0

    def test_isolated_genus_one(self):
        """Test a lone genus-1 vertex is unstable"""
        report = validate(StableGraph.build([1]))
        assert report.rule == 'stability'

    def test_sigma_not_involution(self):
        """Test sigma must be an involution"""
        graph = StableGraph((VertexData(2),), (1, 2, 0), (0, 0, 0), {})
        assert validate(graph).rule == 'involution'

    def test_leg_data_must_match_fixed_points(self):
        """Test every fixed point of sigma needs leg data"""
        graph = StableGraph((VertexData(1),), (0,), (0,), {})
        assert validate(graph).rule == 'legs'

    def test_duplicate_labels(self):
        """Test leg labels are distinct"""
        graph = StableGraph((VertexData(1),), (0, 1), (0, 0), {0: 1, 1: 1})
        assert validate(graph).rule == 'legs'

    def test_pointed_vertex_is_univalent(self):
        """Test a pointed vertex has valence one"""
        graph = StableGraph.build([2, 1], [(0, 1), (0, 1)], pointed={1: 7})
        assert validate(graph).rule == 'pointed'

    def test_decoration_without_pointing(self):
        """Test only pointed vertices carry decorations"""
        graph = StableGraph((VertexData(2, False, 3),), (), (), {})
        assert validate(graph).rule == 'decoration'

    def test_disconnected(self):
        """Test connectedness is optional"""
        graph = StableGraph.build([2, 2])
        assert validate(graph).rule == 'connected'
        assert validate(graph, require_connected=False).ok


class TestGenus:
    """Test the arithmetic genus"""

    def test_banana(self, banana_graph):
        """Test the banana graph has genus 2"""
        assert genus(banana_graph) == 2

    def test_loops_and_legs(self):
        """Test a loop adds one to the genus"""
        assert genus(StableGraph.build([0], [(0, 0)], {1: 0, 2: 0})) == 1

    def test_two_vertex_bridge(self):
        """Test a bridge adds nothing to the genus"""
        assert genus(StableGraph.build([1, 2], [(0, 1)])) == 3

    def test_irr_graph(self):
        """Test the irr graph at genus 5"""
        assert genus(StableGraph.build([4], [(0, 0)], {1: 0, 2: 0})) == 5

    def test_disconnected_raises(self):
        """Test genus needs a connected graph"""
        with pytest.raises(GraphError):
            genus(StableGraph.build([2, 2]))


class TestEdgeOperations:
    """Test contract, cut and delete"""

    def test_contract_loop_adds_genus(self, two_loop_graph):
        """Test contracting a loop raises the vertex genus"""
        result = contract_edges(two_loop_graph, [0])
        assert result.vertices[0].genus == 1
        assert result.edge_count == 1

    def test_contract_by_either_half_edge(self, banana_graph):
        """Test an edge contracts the same from either half-edge"""
        assert contract_edges(banana_graph, [0]) == contract_edges(banana_graph, [1])

    def test_contract_all_edges(self, banana_graph):
        """Test contracting every edge leaves the open stratum"""
        result = contract_edges(banana_graph, [0, 2, 4])
        assert result.vertex_count == 1
        assert result.vertices[0].genus == 2

    def test_contract_leg_rejected(self):
        """Test legs cannot be contracted"""
        graph = StableGraph.build([0], [(0, 0)], {1: 0})
        with pytest.raises(GraphError):
            contract_edges(graph, [2])

    def test_missing_half_edge_rejected(self, banana_graph):
        """Test unknown half-edges are rejected"""
        with pytest.raises(GraphError):
            contract_edges(banana_graph, [17])

    def test_cut_loop(self):
        """Test a cut loop becomes two unlabeled legs"""
        graph = StableGraph.build([1], [(0, 0)], {1: 0})
        split = cut_edges(graph, [0])
        assert split.connected
        assert split.graph.edge_count == 0
        assert split.graph.unlabeled_legs_at(0) == 2
        assert split.graph.labeled_legs_at(0) == (1,)
        assert split.components[0].stable

    def test_cut_bridge_disconnects(self):
        """Test cutting a bridge gives two stable pieces"""
        graph = StableGraph.build([1, 1], [(0, 1)], {1: 0})
        split = cut_edges(graph, [0])
        assert not split.connected
        assert all(info.stable for info in split.components)

    def test_delete_smooths_and_flags(self):
        """Test delete smooths a bivalent genus-0 vertex and flags unstable leftovers"""
        graph = StableGraph.build([1, 0, 1], [(0, 1), (1, 2)], {1: 1})
        split = delete_edges(graph, [2])
        result = split.graph
        assert result.vertex_count == 2
        assert result.labeled_legs_at(0) == (1,)
        assert result.vertices[0].genus == 1
        assert len(split.components) == 2
        assert [info.stable for info in split.components] == [True, False]

    def test_delete_chain_smooths_to_single_edge(self):
        """Test deleting b-d from a-b, b-c, b-d leaves a-c and an isolated unstable d"""
        graph = StableGraph.build([1, 0, 1, 1], [(0, 1), (1, 2), (1, 3)])
        split = delete_edges(graph, [4])
        result = split.graph
        assert result.vertex_count == 3
        assert result.edge_count == 1
        assert [v.genus for v in result.vertices] == [1, 1, 1]
        assert [info.stable for info in split.components] == [True, False]
        assert split.unstable_components[0].report.rule == 'stability'

    def test_delete_loop(self):
        """Test deleting a loop drops its two half-edges"""
        graph = StableGraph.build([2], [(0, 0)], {1: 0})
        result = delete_edges(graph, [1]).graph
        assert result.half_edge_count == graph.half_edge_count - 2
        assert result.vertices[0].genus == 2

    def test_delete_joins_edges(self):
        """Test a bivalent genus-0 vertex between two edges becomes one edge"""
        graph = StableGraph.build([1, 0, 1, 0], [(0, 1), (1, 2), (1, 3), (3, 2)], {1: 3})
        split = delete_edges(graph, [4])
        result = split.graph
        assert result.vertex_count == 2
        assert result.edge_count == 1
        assert result.labeled_legs_at(1) == (1,)
        assert split.connected
        assert not split.unstable_components


class TestIsomorphism:
    """Test canonical forms and isomorphism search"""

    def test_relabelled_copy(self, banana_graph):
        """Test a relabelled copy is isomorphic"""
        copy = relabel(banana_graph, seed=3)
        assert is_isomorphic(banana_graph, copy)
        assert canonical_form(banana_graph) == canonical_form(copy)

    def test_labels_matter(self):
        """Test leg labels are respected"""
        a = StableGraph.build([0, 0], [(0, 1)], {1: 0, 2: 0, 3: 1, 4: 1})
        b = StableGraph.build([0, 0], [(0, 1)], {1: 0, 3: 0, 2: 1, 4: 1})
        assert not is_isomorphic(a, b)
        assert canonical_form(a) != canonical_form(b)

    def test_unlabeled_legs_interchangeable(self):
        """Test unlabeled legs may be permuted"""
        a = StableGraph.build([1], [], unlabeled_legs=[0, 0])
        b = relabel(a, seed=1)
        assert is_isomorphic(a, b)

    def test_loop_count_matters(self):
        """Test a loop is not extra vertex genus"""
        assert not is_isomorphic(StableGraph.build([2], [(0, 0)]), StableGraph.build([3]))

    def test_decorations_matter(self):
        """Test decorations are respected"""
        a = StableGraph.build([2, 1], [(0, 1)], pointed={1: 0})
        b = StableGraph.build([2, 1], [(0, 1)], pointed={1: 1})
        assert not is_isomorphic(a, b)

    def test_find_isomorphism_is_valid_map(self, banana_graph):
        """Test the found map intertwines sigma and tau"""
        copy = relabel(banana_graph, seed=9)
        iso = find_isomorphism(banana_graph, copy)
        for h in range(banana_graph.half_edge_count):
            assert copy.sigma[iso.half_edges[h]] == iso.half_edges[banana_graph.sigma[h]]
            assert copy.tau[iso.half_edges[h]] == iso.vertices[banana_graph.tau[h]]

    @settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
    @given(stable_graphs(), st.integers(min_value=0, max_value=10_000))
    def test_canonical_form_is_invariant(self, graph, seed):
        """Test canonical forms ignore relabelling"""
        assert canonical_form(relabel(graph, seed)) == canonical_form(graph)


class TestAutomorphisms:
    """Test automorphism groups"""

    def test_single_loop(self):
        """Test a loop can be flipped"""
        assert automorphisms(StableGraph.build([2], [(0, 0)])).order == 2

    def test_two_loops(self, two_loop_graph):
        """Test two loops give the wreath product of order 8"""
        assert automorphisms(two_loop_graph).order == 8

    def test_banana(self, banana_graph):
        """Test 3! edge permutations times the vertex swap"""
        assert automorphisms(banana_graph).order == 12

    def test_legs_fixed_pointwise(self):
        """Test labeled legs pin every vertex"""
        graph = StableGraph.build([0, 0], [(0, 1)], {1: 0, 2: 0, 3: 1, 4: 1})
        assert automorphisms(graph).order == 1

    def test_separating_one_sided_legs(self):
        """Test a separating edge with legs on one side is rigid"""
        graph = StableGraph.build([1, 2], [(0, 1)], {1: 0, 2: 0})
        assert automorphisms(graph).order == 1
        assert count_automorphisms_exhaustive(graph) == 1

    def test_isolated_vertices_permute(self):
        """Test equal isolated vertices swap"""
        assert automorphisms(StableGraph.build([2, 2, 3])).order == 2

    def test_generators_generate(self, banana_graph):
        """Test the generators are automorphisms generating a group of the computed order"""
        group = automorphisms(banana_graph)
        assert all(is_automorphism(banana_graph, a) for a in group.generators)
        perms = PermutationGroup([Permutation(list(a.half_edges)) for a in group.generators])
        assert perms.order() == group.order

    def test_agrees_with_exhaustive_search(self):
        """Test backtracking against all half-edge bijections on small strata"""
        for g, n in [(2, 0), (1, 2), (1, 1), (0, 4)]:
            for stratum in enumerate_stable_graphs(g, n):
                graph = stratum.graph
                assert graph.half_edge_count <= 8
                assert automorphisms(graph).order == count_automorphisms_exhaustive(graph)

    @settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
    @given(stable_graphs())
    def test_random_graphs_agree_with_exhaustive(self, graph):
        """Test backtracking against brute force on random graphs"""
        assume(graph.half_edge_count <= 8)
        assert automorphisms(graph).order == count_automorphisms_exhaustive(graph)


class TestGenusInvariance:
    """Test genus preservation under contraction"""

    @settings(max_examples=500, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
    @given(stable_graphs(), st.data())
    def test_contraction_preserves_genus(self, graph, data):
        """Test contracting any edges keeps the genus"""
        edges = graph.edges()
        chosen = data.draw(st.lists(st.sampled_from(edges), unique=True) if edges else st.just([]))
        result = contract_edges(graph, [a for a, _ in chosen])
        assert genus(result) == genus(graph)

    def test_exhaustive_agrees_on_relabelled_copy(self, banana_graph):
        """Test the exhaustive check on a relabelled copy"""
        assert is_isomorphic_exhaustive(banana_graph, relabel(banana_graph, seed=5))
