"""
Bound Engine Tests
Feasible ranges, target series, Betti lower bounds and test graphs
"""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from betti_bounds.bounds import (admissible_pairs, best_bounds, best_bounds_exhaustive,
                                 betti_lower_bounds, build_test_graph, c_best, c_best_exhaustive,
                                 c_of_partition, check_admissible, closed_form_range, d_plus,
                                 sigma_quotient_range, target_series)
from betti_bounds.errors import (BoundaryComponentError, ContractViolation, GraphError,
                                 UnstableSignatureError)
from betti_bounds.graphs import automorphisms, contract_edges, enumerate_elementary, genus, validate
from betti_bounds.models import APartition, BoundaryComponent, FieldSpec, LevelMap
from betti_bounds.models.field import F2, RATIONALS

IRR = BoundaryComponent.irr()


def sep(h, level):
    alpha = BoundaryComponent.sep(h)
    return alpha, LevelMap.of([alpha], {alpha: level})


class TestDPlus:
    """Test the self-intersecting boundary components"""

    def test_genus_three(self):
        """Test irr and (1, {}) are the components at genus 3"""
        assert d_plus(3, 0) == [IRR, BoundaryComponent.sep(1)]

    def test_genus_two_closed(self):
        """Test (1, {}) at g = 2 needs a marking to self-intersect"""
        assert d_plus(2, 0) == [IRR]
        assert d_plus(2, 1) == [IRR, BoundaryComponent.sep(1)]

    def test_genus_ten_pointed(self):
        """Test every separating h <= 5 self-intersects at (10, 2)"""
        expected = [IRR] + [BoundaryComponent.sep(h) for h in range(1, 6)]
        assert d_plus(10, 2) == expected

    @pytest.mark.parametrize('g,n', [(2, 0), (2, 1), (5, 0), (6, 2), (9, 1)])
    def test_subset_of_elementary(self, g, n):
        """Test D+ only holds elementary components with empty P"""
        elementary = enumerate_elementary(g, n)
        for alpha in d_plus(g, n):
            assert alpha in elementary
            assert alpha.is_irr or not alpha.P

    def test_genus_zero_is_empty(self):
        """Test genus 0 has no self-intersecting components"""
        assert d_plus(0, 5) == []

    def test_unstable(self):
        """Test an unstable signature is rejected"""
        with pytest.raises(UnstableSignatureError):
            d_plus(1, 0)


class TestFeasibleRange:
    """Test c(A, l) for single partitions and the optimum"""

    def test_irr_partition(self):
        """Test c for m_irr = 4 at genus 10"""
        levels = LevelMap.of([IRR])
        assert c_of_partition(10, levels, APartition(10, {IRR: 4})) == 2

    def test_separating_levels(self):
        """Test level 1 caps c at h/2 - 1"""
        alpha, low = sep(2, 0)
        _, high = sep(2, 1)
        m = APartition(14, {alpha: 4})
        assert c_of_partition(14, low, m) == 2
        assert c_of_partition(14, high, m) == 0

    def test_negative_residual(self):
        """Test a partition with r < 0 is rejected"""
        with pytest.raises(ContractViolation):
            c_of_partition(4, LevelMap.of([IRR]), APartition(4, {IRR: 5}))

    def test_component_outside_A(self):
        """Test a partition may only use members of A"""
        alpha, _ = sep(1, 0)
        with pytest.raises(ContractViolation):
            c_of_partition(6, LevelMap.of([IRR]), APartition(6, {alpha: 1}))

    @pytest.mark.parametrize('g,levels,value,m', [
        (18, LevelMap.of([IRR]), Fraction(4), 8),
        (14, sep(2, 0)[1], Fraction(2), 4),
        (10, sep(2, 0)[1], Fraction(1), 2),
        (4, LevelMap.of([IRR]), Fraction(1, 2), 1),
    ])
    def test_best(self, g, levels, value, m):
        """Test the optimum and the lexicographically least maximiser"""
        c, partition = c_best(g, levels)
        assert c == value
        assert partition.vector() == (m,)

    def test_parallel_search_matches_closed_form(self):
        """Test the threaded partition search agrees with the direct optimum"""
        alpha = BoundaryComponent.sep(2)
        levels = LevelMap.of([IRR, alpha], {alpha: 0})
        assert c_best_exhaustive(20, levels, workers=4) == c_best(20, levels)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_matches_partition_search(self, data):
        """Test the direct optimum and its maximiser against every A-partition"""
        g = data.draw(st.integers(min_value=2, max_value=16))
        n = data.draw(st.integers(min_value=0, max_value=2))
        components = d_plus(g, n)
        A = data.draw(st.lists(st.sampled_from(components), min_size=1, max_size=3, unique=True))
        levels = LevelMap.of(A, {a: data.draw(st.integers(0, 1)) for a in A if not a.is_irr})
        assert c_best(g, levels) == c_best_exhaustive(g, levels)

    def test_large_genus_is_direct(self):
        """Test genus 400 with a three-member A"""
        a, b = BoundaryComponent.sep(3), BoundaryComponent.sep(7)
        levels = LevelMap.of([IRR, a, b], {a: 0, b: 1})
        c, partition = c_best(400, levels)
        assert c == Fraction(5, 2)
        assert partition.vector() == (5, 5, 5)
        assert partition.r == 400 - 5 * 11

    def test_empty_A(self):
        """Test an empty A is rejected"""
        with pytest.raises(ContractViolation):
            c_best(6, LevelMap({}))

    @pytest.mark.parametrize('g', range(4, 61))
    def test_irr_within_half_of_closed_form(self, g):
        """Test the irr optimum sits within 1/2 below (g - 2)/4"""
        c, _ = c_best(g, LevelMap.of([IRR]))
        closed = closed_form_range(g, LevelMap.of([IRR]))
        assert closed == Fraction(g - 2, 4)
        assert c <= closed
        assert closed - c < Fraction(1, 2)

    @pytest.mark.parametrize('g', range(3, 41))
    def test_separating_within_closed_form(self, g):
        """Test separating optima sit within 1/2 below the closed form"""
        for h in range(1, (g - 1) // 2 + 1):
            for level in (0, 1):
                _, levels = sep(h, level)
                c, _ = c_best(g, levels)
                closed = closed_form_range(g, levels)
                assert c <= closed
                assert closed - c < Fraction(1, 2)

    def test_closed_form_only_for_singletons(self):
        """Test unions have no closed-form range"""
        assert closed_form_range(10, LevelMap.of([IRR, BoundaryComponent.sep(1)])) is None


class TestTargetSeries:
    """Test H_*(prod Q(BG^V); F)"""

    def test_irr_rational(self):
        """Test the rational target series of irr"""
        assert target_series(LevelMap.of([IRR]), RATIONALS, 4).coeffs == (1, 0, 1, 0, 2)

    def test_irr_mod_two(self):
        """Test the mod 2 target series of irr"""
        assert target_series(LevelMap.of([IRR]), F2, 4).coeffs == (1, 0, 1, 1, 3)

    def test_pointed_separating(self):
        """Test the rational target series of a level-0 separating component"""
        _, levels = sep(1, 0)
        assert target_series(levels, RATIONALS, 6).coeffs == (1, 0, 1, 0, 2, 0, 3)

    @pytest.mark.parametrize('p', [2, 3])
    def test_mod_p_dominates_rational(self, p):
        """Test mod p target series dominate the rational one"""
        alpha = BoundaryComponent.sep(2)
        levels = LevelMap.of([IRR, alpha], {alpha: 1})
        assert target_series(levels, FieldSpec(p), 10).dominates(target_series(levels, RATIONALS, 10))


class TestBettiLowerBounds:
    """Test per-degree lower bounds"""

    def test_genus_eighteen_rational(self):
        """Test rational bounds for irr at genus 18"""
        report = betti_lower_bounds(18, 0, LevelMap.of([IRR]), RATIONALS)
        assert report.c_value == 4
        assert dict(report.bounds) == {0: 1, 1: 0, 2: 1, 3: 0, 4: 2}
        assert report.closed_form == 4
        assert report.optimal_partition.vector() == (8,)

    def test_genus_eighteen_mod_two(self):
        """Test mod 2 bounds for irr at genus 18"""
        report = betti_lower_bounds(18, 0, LevelMap.of([IRR]), F2)
        assert dict(report.bounds) == {0: 1, 1: 0, 2: 1, 3: 1, 4: 3}

    def test_genus_four(self):
        """Test a range below 1 only bounds degree 0"""
        report = betti_lower_bounds(4, 0, LevelMap.of([IRR]), RATIONALS)
        assert report.c_value == Fraction(1, 2)
        assert dict(report.bounds) == {0: 1}

    def test_negative_range_gives_no_bounds(self):
        """Test a negative range gives no bounds"""
        report = betti_lower_bounds(1, 1, LevelMap.of([IRR]), RATIONALS)
        assert report.c_value < 0
        assert dict(report.bounds) == {}

    def test_cap_extends_target_only(self):
        """Test a larger cap extends the target but not the bounds"""
        report = betti_lower_bounds(18, 0, LevelMap.of([IRR]), RATIONALS, cap=8)
        assert report.degrees == (0, 1, 2, 3, 4)
        assert report.target.cap == 8

    def test_cap_below_range(self):
        """Test a cap below the feasible range is rejected"""
        with pytest.raises(ContractViolation):
            betti_lower_bounds(18, 0, LevelMap.of([IRR]), RATIONALS, cap=3)

    def test_inadmissible_component(self):
        """Test components outside D+ are rejected"""
        _, levels = sep(1, 0)
        with pytest.raises(BoundaryComponentError):
            check_admissible(2, 0, levels)
        with pytest.raises(BoundaryComponentError):
            betti_lower_bounds(2, 0, levels, RATIONALS)

    def test_mod_p_bounds_dominate(self):
        """Test mod p bounds are at least the rational ones"""
        rational = betti_lower_bounds(18, 0, LevelMap.of([IRR]), RATIONALS)
        for p in (2, 3, 5):
            modular = betti_lower_bounds(18, 0, LevelMap.of([IRR]), FieldSpec(p))
            assert all(modular.bounds[i] >= rational.bounds[i] for i in rational.bounds)


class TestBestBounds:
    """Test the sweep over admissible pairs"""

    def test_admissible_pairs_prune_large_unions(self):
        """Test genus 6 only sweeps singletons"""
        pairs = admissible_pairs(6, 0)
        assert all(len(levels.A) == 1 for levels in pairs)
        assert len(pairs) == 1 + 2 * 2

    def test_genus_two(self):
        """Test genus 2 only reaches degree 0"""
        result = best_bounds(2, 0, RATIONALS)
        assert result.cap == 0
        assert {i: b.bound for i, b in result.degrees.items()} == {0: 1}

    @pytest.mark.slow
    def test_genus_eighteen(self):
        """Test a two-component pair beats every singleton in degree 2"""
        result = best_bounds(18, 0, RATIONALS)
        assert result.cap == 4
        assert result.degrees[0].bound == 1
        assert result.degrees[2].bound == 2
        assert len(result.degrees[2].witness.A) == 2
        assert result.degrees[4].bound >= 2
        assert 0 < result.pairs_considered < len(admissible_pairs(18, 0))

    @pytest.mark.slow
    def test_genus_eighteen_mod_two_sees_degree_three(self):
        """Test mod 2 classes appear in odd degree 3"""
        result = best_bounds(18, 0, F2)
        assert result.degrees[3].bound >= 1
        assert result.convention == 'strict'

    @pytest.mark.parametrize('g,n', [(g, n) for g in range(3, 13) for n in (0, 1)])
    def test_matches_exhaustive_sweep(self, g, n):
        """Test the per-shape witnesses reach the bounds of the full sweep"""
        fast = best_bounds(g, n, F2)
        full = best_bounds_exhaustive(g, n, F2)
        assert fast.cap == full.cap
        assert {i: b.bound for i, b in fast.degrees.items()} == {i: b.bound for i, b in full.degrees.items()}
        for i, found in fast.degrees.items():
            assert found.c_value >= i
            assert c_best(g, found.witness)[0] == found.c_value

    def test_large_genus(self):
        """Test genus 60 finishes and keeps the irr singleton range"""
        result = best_bounds(60, 0, RATIONALS, cap=6)
        assert result.cap == 6
        assert sorted(result.degrees) == list(range(7))
        assert result.degrees[0].bound == 1
        assert result.degrees[2].bound >= 2
        assert result.pairs_considered < 400


class TestSigmaQuotientRange:
    """Test the symmetric-group quotient range"""

    def test_values(self):
        """Test the range and least n for two splits"""
        assert sigma_quotient_range(14, 2, 1) == (Fraction(2), 2)
        assert sigma_quotient_range(8, 1, 0) == (Fraction(3, 2), 0)

    def test_h_out_of_range(self):
        """Test h must satisfy 1 <= h < g/2"""
        with pytest.raises(ContractViolation):
            sigma_quotient_range(6, 3, 0)
        with pytest.raises(ContractViolation):
            sigma_quotient_range(6, 0, 0)


class TestComparisonGraph:
    """Test the test-graph construction"""

    def test_loops(self):
        """Test the irr test graph is a vertex with four loops"""
        built = build_test_graph(10, 0, LevelMap.of([IRR]), APartition(10, {IRR: 4}))
        center = built.graph.vertices[0]
        assert center.genus == 6
        assert built.graph.loops_at(0) == 4
        assert automorphisms(built.graph).order == 384
        assert built.expected_aut_order == 384
        assert len(built.h0) == 8

    def test_pointed_pendants(self):
        """Test level-0 members hang as pointed genus-2 pendants"""
        alpha, levels = sep(2, 0)
        built = build_test_graph(14, 1, levels, APartition(14, {alpha: 4}))
        graph = built.graph
        assert graph.vertices[0].genus == 6
        assert graph.vertex_count == 5
        assert all(v.pointed and v.decoration == 0 for v in graph.vertices[1:])
        assert automorphisms(graph).order == 24
        assert len(built.h0) == 4

    def test_empty_partition_is_open_stratum(self):
        """Test m = 0 gives the one-vertex graph"""
        built = build_test_graph(5, 2, LevelMap.of([IRR]), APartition(5, {}))
        assert built.graph.vertex_count == 1
        assert built.graph.edge_count == 0
        assert automorphisms(built.graph).order == 1

    def test_unstable_center(self):
        """Test an unstable center vertex is rejected"""
        alpha, levels = sep(1, 1)
        with pytest.raises(GraphError):
            build_test_graph(2, 0, levels, APartition(2, {alpha: 2}))

    @settings(max_examples=50, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
    @given(st.data())
    def test_random_partitions(self, data):
        """Test stability, genus, aut order and contraction to the open stratum"""
        g = data.draw(st.integers(min_value=2, max_value=10))
        n = data.draw(st.integers(min_value=0, max_value=2))
        components = d_plus(g, n)
        A = data.draw(st.lists(st.sampled_from(components), min_size=1, unique=True))
        levels = LevelMap.of(A, {a: data.draw(st.integers(0, 1)) for a in A if not a.is_irr})
        m, budget = {}, g
        for alpha in levels.A:
            count = data.draw(st.integers(min_value=0, max_value=min(budget // alpha.g_alpha, 4)))
            m[alpha] = count
            budget -= count * alpha.g_alpha
        partition = APartition(g, m)
        r = partition.r
        valence = 2 * m.get(IRR, 0) + sum(c for a, c in m.items() if not a.is_irr) + n
        assume(r >= 2 or (r == 1 and valence >= 1) or valence >= 3)

        built = build_test_graph(g, n, levels, partition)
        graph = built.graph
        assert validate(graph).ok
        assert genus(graph) == g
        assert automorphisms(graph).order == built.expected_aut_order
        contracted = contract_edges(graph, [a for a, _ in graph.edges()])
        assert contracted.vertex_count == 1
        assert contracted.vertices[0].genus == g
        assert not contracted.vertices[0].pointed
        assert contracted.marking_count() == n
