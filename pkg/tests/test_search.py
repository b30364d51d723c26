"""Search tests: soundness of certificates, agreement with the hard cap,
and cross-checks between the pruned and unpruned explorations."""

from fractions import Fraction

import pytest

from rsgraphs import (
    Budget,
    Graph,
    INDETERMINATE,
    ParameterError,
    SAT,
    UNSAT,
    exists_rs,
    hypercube_rs,
    kneser_rs,
    max_r,
    max_t_on_graph,
    verify_decomposition,
)

FAST = Budget(max_nodes=500_000, max_seconds=20.0)


class TestExistsRS:
    def test_triangle(self):
        out = exists_rs(3, 1, 3)
        assert out.verdict == SAT
        assert out.certificate.graph.edges == frozenset({(0, 1), (0, 2), (1, 2)})

    def test_two_triangles(self):
        out = exists_rs(6, 2, 3)
        assert out.verdict == SAT
        assert verify_decomposition(out.certificate).passed

    def test_unsat_by_shortcut(self):
        out = exists_rs(6, 2, 4)
        assert out.verdict == UNSAT
        assert "shortcut" in out.note

    def test_unsat_without_shortcut(self):
        out = exists_rs(6, 2, 4, eq1_shortcut=False)
        assert out.verdict == UNSAT
        assert out.nodes_explored > 0

    def test_10_3_6_unsat_both_ways(self):
        assert exists_rs(10, 3, 6).verdict == UNSAT
        full = exists_rs(10, 3, 6, eq1_shortcut=False,
                         budget=Budget(max_nodes=5_000_000, max_seconds=120.0))
        assert full.verdict in (UNSAT, INDETERMINATE)
        assert full.verdict != SAT

    def test_impossible_parameters(self):
        with pytest.raises(ParameterError):
            exists_rs(5, 3, 2)

    def test_degenerate_parameters(self):
        assert exists_rs(4, 0, 3).verdict == SAT
        assert exists_rs(4, 2, 0).verdict == SAT

    def test_single_matching(self):
        out = exists_rs(4, 2, 1)
        assert out.verdict == SAT
        assert len(out.certificate.graph.edges) == 2

    def test_determinism(self):
        a = exists_rs(6, 2, 3)
        b = exists_rs(6, 2, 3)
        assert a.verdict == b.verdict
        assert a.certificate == b.certificate
        assert a.nodes_explored == b.nodes_explored

    def test_budget_indeterminate(self):
        out = exists_rs(7, 2, 6, eq1_shortcut=False, budget=Budget(max_nodes=50, max_seconds=30))
        assert out.verdict == INDETERMINATE

    def test_kneser_tightness_witness_k1(self):
        # the smallest tight point: n = 3, t = 3, r = formula value 1
        out = exists_rs(3, 1, 3)
        assert out.verdict == SAT
        assert Fraction(1) == max_r(3, 3)


class TestSearchConsistency:
    def test_pruned_matches_unpruned_small_sweep(self):
        for n in range(2, 7):
            for r in (1, 2):
                if 2 * r > n:
                    continue
                for t in range(1, 5):
                    fast = exists_rs(n, r, t, eq1_shortcut=False, budget=FAST)
                    slow = exists_rs(n, r, t, eq1_shortcut=False, budget=FAST,
                                     matching_order_pruning=False)
                    assert fast.verdict == slow.verdict, (n, r, t)

    def test_never_sat_above_cap(self):
        for n in range(2, 8):
            for r in (1, 2, 3):
                if 2 * r > n:
                    continue
                for t in range(1, 7):
                    if Fraction(r) <= max_r(n, t):
                        continue
                    out = exists_rs(n, r, t, eq1_shortcut=False, budget=FAST)
                    assert out.verdict != SAT, (n, r, t)


class TestMaxTOnGraph:
    def test_petersen_exact_cover(self):
        g = kneser_rs(2).graph
        out = max_t_on_graph(g, 3, exact_cover=True)
        assert out.verdict == SAT and out.t == 5
        assert verify_decomposition(out.certificate).passed

    def test_augmented_hypercube_exact_cover(self):
        g = hypercube_rs(4, augmented=True).graph
        out = max_t_on_graph(g, 4, exact_cover=True)
        assert out.verdict == SAT and out.t == 10
        assert verify_decomposition(out.certificate).passed

    def test_star_has_no_size2_induced_matching(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        out = max_t_on_graph(g, 2)
        assert out.verdict == SAT and out.t == 0

    def test_packing_on_petersen(self):
        out = max_t_on_graph(kneser_rs(2).graph, 3)
        assert out.verdict == SAT and out.t == 5

    def test_exact_cover_divisibility(self):
        g = kneser_rs(2).graph  # 15 edges
        with pytest.raises(ParameterError):
            max_t_on_graph(g, 4, exact_cover=True)

    def test_exact_cover_unsat(self):
        # triangle with r = 3: no induced matching of size 3 exists at all
        g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        out = max_t_on_graph(g, 3, exact_cover=True)
        assert out.verdict == UNSAT
