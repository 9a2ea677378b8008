from __future__ import annotations

import math
import random

import numpy as np
import pytest
from hypothesis import given, settings

from graphsum import (
    UnsupportedSummaryError,
    build_weight_model,
    count_triangles,
    enumerate_triangles,
    from_edges,
    pagerank,
    pagerank_on_summary,
    shortest_path_length,
    summarize,
    summarize_lossy,
    uniform_centrality,
)

from conftest import random_graphs
from generators import complete_graph, er_graph, star_graph
from oracles import bfs_distances, triangle_count_matrix, triangle_set_enumeration


@pytest.fixture
def lossy_summary(worked_example):
    model = build_weight_model(worked_example, uniform_centrality(worked_example))
    return summarize_lossy(worked_example, model, 0.85).summary


class TestTriangles:
    def test_k4(self):
        report = count_triangles(summarize(complete_graph(4)))
        assert (report.count_a, report.count_b, report.count_c) == (4, 0, 0)
        assert report.total == 4

    def test_two_clique_next_to_singleton(self):
        # a 2-node clique supernode adjacent to a singleton: one type-b triangle
        g = from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
        s = summarize(g)
        sizes = sorted(len(grp) for grp in s.supernodes)
        assert sizes == [1, 1, 2]
        report = count_triangles(s)
        assert (report.count_a, report.count_b, report.count_c) == (0, 1, 0)

    def test_er_total_frozen(self):
        g = er_graph(300, 0.05, 11)
        total = count_triangles(summarize(g)).total
        assert total == 596  # trace(A^3)/6 on this instance
        assert total == triangle_count_matrix(g)

    @settings(max_examples=30, deadline=None)
    @given(random_graphs(max_n=35))
    def test_count_matches_matrix_oracle(self, g):
        assert count_triangles(summarize(g)).total == triangle_count_matrix(g)

    @settings(max_examples=25, deadline=None)
    @given(random_graphs(max_n=25, max_p=0.7))
    def test_enumeration_matches_brute_force(self, g):
        s = summarize(g)
        seen: list[tuple[int, int, int]] = []
        enumerate_triangles(s, seen.append)
        assert len(seen) == len(set(seen))  # no duplicates
        assert set(seen) == triangle_set_enumeration(g)
        for a, b, c in seen:
            assert a < b < c
            assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)

    def test_enumeration_order_deterministic(self):
        g = er_graph(40, 0.25, 17)
        s = summarize(g)
        first: list = []
        second: list = []
        enumerate_triangles(s, first.append)
        enumerate_triangles(s, second.append)
        assert first == second

    def test_lossy_summary_rejected(self, lossy_summary):
        with pytest.raises(UnsupportedSummaryError):
            count_triangles(lossy_summary)


class TestSummaryPagerank:
    def test_k4_undamped_all_ones(self):
        pr = pagerank_on_summary(summarize(complete_graph(4)), damping=1.0)
        assert np.allclose(pr.node_scores, 1.0)

    def test_star_leaves_match_closed_form(self):
        # two-variable damped fixed point of the hub/leaf system
        pr = pagerank_on_summary(summarize(star_graph(4)), damping=0.85, tol=1e-14)
        center = 0.66 / 0.2775
        leaf = 0.15 + 0.2125 * center
        assert pr.node_scores[0] == pytest.approx(center, abs=1e-10)
        assert np.allclose(pr.node_scores[1:], leaf, atol=1e-10)

    @pytest.mark.parametrize("damping", [1.0, 0.85])
    def test_er_matches_original_graph(self, damping):
        g = er_graph(200, 0.08, 4)
        s = summarize(g)
        ours = pagerank_on_summary(s, damping=damping, tol=1e-12, max_iter=500)
        oracle = pagerank(g, damping=damping, tol=1e-12, max_iter=500)
        assert np.max(np.abs(ours.node_scores - oracle.scores)) < 1e-8

    def test_member_equality_and_supernode_sums(self):
        g = er_graph(120, 0.05, 21)
        s = summarize(g)
        pr = pagerank_on_summary(s, damping=0.85)
        for sid, grp in enumerate(s.supernodes):
            member_scores = pr.node_scores[grp]
            assert member_scores.max() == member_scores.min()  # exact by construction
            assert member_scores.sum() == pytest.approx(
                pr.supernode_scores[sid], rel=1e-12
            )

    def test_lossy_summary_rejected(self, lossy_summary):
        with pytest.raises(UnsupportedSummaryError):
            pagerank_on_summary(lossy_summary)


class TestShortestPaths:
    def test_k4_any_pair_is_one(self):
        s = summarize(complete_graph(4))
        for u in range(4):
            for v in range(4):
                expected = 0 if u == v else 1
                assert shortest_path_length(s, u, v) == expected

    def test_star_leaf_to_leaf_is_two(self):
        s = summarize(star_graph(4))
        assert shortest_path_length(s, 1, 2) == 2
        assert shortest_path_length(s, 0, 3) == 1

    def test_isolated_pair_unreachable(self):
        g = from_edges(2, [])
        s = summarize(g)
        # both isolated nodes share an IS supernode with no neighbors
        assert s.num_supernodes == 1
        assert shortest_path_length(s, 0, 1) == math.inf

    def test_er_random_pairs_match_bfs(self):
        g = er_graph(300, 0.03, 6)
        s = summarize(g)
        rng = random.Random(1234)
        for _ in range(100):
            u = rng.randrange(g.n)
            v = rng.randrange(g.n)
            assert shortest_path_length(s, u, v) == bfs_distances(g, u)[v]

    def test_rejects_bad_ids(self):
        s = summarize(star_graph(3))
        with pytest.raises(IndexError):
            shortest_path_length(s, 0, 99)

    def test_lossy_summary_rejected(self, lossy_summary):
        with pytest.raises(UnsupportedSummaryError):
            shortest_path_length(lossy_summary, 0, 1)
