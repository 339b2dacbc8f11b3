# -*- coding: utf-8 -*-
import itertools

import pytest

from conftest import SQRT2, seg
from achievable_region.errors import PointOnObstacleError
from achievable_region.geometry.core import Point
from achievable_region.services.generator import generate_instance
from achievable_region.services.visibility import (
    build_visibility_graph, on_obstacle_interior, visible, visible_anchors,
)

P = Point


class TestVisible:
    def test_proper_crossing_blocks(self, wall):
        assert not visible(P(0, 0), P(2, 0), [wall])

    def test_no_obstacles(self):
        assert visible(P(0, 0), P(2, 0), [])

    def test_grazing_endpoint_allowed(self, wall):
        assert visible(P(0, 0), P(2, 2), [wall])

    def test_collinear_overlap_allowed(self, wall):
        assert visible(P(1, -3), P(1, 3), [wall])

    def test_same_point(self, wall):
        assert visible(P(0.5, 0.5), P(0.5, 0.5), [wall])

    def test_symmetric_and_monotone(self, rng):
        obstacles = [seg(*xy, i=i) for i, xy in enumerate(rng.uniform(-2, 2, size=(6, 4)))]
        for _ in range(40):
            p, q = (P(*xy) for xy in rng.uniform(-3, 3, size=(2, 2)))
            v = visible(p, q, obstacles)
            assert v == visible(q, p, obstacles)
            if v:
                for k in range(len(obstacles)):
                    assert visible(p, q, obstacles[:k] + obstacles[k + 1:])


class TestVisibleAnchors:
    def test_source_blocked_endpoints_visible(self, wall):
        assert visible_anchors(P(2, 0), [P(0, 0), P(1, 1), P(1, -1)], [wall]) == [1, 2]

    def test_self(self):
        assert visible_anchors(P(0, 0), [P(0, 0)], []) == [0]

    def test_empty(self, wall):
        assert visible_anchors(P(5, 5), [], [wall]) == []


class TestBuildVisibilityGraph:
    def test_single_wall(self, wall):
        g = build_visibility_graph([wall], [P(0, 0)])
        assert len(g.nodes) == 3
        assert g.endpoint_count == 2 and g.extra_index(0) == 2
        assert g.edge_count == 3
        weights = {frozenset((u, v)): w for u in range(3) for v, w in g.neighbors(u)}
        assert weights[frozenset((2, 0))] == pytest.approx(SQRT2)
        assert weights[frozenset((2, 1))] == pytest.approx(SQRT2)
        # 同一障碍的两个端点沿障碍相连
        assert weights[frozenset((0, 1))] == pytest.approx(2.0)

    def test_extra_index_out_of_range(self, wall):
        g = build_visibility_graph([wall], [P(0, 0)])
        assert g.extra_count == 1
        with pytest.raises(IndexError):
            g.extra_index(1)

    def test_source_only(self):
        g = build_visibility_graph([], [P(0, 0)])
        assert len(g.nodes) == 1 and g.edge_count == 0

    def test_diagonal_between_walls(self):
        g = build_visibility_graph([seg(1, -1, 1, 1, 0), seg(3, -1, 3, 1, 1)], [P(0, 0)])
        assert g.has_edge(1, 2)
        w = dict(g.neighbors(1))[2]
        assert w == pytest.approx(2 * SQRT2)
        # s 被第一面墙挡住，看不到第二面墙的下端点
        assert not g.has_edge(4, 2)

    def test_complete_without_obstacles(self, rng):
        extras = [P(*xy) for xy in rng.uniform(0, 1, size=(7, 2))]
        g = build_visibility_graph([], extras)
        assert g.edge_count == 7 * 6 // 2

    def test_matches_pairwise_visible(self):
        inst = generate_instance(12, seed=3)
        obstacles = list(inst.obstacles)
        g = build_visibility_graph(obstacles, [inst.s, P(-1, -1)])
        for u, v in itertools.combinations(range(len(g.nodes)), 2):
            assert g.has_edge(u, v) == visible(g.nodes[u], g.nodes[v], obstacles)
            assert g.has_edge(v, u) == g.has_edge(u, v)

    def test_extra_on_obstacle_interior_rejected(self, wall):
        with pytest.raises(PointOnObstacleError, match="point on obstacle interior"):
            build_visibility_graph([wall], [P(1, 0)])

    def test_extra_on_endpoint_allowed(self, wall):
        g = build_visibility_graph([wall], [P(1, 1)])
        assert len(g.nodes) == 3


def test_on_obstacle_interior(wall):
    assert on_obstacle_interior(P(1, 0.5), [wall])
    assert not on_obstacle_interior(P(1, 1), [wall])
    assert not on_obstacle_interior(P(1, 1.5), [wall])
