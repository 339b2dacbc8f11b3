# -*- coding: utf-8 -*-
import math

import pytest

from conftest import SQRT2, seg
from achievable_region.errors import PointOnObstacleError
from achievable_region.geometry.core import Point, distance
from achievable_region.services.generator import generate_instance
from achievable_region.services.shortest_path import (
    anchors_for, circle_for_endpoint, control_point, dijkstra, effective_endpoints, geodesic_distance,
    is_valid_control_point, shortest_path_nodes,
)
from achievable_region.services.visibility import build_visibility_graph, visible

P = Point


@pytest.fixture
def wall_map(wall):
    g = build_visibility_graph([wall], [P(0, 0)])
    return dijkstra(g, g.extra_index(0))


@pytest.fixture
def corridor():
    return [seg(1, -1, 1, 1, 0), seg(2, 0, 2, 2, 1)]


class TestDijkstra:
    def test_single_wall(self, wall_map):
        assert wall_map.dist[2] == 0.0
        assert wall_map.dist[0] == pytest.approx(SQRT2)
        assert wall_map.dist[1] == pytest.approx(SQRT2)

    def test_source_only(self):
        g = build_visibility_graph([], [P(0, 0)])
        dm = dijkstra(g, 0)
        assert dm.dist == [0.0]

    def test_corridor_rounds_the_first_wall(self, corridor):
        g = build_visibility_graph(corridor, [P(0, 0)])
        dm = dijkstra(g, g.extra_index(0))
        assert dm.dist[2] == pytest.approx(2 * SQRT2)
        path = shortest_path_nodes(dm, 2)
        assert path[0] == g.extra_index(0) and path[-1] == 2
        assert path[1] in (0, 1)

    def test_bad_source_index(self, wall):
        g = build_visibility_graph([wall], [P(0, 0)])
        with pytest.raises(IndexError):
            dijkstra(g, 7)

    def test_early_exit_at_target_is_exact_for_target(self):
        inst = generate_instance(20, seed=11)
        g = build_visibility_graph(list(inst.obstacles), [inst.s])
        full = dijkstra(g, g.extra_index(0))
        for e in range(0, g.endpoint_count, 5):
            single = dijkstra(g, g.extra_index(0), target=e)
            assert single.dist[e] == pytest.approx(full.dist[e])

    def test_distances_relaxed_and_achieved(self):
        inst = generate_instance(15, seed=5)
        g = build_visibility_graph(list(inst.obstacles), [inst.s])
        dm = dijkstra(g, g.extra_index(0))
        for u in range(len(g.nodes)):
            for v, w in g.neighbors(u):
                assert dm.dist[v] <= dm.dist[u] + w + 1e-9
        for v in range(len(g.nodes)):
            chain = shortest_path_nodes(dm, v)
            if not chain:
                assert math.isinf(dm.dist[v])
                continue
            assert chain[0] == g.extra_index(0)
            walked = sum(distance(g.nodes[a], g.nodes[b]) for a, b in zip(chain, chain[1:]))
            assert walked == pytest.approx(dm.dist[v], abs=1e-9)


class TestEffectiveEndpoints:
    def test_budget_two(self, wall_map):
        assert effective_endpoints(wall_map, 2.0) == [0, 1]

    def test_strict_inequality(self, wall_map):
        assert effective_endpoints(wall_map, SQRT2) == []

    def test_tiny_budget(self, wall_map):
        assert effective_endpoints(wall_map, 0.1) == []


class TestCircleForEndpoint:
    def test_remaining_budget(self, wall_map):
        c = circle_for_endpoint(wall_map, 1, 2.0)
        assert c.center == P(1, 1)
        assert c.radius == pytest.approx(2 - SQRT2)

    def test_zero_radius_is_invalid(self, wall_map):
        assert circle_for_endpoint(wall_map, 1, wall_map.dist[1]) is None

    def test_unreachable(self, wall_map):
        wall_map.dist[0] = math.inf
        assert circle_for_endpoint(wall_map, 0, 5.0) is None


class TestGeodesicDistance:
    def test_direct(self, wall):
        assert geodesic_distance([wall], P(0, 0), P(0.5, 0)) == pytest.approx(0.5)

    def test_around_wall(self, wall):
        assert geodesic_distance([wall], P(0, 0), P(2, 0)) == pytest.approx(2 * SQRT2)

    def test_identity(self):
        assert geodesic_distance([], P(3, 4), P(3, 4)) == 0.0

    def test_query_on_obstacle_rejected(self, wall):
        with pytest.raises(PointOnObstacleError):
            geodesic_distance([wall], P(0, 0), P(1, 0.25))

    def test_euclidean_lower_bound_and_removal_monotone(self, rng):
        inst = generate_instance(10, seed=8)
        obstacles = list(inst.obstacles)
        for xy in rng.uniform(0, 1, size=(15, 2)):
            p = P(*xy)
            d = geodesic_distance(obstacles, inst.s, p)
            assert d >= distance(inst.s, p) - 1e-9
            assert geodesic_distance(obstacles[1:], inst.s, p) <= d + 1e-9

    def test_one_lipschitz_along_sightlines(self, rng):
        inst = generate_instance(10, seed=5)
        obstacles = list(inst.obstacles)
        checked = 0
        for xy in rng.uniform(0, 1, size=(40, 4)):
            p, q = P(xy[0], xy[1]), P(xy[2], xy[3])
            if not visible(p, q, obstacles):
                continue
            dp = geodesic_distance(obstacles, inst.s, p)
            dq = geodesic_distance(obstacles, inst.s, q)
            assert abs(dp - dq) <= distance(p, q) + 1e-9
            checked += 1
        assert checked > 0


class TestControlPoint:
    def test_tie_goes_to_lowest_anchor(self, wall, wall_map):
        anchors = anchors_for([wall], P(0, 0))
        k, total = control_point(P(2, 0), wall_map, anchors, [wall])
        # (1,-1) 与 (1,1) 等长，取下标较小的 (1,-1)
        assert k == 1
        assert anchors[k] == P(1, -1)
        assert total == pytest.approx(2 * SQRT2)

    def test_direct_visibility_wins(self, wall, wall_map):
        anchors = anchors_for([wall], P(0, 0))
        assert control_point(P(0.5, 0), wall_map, anchors, [wall]) == (0, pytest.approx(0.5))

    def test_no_visible_anchor(self):
        sealed = [seg(-2, 0, 2, 0, 0)]
        g2 = build_visibility_graph(sealed, [P(0, 1)])
        dm2 = dijkstra(g2, g2.extra_index(0))
        assert control_point(P(0, -1), dm2, [P(0, 1)], sealed) is None

    def test_agrees_with_oracle(self, rng):
        inst = generate_instance(12, seed=21)
        obstacles = list(inst.obstacles)
        g = build_visibility_graph(obstacles, [inst.s])
        dm = dijkstra(g, g.extra_index(0))
        anchors = anchors_for(obstacles, inst.s)
        for xy in rng.uniform(0, 1, size=(25, 2)):
            p = P(*xy)
            found = control_point(p, dm, anchors, obstacles)
            oracle = geodesic_distance(obstacles, inst.s, p)
            if found is None:
                assert math.isinf(oracle)
                continue
            k, total = found
            assert total == pytest.approx(oracle, abs=1e-9)
            assert visible(anchors[k], p, obstacles)

    def test_valid_control_point(self, wall_map):
        assert is_valid_control_point(wall_map, 0, 0.1)
        assert is_valid_control_point(wall_map, 1, 2.0)
        assert not is_valid_control_point(wall_map, 1, SQRT2)
