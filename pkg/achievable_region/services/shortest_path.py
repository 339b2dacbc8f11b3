# -*- coding: utf-8 -*-
"""
测地距离：可见性图上的 Dijkstra（二叉堆）、有效端点、端点圆、逐点 oracle 与控制点查询
"""
from __future__ import annotations

import heapq
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from achievable_region.geometry.core import (
    DEFAULT_TOLERANCE, Circle, ObstacleSegment, Point, TolerancePolicy, distance,
)
from achievable_region.services.visibility import VisibilityGraph, build_visibility_graph, visible_anchors

logger = logging.getLogger(__name__)

INF = math.inf


@dataclass
class DistanceMap:
    source: Point
    source_index: int
    nodes: List[Point]
    dist: List[float]                 # 不可达为 +inf
    pred: List[Optional[int]]         # 最短路树上的前驱
    endpoint_count: int

    def anchor_node(self, k: int) -> int:
        """anchors = [s] + 端点；anchor 0 对应源点节点，anchor k 对应端点节点 k-1"""
        return self.source_index if k == 0 else k - 1

    def anchor_distance(self, k: int) -> float:
        return self.dist[self.anchor_node(k)]


def dijkstra(g: VisibilityGraph, source_index: int, target: Optional[int] = None) -> DistanceMap:
    """单源最短路；给定 target 时在其出堆后提前结束（其余节点的距离可能不是最终值）"""
    n = len(g.nodes)
    if not 0 <= source_index < n:
        raise IndexError(f"source index {source_index} out of range for {n} nodes")
    dist = [INF] * n
    pred: List[Optional[int]] = [None] * n
    dist[source_index] = 0.0
    heap: List[Tuple[float, int]] = [(0.0, source_index)]
    done = [False] * n
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        if u == target:
            break
        for v, w in g.adjacency[u]:
            relaxed = d + w
            if relaxed < dist[v]:
                dist[v] = relaxed
                pred[v] = u
                heapq.heappush(heap, (relaxed, v))
    return DistanceMap(g.nodes[source_index], source_index, list(g.nodes), dist, pred, g.endpoint_count)


def effective_endpoints(dm: DistanceMap, l: float) -> List[int]:
    """π(s,e) < l（严格）的端点节点；源点与额外点不计入"""
    return [i for i in range(dm.endpoint_count) if dm.dist[i] < l]


def circle_for_endpoint(dm: DistanceMap, e: int, l: float) -> Optional[Circle]:
    r = l - dm.dist[e]
    if not math.isfinite(r) or r <= 0.0:
        return None
    return Circle(dm.nodes[e], r)


def shortest_path_nodes(dm: DistanceMap, v: int) -> List[int]:
    """源点到 v 的前驱链（含两端）；不可达返回空"""
    if not math.isfinite(dm.dist[v]):
        return []
    chain = [v]
    while dm.pred[chain[-1]] is not None:
        chain.append(dm.pred[chain[-1]])
    chain.reverse()
    return chain


def anchors_for(obstacles: Sequence[ObstacleSegment], s: Point) -> List[Point]:
    anchors = [s]
    for o in obstacles:
        anchors.extend(o.endpoints)
    return anchors


def is_valid_control_point(dm: DistanceMap, anchor: int, l: float) -> bool:
    return dm.anchor_distance(anchor) < l


def geodesic_distance(
    obstacles: Sequence[ObstacleSegment],
    s: Point,
    p: Point,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> float:
    """独立 oracle：以 [s, p] 为额外点建图后跑 Dijkstra"""
    g = build_visibility_graph(obstacles, [s, p], tol)
    dm = dijkstra(g, g.extra_index(0))
    return dm.dist[g.extra_index(1)]


def control_point(
    p: Point,
    dm: DistanceMap,
    anchors: Sequence[Point],
    obstacles: Sequence[ObstacleSegment],
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> Optional[Tuple[int, float]]:
    """
    p 可见的 anchor 中，使 π(s,a) + |ap| 最小者；相差 eps_geom 以内视为并列，取下标最小
    返回 (anchor 下标, 总长度)；无可见 anchor 时返回 None
    """
    best: Optional[Tuple[int, float]] = None
    for k in visible_anchors(p, anchors, obstacles, tol):
        reach = dm.anchor_distance(k)
        if not math.isfinite(reach):
            continue
        total = reach + distance(anchors[k], p)
        if best is None or total < best[1] - tol.eps_geom:
            best = (k, total)
    return best
