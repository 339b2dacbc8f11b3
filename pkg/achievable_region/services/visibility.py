# -*- coding: utf-8 -*-
"""
可见性判定与可见性图
- visible：开线段 (p,q) 不真穿任何障碍内部即可见；擦过端点、与障碍共线重叠均不遮挡
- build_visibility_graph：节点 = 全部障碍端点（障碍 i 的 a/b 依次为 2i/2i+1）+ 额外点；全对检测
- 标量判定与建图共用同一个 numpy 批量内核，保证逐边一致
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from achievable_region.errors import PointOnObstacleError
from achievable_region.geometry.core import (
    DEFAULT_TOLERANCE, ObstacleSegment, Point, TolerancePolicy, distance, point_segment_distance,
)

logger = logging.getLogger(__name__)

# 每批处理的点对数量（控制 numpy 临时数组规模）
_PAIR_BLOCK = 4096


@dataclass
class VisibilityGraph:
    nodes: List[Point]
    adjacency: List[List[Tuple[int, float]]]
    endpoint_count: int = 0                      # 前 2n 个节点是障碍端点
    obstacles: List[ObstacleSegment] = field(default_factory=list)

    @property
    def extra_count(self) -> int:
        return len(self.nodes) - self.endpoint_count

    def extra_index(self, k: int) -> int:
        if not 0 <= k < self.extra_count:
            raise IndexError(f"extra point #{k} out of range for {self.extra_count} extras")
        return self.endpoint_count + k

    @property
    def edge_count(self) -> int:
        return sum(len(adj) for adj in self.adjacency) // 2

    def neighbors(self, u: int) -> List[Tuple[int, float]]:
        return self.adjacency[u]

    def has_edge(self, u: int, v: int) -> bool:
        return any(w == v for w, _ in self.adjacency[u])


def _obstacle_arrays(obstacles: Sequence[ObstacleSegment]) -> Tuple[np.ndarray, np.ndarray]:
    a = np.array([[o.a.x, o.a.y] for o in obstacles], dtype=float).reshape(-1, 2)
    b = np.array([[o.b.x, o.b.y] for o in obstacles], dtype=float).reshape(-1, 2)
    return a, b


def _side(ox: np.ndarray, oy: np.ndarray, dx: np.ndarray, dy: np.ndarray,
          px: np.ndarray, py: np.ndarray, eps: float) -> np.ndarray:
    """点 p 相对有向直线 (o, o+d) 的侧向（按距离计，eps 内为 0）"""
    norm = np.hypot(dx, dy)
    norm = np.where(norm == 0.0, 1.0, norm)
    d = (dx * (py - oy) - dy * (px - ox)) / norm
    return np.where(d > eps, 1, np.where(d < -eps, -1, 0))


def blocked_mask(p: np.ndarray, q: np.ndarray, a: np.ndarray, b: np.ndarray, eps: float) -> np.ndarray:
    """
    批量遮挡判定：p/q 形如 (k,2)，a/b 形如 (n,2)
    返回 (k,) 布尔数组：第 i 个点对是否被某个障碍真穿
    """
    if len(a) == 0 or len(p) == 0:
        return np.zeros(len(p), dtype=bool)
    px, py = p[:, 0:1], p[:, 1:2]
    qx, qy = q[:, 0:1], q[:, 1:2]
    ax, ay = a[None, :, 0], a[None, :, 1]
    bx, by = b[None, :, 0], b[None, :, 1]
    # 障碍两端分居 pq 两侧
    s1 = _side(px, py, qx - px, qy - py, ax, ay, eps)
    s2 = _side(px, py, qx - px, qy - py, bx, by, eps)
    # p、q 分居障碍两侧
    s3 = _side(ax, ay, bx - ax, by - ay, px, py, eps)
    s4 = _side(ax, ay, bx - ax, by - ay, qx, qy, eps)
    crosses = (s1 * s2 == -1) & (s3 * s4 == -1)
    return crosses.any(axis=1)


def visible(
    p: Point,
    q: Point,
    obstacles: Sequence[ObstacleSegment],
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> bool:
    if distance(p, q) <= tol.eps_geom:
        return True
    a, b = _obstacle_arrays(obstacles)
    mask = blocked_mask(np.array([[p.x, p.y]]), np.array([[q.x, q.y]]), a, b, tol.eps_geom)
    return not bool(mask[0])


def visible_anchors(
    p: Point,
    anchors: Sequence[Point],
    obstacles: Sequence[ObstacleSegment],
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> List[int]:
    """从 p 可见的 anchor 下标（升序）"""
    if not anchors:
        return []
    a, b = _obstacle_arrays(obstacles)
    q = np.array([[v.x, v.y] for v in anchors], dtype=float)
    pp = np.repeat(np.array([[p.x, p.y]], dtype=float), len(anchors), axis=0)
    mask = blocked_mask(pp, q, a, b, tol.eps_geom)
    return [i for i, v in enumerate(anchors) if distance(p, v) <= tol.eps_geom or not mask[i]]


def on_obstacle_interior(p: Point, obstacles: Sequence[ObstacleSegment], tol: TolerancePolicy = DEFAULT_TOLERANCE) -> bool:
    """p 是否落在某条障碍的相对内部（与端点重合不算）"""
    eps = tol.eps_geom
    for o in obstacles:
        if point_segment_distance(p, o.a, o.b) <= eps and distance(p, o.a) > eps and distance(p, o.b) > eps:
            return True
    return False


def build_visibility_graph(
    obstacles: Sequence[ObstacleSegment],
    extras: Sequence[Point],
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> VisibilityGraph:
    """全对检测（每对与全部障碍逐一比较），按节点序确定输出"""
    for k, p in enumerate(extras):
        if on_obstacle_interior(p, obstacles, tol):
            raise PointOnObstacleError(f"point on obstacle interior: extra #{k} at {p.as_tuple()}")

    nodes: List[Point] = []
    for o in obstacles:
        nodes.extend(o.endpoints)
    endpoint_count = len(nodes)
    nodes.extend(extras)

    adjacency: List[List[Tuple[int, float]]] = [[] for _ in nodes]
    n_nodes = len(nodes)
    if n_nodes < 2:
        return VisibilityGraph(nodes, adjacency, endpoint_count, list(obstacles))

    coords = np.array([[v.x, v.y] for v in nodes], dtype=float)
    iu, ju = np.triu_indices(n_nodes, k=1)
    a, b = _obstacle_arrays(obstacles)
    for lo in range(0, len(iu), _PAIR_BLOCK):
        bi, bj = iu[lo:lo + _PAIR_BLOCK], ju[lo:lo + _PAIR_BLOCK]
        mask = blocked_mask(coords[bi], coords[bj], a, b, tol.eps_geom)
        for i, j, blocked in zip(bi.tolist(), bj.tolist(), mask.tolist()):
            if blocked:
                continue
            w = distance(nodes[i], nodes[j])
            adjacency[i].append((j, w))
            adjacency[j].append((i, w))

    graph = VisibilityGraph(nodes, adjacency, endpoint_count, list(obstacles))
    logger.debug(f"可见性图：节点 {n_nodes}，边 {graph.edge_count}，障碍 {len(obstacles)}")
    return graph
