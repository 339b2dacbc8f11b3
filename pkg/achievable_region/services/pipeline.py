# -*- coding: utf-8 -*-
"""
可达区域主流程：
Step 1 可见性图（障碍端点 + 源点）
Step 2 Dijkstra 求 π(s,e)（alg2 只算一次；alg1 对每个端点重算一次，仅用于基准对比）
Step 3 有效端点 → 端点圆 → 剪枝 → CVR（各 CVR 互相独立）
Step 4 按固定顺序左折叠求并
"""
from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from typing import List, Literal, Optional, Sequence

from achievable_region.errors import InstanceValidationError, NotStrictlyAchievableError
from achievable_region.geometry.core import (
    DEFAULT_TOLERANCE, ArcPolygon, Circle, ObstacleSegment, Point, TolerancePolicy, segment_segment_intersection,
)
from achievable_region.geometry.region_ops import Region, area, union
from achievable_region.services.cvr import construct_cvr, prune_obstacles
from achievable_region.services.shortest_path import (
    DistanceMap, circle_for_endpoint, dijkstra, effective_endpoints, geodesic_distance,
)
from achievable_region.services.visibility import build_visibility_graph, on_obstacle_interior

logger = logging.getLogger(__name__)

Algorithm = Literal["alg1", "alg2"]


@dataclass(frozen=True)
class ProblemInstance:
    obstacles: Sequence[ObstacleSegment]
    s: Point
    l: float

    def __post_init__(self):
        object.__setattr__(self, "obstacles", tuple(self.obstacles))


@dataclass
class RegionReport:
    region: Region
    effective_endpoints: int = 0
    valid_circles: int = 0
    cvrs_merged: int = 0
    elapsed: float = 0.0
    algorithm: str = "alg2"
    distances: Optional[DistanceMap] = field(default=None, repr=False)

    @property
    def loops(self) -> int:
        return len(self.region.loops)

    @property
    def holes(self) -> int:
        return self.region.hole_count

    @property
    def area(self) -> float:
        return area(self.region)


def validate_instance(inst: ProblemInstance, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> List[str]:
    """返回全部违反项（空列表表示合法）"""
    violations: List[str] = []
    if not (isinstance(inst.l, (int, float)) and math.isfinite(inst.l) and inst.l > 0.0):
        violations.append(f"l: must be positive and finite, got {inst.l}")

    obstacles = list(inst.obstacles)
    for o in obstacles:
        if o.length <= tol.eps_geom:
            violations.append(f"obstacles[{o.id}]: degenerate segment")
    boxes = [o.bbox() for o in obstacles]
    pad = tol.eps_geom
    for i in range(len(obstacles)):
        bi = boxes[i]
        for j in range(i + 1, len(obstacles)):
            bj = boxes[j]
            if bi[2] + pad < bj[0] or bj[2] + pad < bi[0] or bi[3] + pad < bj[1] or bj[3] + pad < bi[1]:
                continue
            hit = segment_segment_intersection(obstacles[i].endpoints, obstacles[j].endpoints, tol)
            if hit is not None:
                violations.append(f"obstacles[{obstacles[i].id}] and obstacles[{obstacles[j].id}]: not disjoint")

    if on_obstacle_interior(inst.s, obstacles, tol):
        violations.append(f"s: point on obstacle interior at {inst.s.as_tuple()}")
    return violations


def _require_valid(inst: ProblemInstance, tol: TolerancePolicy) -> None:
    violations = validate_instance(inst, tol)
    if violations:
        raise InstanceValidationError(violations)


def _endpoint_distances_alg1(inst: ProblemInstance, tol: TolerancePolicy) -> DistanceMap:
    """逐端点重建距离：每个端点单独跑一次 Dijkstra，组装成与 alg2 相同的距离表"""
    g = build_visibility_graph(inst.obstacles, [inst.s], tol)
    source = g.extra_index(0)
    n = len(g.nodes)
    merged = DistanceMap(inst.s, source, list(g.nodes), [math.inf] * n, [None] * n, g.endpoint_count)
    merged.dist[source] = 0.0
    for e in range(g.endpoint_count):
        single = dijkstra(g, source, target=e)
        merged.dist[e] = single.dist[e]
        merged.pred[e] = single.pred[e]
    return merged


def _cvr_or_empty(c: Circle, obstacles: Sequence[ObstacleSegment], tol: TolerancePolicy) -> ArcPolygon:
    # 半径不超过 eps_snap 的圆在顶点合并后退化为一点，不贡献面积
    if c.radius <= tol.eps_snap:
        return ArcPolygon((), empty=True)
    return construct_cvr(c, prune_obstacles(c, obstacles, tol), tol)


def compute_region(
    inst: ProblemInstance,
    algorithm: Algorithm = "alg2",
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> RegionReport:
    _require_valid(inst, tol)
    started = time.perf_counter()
    obstacles = list(inst.obstacles)

    logger.info(f"Step 1: 构建可见性图，障碍数量: {len(obstacles)}, 算法: {algorithm}")
    if algorithm == "alg1":
        logger.info(f"Step 2: 逐端点 Dijkstra，端点数量: {2 * len(obstacles)}")
        dm = _endpoint_distances_alg1(inst, tol)
    elif algorithm == "alg2":
        g = build_visibility_graph(obstacles, [inst.s], tol)
        logger.info(f"Step 2: Dijkstra 求源点到各端点的测地距离，节点: {len(g.nodes)}, 边: {g.edge_count}")
        dm = dijkstra(g, g.extra_index(0))
    else:
        raise ValueError(f"unknown algorithm: {algorithm}")

    effective = effective_endpoints(dm, inst.l)
    circles: List[Circle] = [Circle(inst.s, inst.l)]
    for e in effective:
        c = circle_for_endpoint(dm, e, inst.l)
        if c is not None:
            circles.append(c)
    logger.info(f"Step 3: 构造 CVR，有效端点: {len(effective)}, 有效圆: {len(circles) - 1}")
    polygons = [_cvr_or_empty(c, obstacles, tol) for c in circles]

    logger.info(f"Step 4: 区域求并，CVR 数量: {len(polygons)}")
    region = Region.empty()
    merged = 0
    for polygon in polygons:
        if polygon.empty:
            continue
        region = union(region, Region.from_polygon(polygon), tol)
        merged += 1

    report = RegionReport(
        region=region,
        effective_endpoints=len(effective),
        valid_circles=len(circles) - 1,
        cvrs_merged=merged,
        elapsed=time.perf_counter() - started,
        algorithm=algorithm,
        distances=dm,
    )
    logger.info(
        f"可达区域完成：环 {report.loops} 个（洞 {report.holes} 个），面积 {report.area:.9g}，"
        f"耗时 {report.elapsed:.3f}s"
    )
    return report


def achievable_region(
    inst: ProblemInstance,
    algorithm: Algorithm = "alg2",
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> Region:
    return compute_region(inst, algorithm, tol).region


def achievable_contains(inst: ProblemInstance, p: Point, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> bool:
    """真值判定：π(s,p) <= l，不经过区域构造"""
    return geodesic_distance(inst.obstacles, inst.s, p, tol) <= inst.l


def lemma1_witness(inst: ProblemInstance, p: Point, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> Region:
    """以 p 为圆心、剩余预算为半径的 CVR；若 p 可严格到达，它必然落在可达区域内"""
    d = geodesic_distance(inst.obstacles, inst.s, p, tol)
    if not d < inst.l:
        raise NotStrictlyAchievableError(f"not strictly achievable: π(s,p)={d} >= l={inst.l}")
    polygon = _cvr_or_empty(Circle(p, inst.l - d), list(inst.obstacles), tol)
    return Region.empty() if polygon.empty else Region.from_polygon(polygon)
