# -*- coding: utf-8 -*-
"""
圆可见区域（CVR）：圆内障碍剪枝 + 旋转扫描构造
- prune_obstacles：包围盒预筛，再把每条障碍裁剪到闭圆盘内
- construct_cvr：以圆心为极点按极角扫描端点事件；活动障碍按“当前射线上到圆心的距离”有序存放（SortedList），
  每个角区间内最近的障碍给出一段直线边界，没有障碍时给出一段圆弧；相邻区间半径不连续处补一条径向边
"""
from __future__ import annotations

import bisect
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from sortedcontainers import SortedList

from achievable_region.errors import PointOnObstacleError
from achievable_region.geometry.core import (
    DEFAULT_TOLERANCE, TWO_PI, ArcPolygon, Circle, Edge, LineEdge, ObstacleSegment, Point, TolerancePolicy,
    clip_segment_to_circle, cross, distance, full_circle_edge, make_arc, merge_collinear_edges,
    orientation, point_segment_distance, polar_angle,
)

logger = logging.getLogger(__name__)

# 极角相差小于此值的事件合并为同一事件
ANGLE_MERGE = 1e-12


# =========================
# 剪枝
# =========================
def prune_obstacles(
    c: Circle,
    obstacles: Sequence[ObstacleSegment],
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> List[ObstacleSegment]:
    """只保留与闭圆盘相交的部分；完全在圆外（或仅相切）的障碍被丢弃"""
    cx0, cy0, cx1, cy1 = c.bbox()
    out: List[ObstacleSegment] = []
    for o in obstacles:
        x0, y0, x1, y1 = o.bbox()
        if x1 < cx0 or x0 > cx1 or y1 < cy0 or y0 > cy1:
            continue
        clipped = clip_segment_to_circle(o.endpoints, c, tol)
        if clipped is None:
            continue
        start, end = clipped
        out.append(o if (start is o.a and end is o.b) else ObstacleSegment(start, end, o.id))
    return out


# =========================
# 扫描状态
# =========================
def _ray_hit(center: Point, theta: float, seg: ObstacleSegment) -> Optional[Tuple[float, Point]]:
    """射线 center + t(cosθ, sinθ) 与线段的交点；返回 (t, 线段上的点)，不相交返回 None"""
    dx, dy = math.cos(theta), math.sin(theta)
    ex, ey = seg.b.x - seg.a.x, seg.b.y - seg.a.y
    denom = cross(dx, dy, ex, ey)
    if abs(denom) <= 1e-15 * math.hypot(ex, ey):
        return None
    wx, wy = seg.a.x - center.x, seg.a.y - center.y
    t = cross(wx, wy, ex, ey) / denom
    u = cross(wx, wy, dx, dy) / denom
    if t < 0.0 or u < -1e-9 or u > 1.0 + 1e-9:
        return None
    u = min(max(u, 0.0), 1.0)
    return t, Point(seg.a.x + u * ex, seg.a.y + u * ey)


class _SweepRay:
    """当前比较射线（所有活动障碍共享）"""

    def __init__(self, center: Point):
        self.center = center
        self.angle = 0.0


class _ActiveObstacle:
    """活动集合中的障碍：按当前射线上的命中距离排序，距离相同时按 id"""

    __slots__ = ("seg", "ray", "start_event", "end_event")

    def __init__(self, seg: ObstacleSegment, ray: _SweepRay, start_event: int, end_event: int):
        self.seg = seg
        self.ray = ray
        self.start_event = start_event
        self.end_event = end_event

    @property
    def wraps(self) -> bool:
        return self.start_event > self.end_event

    def active_in(self, k: int) -> bool:
        if self.wraps:
            return k < self.end_event or k >= self.start_event
        return self.start_event <= k < self.end_event

    def key(self) -> Tuple[float, int]:
        hit = _ray_hit(self.ray.center, self.ray.angle, self.seg)
        if hit is None:
            # 射线恰好擦过：用较近端点的距离近似
            d = min(distance(self.ray.center, self.seg.a), distance(self.ray.center, self.seg.b))
            return d, self.seg.id
        return hit[0], self.seg.id

    def __lt__(self, other: "_ActiveObstacle") -> bool:
        return self.key() < other.key()

    def __repr__(self):
        return f"<active #{self.seg.id} {self.seg.a.as_tuple()}->{self.seg.b.as_tuple()}>"


@dataclass
class SweepState:
    center: Point
    radius: float
    events: List[float]
    obstacles: List[_ActiveObstacle]
    ray: _SweepRay
    active: SortedList = field(default_factory=SortedList)
    output: List[Tuple[str, Point, Point]] = field(default_factory=list)   # (kind, 起点, 终点)

    def interval(self, k: int) -> Tuple[float, float]:
        return self.events[k], self.events[k + 1]

    def mid_angle(self, k: int) -> float:
        lo, hi = self.interval(k)
        return 0.5 * (lo + hi)

    def insert(self, item: _ActiveObstacle, k: int) -> None:
        self.ray.angle = self.mid_angle(k)
        self.active.add(item)

    def remove(self, item: _ActiveObstacle, k: int) -> None:
        self.ray.angle = self.mid_angle(k)
        try:
            self.active.remove(item)
        except ValueError:
            # 比较噪声导致二分定位失败：按对象身份查找
            for idx, other in enumerate(self.active):
                if other is item:
                    del self.active[idx]
                    return
            logger.warning(f"扫描删除失败：活动集合中找不到障碍 #{item.seg.id}")

    def nearest(self, k: int) -> Optional[_ActiveObstacle]:
        if not self.active:
            return None
        self.ray.angle = self.mid_angle(k)
        return self.active[0]


def _event_index(events: List[float], theta: float) -> int:
    i = bisect.bisect_left(events, theta - ANGLE_MERGE)
    if i < len(events) and abs(events[i] - theta) <= ANGLE_MERGE:
        return i
    # 合并后的事件可能偏离原角度一点点：取最近者
    j = min(range(max(i - 1, 0), min(i + 1, len(events) - 1) + 1), key=lambda k: abs(events[k] - theta))
    return j


def _merge_angles(raw: List[float]) -> List[float]:
    merged: List[float] = []
    for t in sorted(raw):
        if not merged or t - merged[-1] > ANGLE_MERGE:
            merged.append(t)
    merged[0] = 0.0
    if TWO_PI - merged[-1] <= ANGLE_MERGE:
        merged[-1] = TWO_PI
    else:
        merged.append(TWO_PI)
    return merged


def _prepare_sweep(c: Circle, candidates: Sequence[ObstacleSegment], tol: TolerancePolicy) -> Optional[SweepState]:
    """计算每条障碍的逆时针角区间并建立事件序列；没有可用障碍时返回 None"""
    p, eps = c.center, tol.eps_geom
    oriented: List[Tuple[ObstacleSegment, float, float]] = []
    for o in candidates:
        if distance(p, o.a) <= eps or distance(p, o.b) <= eps:
            continue
        if orientation(o.a, o.b, p, eps) == 0:
            if point_segment_distance(p, o.a, o.b) <= eps:
                raise PointOnObstacleError(f"point on obstacle interior: CVR center {p.as_tuple()} on #{o.id}")
            # 与圆心共线的障碍只挡住一条射线
            continue
        first, second = (o.a, o.b) if cross(o.a.x - p.x, o.a.y - p.y, o.b.x - p.x, o.b.y - p.y) > 0.0 else (o.b, o.a)
        oriented.append((ObstacleSegment(first, second, o.id), polar_angle(p, first, tol), polar_angle(p, second, tol)))
    if not oriented:
        return None

    raw = [0.0, TWO_PI]
    for _, ts, te in oriented:
        raw.extend((ts, te))
    events = _merge_angles(raw)
    last = len(events) - 1
    ray = _SweepRay(p)
    items: List[_ActiveObstacle] = []
    for seg, ts, te in oriented:
        ks, ke = _event_index(events, ts), _event_index(events, te)
        if ks == last:
            ks = 0
        if ke == 0:
            ke = last
        if ks == ke:
            continue
        items.append(_ActiveObstacle(seg, ray, ks, ke))
    if not items:
        return None
    return SweepState(p, c.radius, events, items, ray)


def _line_piece(state: SweepState, item: _ActiveObstacle, k: int) -> Optional[Tuple[Point, Point]]:
    """最近障碍在区间 k 内被看到的部分；区间端点落在障碍端点事件上时直接取端点坐标"""
    lo, hi = state.interval(k)
    if item.start_event == k:
        start = item.seg.a
    else:
        hit = _ray_hit(state.center, lo, item.seg)
        if hit is None:
            return None
        start = hit[1]
    if item.end_event == k + 1:
        end = item.seg.b
    else:
        hit = _ray_hit(state.center, hi, item.seg)
        if hit is None:
            return None
        end = hit[1]
    return start, end


def _interval_piece(state: SweepState, k: int, circle: Circle) -> Tuple[str, Point, Point]:
    lo, hi = state.interval(k)
    item = state.nearest(k)
    if item is None:
        return "arc", circle.point_at_angle(lo), circle.point_at_angle(hi)
    piece = _line_piece(state, item, k)
    if piece is None:
        # 树中最小元素求交失败：直接扫描该区间的全部活动障碍
        mid = state.mid_angle(k)
        scored = []
        for cand in state.obstacles:
            if cand.active_in(k):
                hit = _ray_hit(state.center, mid, cand.seg)
                if hit is not None:
                    scored.append((hit[0], cand.seg.id, cand))
        scored.sort(key=lambda x: (x[0], x[1]))
        logger.warning(
            f"射线求交失败：障碍 #{item.seg.id}，角区间 [{lo}, {hi}]，圆心 "
            f"{state.center.as_tuple()}；已重扫 {len(scored)} 条活动障碍"
        )
        for _, _, cand in scored:
            piece = _line_piece(state, cand, k)
            if piece is not None:
                break
    if piece is None:
        return "arc", circle.point_at_angle(lo), circle.point_at_angle(hi)
    return "line", piece[0], piece[1]


def _piece_edge(kind: str, start: Point, end: Point, circle: Circle, lo: float, hi: float, eps: float) -> Optional[Edge]:
    if kind == "line":
        if distance(start, end) <= eps:
            return None
        return LineEdge(start, end)
    if circle.radius * (hi - lo) <= 4.0 * eps:
        return None
    return make_arc(circle, start, end, sweep=hi - lo)


def construct_cvr(
    c: Circle,
    candidates: Sequence[ObstacleSegment],
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> ArcPolygon:
    """圆心可见、且位于闭圆盘内的点集；输出为逆时针闭合的圆弧多边形"""
    eps = tol.eps_geom
    if c.radius <= eps:
        return ArcPolygon((), empty=True)

    state = _prepare_sweep(c, candidates, tol)
    if state is None:
        return ArcPolygon((full_circle_edge(c),))

    starts: dict = {}
    ends: dict = {}
    for item in state.obstacles:
        starts.setdefault(item.start_event, []).append(item)
        ends.setdefault(item.end_event, []).append(item)
        # 初始射线（角 0）穿过的障碍
        if item.wraps or item.start_event == 0:
            state.insert(item, 0)

    for k in range(len(state.events) - 1):
        if k > 0:
            for item in ends.get(k, ()):
                state.remove(item, k - 1)
            for item in starts.get(k, ()):
                state.insert(item, k)
        state.output.append(_interval_piece(state, k, c))

    # 相邻区间在事件射线上衔接：重合则并点，否则补一条径向边
    edges: List[Edge] = []
    for k, (kind, start, end) in enumerate(state.output):
        lo, hi = state.interval(k)
        if edges and distance(edges[-1].end, start) <= eps:
            start = edges[-1].end
        edge = _piece_edge(kind, start, end, c, lo, hi, eps)
        if edge is None:
            continue
        if edges and edges[-1].end != edge.start:
            edges.append(LineEdge(edges[-1].end, edge.start))
        edges.append(edge)
    # 0 与 2π 是同一条射线
    if distance(edges[-1].end, edges[0].start) > eps:
        edges.append(LineEdge(edges[-1].end, edges[0].start))

    edges = merge_collinear_edges(edges, tol)
    polygon = ArcPolygon(tuple(edges))
    logger.debug(
        f"CVR 圆心 {c.center.as_tuple()} r={c.radius:.6g}：障碍 {len(state.obstacles)}，"
        f"事件 {len(state.events)}，边 {len(edges)}，面积={polygon.signed_area:.6g}"
    )
    return polygon
