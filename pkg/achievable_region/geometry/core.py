# -*- coding: utf-8 -*-
"""
几何内核：基础类型、稳健谓词、圆弧运算与全局容差策略
- Point / ObstacleSegment / Circle / LineEdge / ArcEdge / ArcPolygon
- 所有类型构造后不可变，可在线程间共享；所有运算均为纯函数
- 浮点判定统一走 TolerancePolicy（eps_geom 绝对容差，eps_boundary 归属判定带宽）
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from achievable_region.config import EPS_BOUNDARY, EPS_GEOM
from achievable_region.errors import DegenerateGeometryError

TWO_PI = 2.0 * math.pi


# =========================
# 容差策略
# =========================
@dataclass(frozen=True)
class TolerancePolicy:
    eps_geom: float = EPS_GEOM            # 绝对几何容差
    eps_boundary: float = EPS_BOUNDARY    # membership 的边界带宽

    def __post_init__(self):
        if not (0.0 < self.eps_geom < self.eps_boundary):
            raise ValueError(
                f"tolerance policy requires 0 < eps_geom < eps_boundary, "
                f"got eps_geom={self.eps_geom}, eps_boundary={self.eps_boundary}"
            )

    @property
    def eps_snap(self) -> float:
        """顶点合并距离，介于 eps_geom 与 eps_boundary 之间（几何平均）"""
        return math.sqrt(self.eps_geom * self.eps_boundary)


DEFAULT_TOLERANCE = TolerancePolicy()


# =========================
# 基础类型
# =========================
@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        x, y = float(self.x), float(self.y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise DegenerateGeometryError(f"non-finite point ({self.x}, {self.y})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y

    def as_tuple(self) -> Tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True, slots=True)
class ObstacleSegment:
    a: Point
    b: Point
    id: int = 0

    def __post_init__(self):
        if distance(self.a, self.b) <= DEFAULT_TOLERANCE.eps_geom:
            raise DegenerateGeometryError(f"degenerate obstacle #{self.id}: endpoints coincide")

    @property
    def endpoints(self) -> Tuple[Point, Point]:
        return (self.a, self.b)

    @property
    def length(self) -> float:
        return distance(self.a, self.b)

    def bbox(self) -> Tuple[float, float, float, float]:
        return (min(self.a.x, self.b.x), min(self.a.y, self.b.y),
                max(self.a.x, self.b.x), max(self.a.y, self.b.y))


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        r = float(self.radius)
        if not (math.isfinite(r) and r > 0.0):
            raise DegenerateGeometryError(f"invalid circle: radius={self.radius}")
        object.__setattr__(self, "radius", r)

    def point_at_angle(self, theta: float) -> Point:
        return Point(self.center.x + self.radius * math.cos(theta),
                     self.center.y + self.radius * math.sin(theta))

    def bbox(self) -> Tuple[float, float, float, float]:
        c, r = self.center, self.radius
        return (c.x - r, c.y - r, c.x + r, c.y + r)


class Overlap(NamedTuple):
    """共线重叠段"""
    start: Point
    end: Point


Intersection = Union[None, Point, Overlap]


# =========================
# 基础谓词
# =========================
def distance(p: Point, q: Point) -> float:
    return math.hypot(q.x - p.x, q.y - p.y)


def cross(ax: float, ay: float, bx: float, by: float) -> float:
    return ax * by - ay * bx


def orientation(a: Point, b: Point, c: Point, eps: float = EPS_GEOM) -> int:
    """c 相对有向直线 ab 的侧向：1 左 / -1 右 / 0 共线（按点到直线距离与 eps 比较）"""
    dx, dy = b.x - a.x, b.y - a.y
    norm = math.hypot(dx, dy)
    if norm == 0.0:
        return 0
    d = cross(dx, dy, c.x - a.x, c.y - a.y) / norm
    if d > eps:
        return 1
    if d < -eps:
        return -1
    return 0


def polar_angle(center: Point, p: Point, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> float:
    """射线 center→p 相对水平向右射线的逆时针角，取值 [0, 2π)"""
    dx, dy = p.x - center.x, p.y - center.y
    if math.hypot(dx, dy) <= tol.eps_geom:
        raise DegenerateGeometryError("degenerate angle")
    return normalize_angle(math.atan2(dy, dx))


def normalize_angle(theta: float) -> float:
    theta = math.fmod(theta, TWO_PI)
    if theta < 0.0:
        theta += TWO_PI
    # -1e-17 + 2π 会舍入到 2π
    if theta >= TWO_PI:
        theta = 0.0
    return theta


def point_segment_distance(p: Point, a: Point, b: Point) -> float:
    dx, dy = b.x - a.x, b.y - a.y
    ll = dx * dx + dy * dy
    if ll == 0.0:
        return distance(p, a)
    t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / ll
    t = max(0.0, min(1.0, t))
    return math.hypot(a.x + t * dx - p.x, a.y + t * dy - p.y)


def segment_segment_intersection(
    s1: Tuple[Point, Point],
    s2: Tuple[Point, Point],
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> Intersection:
    """
    两条线段求交：
    - 真相交 / 端点接触 → Point（接近端点时直接返回端点坐标）
    - 共线重叠 → Overlap(start, end)，沿 s1 方向排列
    - 不相交 → None
    """
    eps = tol.eps_geom
    (a, b), (c, d) = s1, s2
    rx, ry = b.x - a.x, b.y - a.y
    qx, qy = d.x - c.x, d.y - c.y
    lr, lq = math.hypot(rx, ry), math.hypot(qx, qy)
    if lr <= eps or lq <= eps:
        raise DegenerateGeometryError("degenerate segment")
    wx, wy = c.x - a.x, c.y - a.y
    denom = cross(rx, ry, qx, qy)

    if abs(denom) <= eps * lr * lq:
        # 平行：先判断是否共线
        if abs(cross(rx, ry, wx, wy)) / lr > eps:
            return None
        t_c = (wx * rx + wy * ry) / (lr * lr)
        t_d = ((d.x - a.x) * rx + (d.y - a.y) * ry) / (lr * lr)
        (lo, p_lo), (hi, p_hi) = sorted(((t_c, c), (t_d, d)), key=lambda x: x[0])
        start = p_lo if lo >= 0.0 else a
        end = p_hi if hi <= 1.0 else b
        lo, hi = max(lo, 0.0), min(hi, 1.0)
        gap = (hi - lo) * lr
        if gap < -eps:
            return None
        if gap <= eps:
            return start
        return Overlap(start, end)

    t = cross(wx, wy, qx, qy) / denom
    u = cross(wx, wy, rx, ry) / denom
    et, eu = eps / lr, eps / lq
    if t < -et or t > 1.0 + et or u < -eu or u > 1.0 + eu:
        return None
    if abs(t) <= et:
        return a
    if abs(t - 1.0) <= et:
        return b
    if abs(u) <= eu:
        return c
    if abs(u - 1.0) <= eu:
        return d
    return Point(a.x + t * rx, a.y + t * ry)


def _line_circle_params(a: Point, b: Point, center: Point, radius: float) -> Optional[Tuple[float, float]]:
    """直线 a + t(b-a) 与圆的两个参数根（t0 <= t1），相离或相切返回 None"""
    dx, dy = b.x - a.x, b.y - a.y
    fx, fy = a.x - center.x, a.y - center.y
    qa = dx * dx + dy * dy
    qb = 2.0 * (fx * dx + fy * dy)
    qc = fx * fx + fy * fy - radius * radius
    disc = qb * qb - 4.0 * qa * qc
    if disc <= 0.0:
        return None
    sq = math.sqrt(disc)
    return (-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)


def clip_segment_to_circle(
    seg: Tuple[Point, Point],
    c: Circle,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> Optional[Tuple[Point, Point]]:
    """线段落在闭圆盘内的最大子段；仅相切于一点视为 None"""
    a, b = seg
    length = distance(a, b)
    if length <= tol.eps_geom:
        raise DegenerateGeometryError("degenerate segment")
    roots = _line_circle_params(a, b, c.center, c.radius)
    if roots is None:
        return None
    t0, t1 = roots
    lo, hi = max(t0, 0.0), min(t1, 1.0)
    if (hi - lo) * length <= tol.eps_geom:
        return None
    dx, dy = b.x - a.x, b.y - a.y
    start = a if t0 <= 0.0 else Point(a.x + lo * dx, a.y + lo * dy)
    end = b if t1 >= 1.0 else Point(a.x + hi * dx, a.y + hi * dy)
    return start, end


def ray_circle_exit(
    center: Point,
    through: Point,
    c: Circle,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> Point:
    """射线 center→through 与圆 c 的出射交点"""
    dx, dy = through.x - center.x, through.y - center.y
    length = math.hypot(dx, dy)
    if length <= tol.eps_geom:
        raise DegenerateGeometryError("degenerate ray")
    if distance(center, c.center) <= tol.eps_geom:
        k = c.radius / length
        return Point(center.x + dx * k, center.y + dy * k)
    roots = _line_circle_params(center, through, c.center, c.radius)
    if roots is None or roots[1] < 0.0:
        raise DegenerateGeometryError("ray misses circle")
    t = roots[1]
    return Point(center.x + t * dx, center.y + t * dy)


# =========================
# 边界边：直线边 / 圆弧边
# =========================
@dataclass(frozen=True, slots=True)
class LineEdge:
    start: Point
    end: Point

    def __post_init__(self):
        if distance(self.start, self.end) <= DEFAULT_TOLERANCE.eps_geom:
            raise DegenerateGeometryError("degenerate line edge")

    @property
    def length(self) -> float:
        return distance(self.start, self.end)

    def point_at(self, f: float) -> Point:
        return Point(self.start.x + f * (self.end.x - self.start.x),
                     self.start.y + f * (self.end.y - self.start.y))

    def bbox(self) -> Tuple[float, float, float, float]:
        s, e = self.start, self.end
        return (min(s.x, e.x), min(s.y, e.y), max(s.x, e.x), max(s.y, e.y))


@dataclass(frozen=True)
class ArcEdge:
    """
    逆时针圆弧：start → appendix → end
    - appendix（附加点）严格位于弧内部，用于区分优弧/劣弧
    - start 与 end 重合时表示整圆，appendix 取对径点
    """
    circle: Circle
    start: Point
    end: Point
    appendix: Point

    def __post_init__(self):
        # 分段后的切点可能带有 eps_snap 量级的偏移，这里只拦截明显错误
        band = DEFAULT_TOLERANCE.eps_boundary
        c, r = self.circle.center, self.circle.radius
        for name, p in (("start", self.start), ("end", self.end), ("appendix", self.appendix)):
            if abs(distance(c, p) - r) > band * max(1.0, r):
                raise DegenerateGeometryError(f"arc {name} {p.as_tuple()} is off its circle")
        eps = DEFAULT_TOLERANCE.eps_geom
        if distance(self.appendix, self.start) <= eps or distance(self.appendix, self.end) <= eps:
            raise DegenerateGeometryError("arc appendix coincides with an endpoint")
        if not self.is_full_circle:
            off = normalize_angle(self.angle_of(self.appendix) - self.start_angle)
            if not (0.0 < off < self.sweep):
                raise DegenerateGeometryError("arc appendix is outside the counter-clockwise sweep")

    @cached_property
    def is_full_circle(self) -> bool:
        return distance(self.start, self.end) <= DEFAULT_TOLERANCE.eps_geom

    def angle_of(self, p: Point) -> float:
        c = self.circle.center
        return normalize_angle(math.atan2(p.y - c.y, p.x - c.x))

    @cached_property
    def start_angle(self) -> float:
        return self.angle_of(self.start)

    @cached_property
    def sweep(self) -> float:
        if self.is_full_circle:
            return TWO_PI
        s = normalize_angle(self.angle_of(self.end) - self.start_angle)
        return s if s > 0.0 else TWO_PI

    @property
    def center(self) -> Point:
        return self.circle.center

    @property
    def radius(self) -> float:
        return self.circle.radius

    @property
    def length(self) -> float:
        return self.circle.radius * self.sweep

    def contains_angle(self, theta: float, slack: float = 0.0) -> bool:
        off = normalize_angle(theta - self.start_angle)
        return off <= self.sweep + slack or off >= TWO_PI - slack

    def point_at(self, f: float) -> Point:
        return self.circle.point_at_angle(self.start_angle + f * self.sweep)

    def bbox(self) -> Tuple[float, float, float, float]:
        c, r = self.circle.center, self.circle.radius
        xs = [self.start.x, self.end.x]
        ys = [self.start.y, self.end.y]
        for k, (ux, uy) in enumerate(((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))):
            if self.contains_angle(k * math.pi / 2.0):
                xs.append(c.x + r * ux)
                ys.append(c.y + r * uy)
        return (min(xs), min(ys), max(xs), max(ys))


Edge = Union[LineEdge, ArcEdge]


def make_arc(circle: Circle, start: Point, end: Point, sweep: Optional[float] = None) -> ArcEdge:
    """由起止点构造逆时针圆弧，appendix 取角度中点；sweep 缺省按起止点推算"""
    c = circle.center
    ts = normalize_angle(math.atan2(start.y - c.y, start.x - c.x))
    if sweep is None:
        if distance(start, end) <= DEFAULT_TOLERANCE.eps_geom:
            sweep = TWO_PI
        else:
            te = normalize_angle(math.atan2(end.y - c.y, end.x - c.x))
            sweep = normalize_angle(te - ts) or TWO_PI
    return ArcEdge(circle, start, end, circle.point_at_angle(ts + sweep / 2.0))


def full_circle_edge(circle: Circle) -> ArcEdge:
    start = Point(circle.center.x + circle.radius, circle.center.y)
    antipode = Point(circle.center.x - circle.radius, circle.center.y)
    return ArcEdge(circle, start, start, antipode)


def edge_length(edge: Edge) -> float:
    return edge.length


def edge_midpoint(edge: Edge) -> Point:
    return edge.point_at(0.5)


def edge_distance(edge: Edge, p: Point) -> float:
    """点到边（线段或圆弧）的最短距离"""
    if isinstance(edge, LineEdge):
        return point_segment_distance(p, edge.start, edge.end)
    c, r = edge.circle.center, edge.circle.radius
    d = distance(c, p)
    if d == 0.0:
        return r
    if edge.contains_angle(edge.angle_of(p)):
        return abs(d - r)
    return min(distance(p, edge.start), distance(p, edge.end))


def edge_area_term(edge: Edge) -> float:
    """格林公式下该边对有向面积的贡献：½∮(x dy − y dx)"""
    s, e = edge.start, edge.end
    if isinstance(edge, LineEdge):
        return 0.5 * (s.x * e.y - e.x * s.y)
    c, r = edge.circle.center, edge.circle.radius
    return 0.5 * (c.x * (e.y - s.y) - c.y * (e.x - s.x) + r * r * edge.sweep)


def edge_tangent(edge: Edge, at_start: bool) -> Tuple[float, float]:
    """边在起点（或终点）处的单位切向"""
    if isinstance(edge, LineEdge):
        dx, dy = edge.end.x - edge.start.x, edge.end.y - edge.start.y
    else:
        theta = edge.start_angle if at_start else edge.start_angle + edge.sweep
        dx, dy = -math.sin(theta), math.cos(theta)
    n = math.hypot(dx, dy)
    return dx / n, dy / n


# =========================
# 边与边求交（用于区域并运算）
# =========================
def _circle_circle_points(c1: Circle, c2: Circle) -> List[Point]:
    eps = DEFAULT_TOLERANCE.eps_geom
    (x1, y1), (x2, y2) = c1.center, c2.center
    dx, dy = x2 - x1, y2 - y1
    d = math.hypot(dx, dy)
    r1, r2 = c1.radius, c2.radius
    if d == 0.0 or d > r1 + r2 + eps or d < abs(r1 - r2) - eps:
        return []
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    ux, uy = dx / d, dy / d
    # 外切 / 内切：只有一个切点
    if abs(d - (r1 + r2)) <= eps or abs(d - abs(r1 - r2)) <= eps:
        return [Point(x1 + r1 * ux, y1 + r1 * uy) if a >= 0.0 else Point(x1 - r1 * ux, y1 - r1 * uy)]
    h = math.sqrt(max(r1 * r1 - a * a, 0.0))
    mx, my = x1 + a * ux, y1 + a * uy
    return [Point(mx - h * uy, my + h * ux), Point(mx + h * uy, my - h * ux)]


def _line_circle_points(a: Point, b: Point, circle: Circle) -> List[Point]:
    dx, dy = b.x - a.x, b.y - a.y
    ll = dx * dx + dy * dy
    t = ((circle.center.x - a.x) * dx + (circle.center.y - a.y) * dy) / ll
    foot = Point(a.x + t * dx, a.y + t * dy)
    gap = distance(foot, circle.center) - circle.radius
    if abs(gap) <= DEFAULT_TOLERANCE.eps_geom:
        # 相切：垂足即切点
        return [foot]
    if gap > 0.0:
        return []
    roots = _line_circle_params(a, b, circle.center, circle.radius)
    return [Point(a.x + s * dx, a.y + s * dy) for s in roots] if roots else []


def dedupe_points(points: Sequence[Point], snap: float) -> List[Point]:
    """去重（保留首次出现的点）"""
    out: List[Point] = []
    for p in points:
        if all(distance(p, q) > snap for q in out):
            out.append(p)
    return out


def edge_intersections(e1: Edge, e2: Edge, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> List[Point]:
    """
    两条边的交点与接触点：
    - 先收集落在对方边上的端点（接触、共线/共圆重叠的两端都由此得到）
    - 再补充真相交点；端点优先，保证两侧切分使用同一坐标
    """
    snap = tol.eps_snap
    found: List[Point] = []
    for p in (e1.start, e1.end):
        if edge_distance(e2, p) <= snap:
            found.append(p)
    for p in (e2.start, e2.end):
        if edge_distance(e1, p) <= snap:
            found.append(p)

    candidates: List[Point] = []
    if isinstance(e1, LineEdge) and isinstance(e2, LineEdge):
        hit = segment_segment_intersection((e1.start, e1.end), (e2.start, e2.end), tol)
        if isinstance(hit, Point):
            candidates.append(hit)
    elif isinstance(e1, LineEdge):
        candidates = _line_circle_points(e1.start, e1.end, e2.circle)
    elif isinstance(e2, LineEdge):
        candidates = _line_circle_points(e2.start, e2.end, e1.circle)
    else:
        same_circle = (distance(e1.center, e2.center) <= snap and abs(e1.radius - e2.radius) <= snap)
        if not same_circle:
            candidates = _circle_circle_points(e1.circle, e2.circle)

    for p in candidates:
        if edge_distance(e1, p) <= snap and edge_distance(e2, p) <= snap:
            found.append(p)
    return dedupe_points(found, snap)


def edge_param(edge: Edge, p: Point) -> float:
    """p 在边上的参数位置（线段：[0,1] 投影；圆弧：相对起点的逆时针角度）"""
    if isinstance(edge, LineEdge):
        dx, dy = edge.end.x - edge.start.x, edge.end.y - edge.start.y
        return ((p.x - edge.start.x) * dx + (p.y - edge.start.y) * dy) / (dx * dx + dy * dy)
    return normalize_angle(edge.angle_of(p) - edge.start_angle)


def split_edge(edge: Edge, cuts: Sequence[Point], snap: float) -> List[Edge]:
    """按切点把一条边拆成若干子边；切点直接作为子边端点以保证共享坐标"""
    inner = [p for p in cuts if distance(p, edge.start) > snap and distance(p, edge.end) > snap]
    if not inner:
        return [edge]
    inner.sort(key=lambda p: edge_param(edge, p))
    stops: List[Point] = [edge.start]
    for p in inner:
        if distance(p, stops[-1]) > snap:
            stops.append(p)
    stops.append(edge.end)
    if distance(stops[-2], stops[-1]) <= snap and len(stops) > 2:
        stops.pop(-2)

    pieces: List[Edge] = []
    if isinstance(edge, LineEdge):
        for s, e in zip(stops, stops[1:]):
            pieces.append(LineEdge(s, e))
        return pieces
    params = [edge_param(edge, p) for p in stops[:-1]] + [edge.sweep]
    for (s, e), (ts, te) in zip(zip(stops, stops[1:]), zip(params, params[1:])):
        mid = edge.circle.point_at_angle(edge.start_angle + (ts + te) / 2.0)
        pieces.append(ArcEdge(edge.circle, s, e, mid))
    return pieces


# =========================
# 最大化边：合并相邻共线/共圆边
# =========================
def _try_merge(e1: Edge, e2: Edge, tol: TolerancePolicy) -> Optional[Edge]:
    snap = tol.eps_snap
    if isinstance(e1, LineEdge) and isinstance(e2, LineEdge):
        if distance(e1.start, e2.end) <= snap:
            return None
        d1 = edge_tangent(e1, True)
        d2 = edge_tangent(e2, True)
        if d1[0] * d2[0] + d1[1] * d2[1] <= 0.0:
            return None
        if point_segment_distance(e1.end, e1.start, e2.end) > tol.eps_geom:
            return None
        return LineEdge(e1.start, e2.end)
    if isinstance(e1, ArcEdge) and isinstance(e2, ArcEdge):
        if distance(e1.center, e2.center) > snap or abs(e1.radius - e2.radius) > snap:
            return None
        total = e1.sweep + e2.sweep
        if total > TWO_PI + 1e-9:
            return None
        if distance(e2.end, e1.start) <= snap:
            return full_circle_edge_from(e1.circle, e1.start)
        return ArcEdge(e1.circle, e1.start, e2.end, e1.end)
    return None


def full_circle_edge_from(circle: Circle, start: Point) -> ArcEdge:
    c = circle.center
    return ArcEdge(circle, start, start, Point(2.0 * c.x - start.x, 2.0 * c.y - start.y))


def merge_collinear_edges(edges: Sequence[Edge], tol: TolerancePolicy = DEFAULT_TOLERANCE) -> List[Edge]:
    """把环上相邻的共线直线边、同圆圆弧边合并成最大边"""
    out = list(edges)
    changed = True
    while changed and len(out) > 1:
        changed = False
        merged: List[Edge] = []
        for e in out:
            if merged:
                m = _try_merge(merged[-1], e, tol)
                if m is not None:
                    merged[-1] = m
                    changed = True
                    continue
            merged.append(e)
        # 首尾衔接
        if len(merged) > 1:
            m = _try_merge(merged[-1], merged[0], tol)
            if m is not None:
                merged[0] = m
                merged.pop()
                changed = True
        out = merged
    return out


# =========================
# 圆弧多边形（一个 CVR 或区域的一条边界环）
# =========================
@dataclass(frozen=True)
class ArcPolygon:
    edges: Tuple[Edge, ...]
    empty: bool = False   # 半径小于 eps_geom 的退化 CVR，不贡献面积
    _area: float = field(default=0.0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.empty:
            object.__setattr__(self, "edges", ())
            return
        if not self.edges:
            raise DegenerateGeometryError("arc polygon needs at least one edge")
        band = DEFAULT_TOLERANCE.eps_boundary
        n = len(self.edges)
        for i, e in enumerate(self.edges):
            nxt = self.edges[(i + 1) % n]
            if distance(e.end, nxt.start) > band:
                raise DegenerateGeometryError(
                    f"arc polygon not closed at edge {i}: {e.end.as_tuple()} -> {nxt.start.as_tuple()}"
                )
        object.__setattr__(self, "_area", sum(edge_area_term(e) for e in self.edges))

    @property
    def signed_area(self) -> float:
        return self._area

    @property
    def orientation(self) -> str:
        return "ccw" if self._area >= 0.0 else "cw"

    @property
    def vertices(self) -> List[Point]:
        return [e.start for e in self.edges]

    def bbox(self) -> Tuple[float, float, float, float]:
        if self.empty:
            raise DegenerateGeometryError("empty arc polygon has no bounding box")
        boxes = [e.bbox() for e in self.edges]
        return (min(b[0] for b in boxes), min(b[1] for b in boxes),
                max(b[2] for b in boxes), max(b[3] for b in boxes))


def full_circle_polygon(circle: Circle) -> ArcPolygon:
    return ArcPolygon((full_circle_edge(circle),))
