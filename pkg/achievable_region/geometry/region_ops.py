# -*- coding: utf-8 -*-
"""
区域运算：圆弧多边形的布尔并、点归属判定与精确面积
- union：所有边在两两交点处细分 → 按右侧探测点分类保留 → 去重 → 按端点重新缝合成环
- membership：水平（必要时旋转）射线穿越计数，推广到圆弧边；距边界 eps_boundary 内判为 Boundary
- area：格林公式（直线边鞋带项 + 圆弧边扇形修正），洞为负面积
"""
from __future__ import annotations

import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from achievable_region.geometry.core import (
    DEFAULT_TOLERANCE, TWO_PI, ArcEdge, ArcPolygon, Edge, LineEdge, Point, TolerancePolicy,
    distance, edge_distance, edge_intersections, edge_length, edge_midpoint, edge_tangent,
    merge_collinear_edges, normalize_angle, split_edge,
)

logger = logging.getLogger(__name__)


class Membership(str, Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Region:
    """若干有向环：外环逆时针，洞为顺时针"""
    loops: Tuple[ArcPolygon, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "loops", tuple(lp for lp in self.loops if not lp.empty))

    @classmethod
    def empty(cls) -> "Region":
        return cls(())

    @classmethod
    def from_polygon(cls, polygon: ArcPolygon) -> "Region":
        return cls((polygon,))

    @property
    def edges(self) -> List[Edge]:
        return [e for lp in self.loops for e in lp.edges]

    @property
    def outer_count(self) -> int:
        return sum(1 for lp in self.loops if lp.orientation == "ccw")

    @property
    def hole_count(self) -> int:
        return sum(1 for lp in self.loops if lp.orientation == "cw")

    def is_empty(self) -> bool:
        return not self.loops


# =========================
# 面积与包围盒
# =========================
def area(r: Region) -> float:
    return sum(lp.signed_area for lp in r.loops)


def bounding_box(r: Region) -> Optional[Tuple[float, float, float, float]]:
    if r.is_empty():
        return None
    boxes = [lp.bbox() for lp in r.loops]
    return (min(b[0] for b in boxes), min(b[1] for b in boxes),
            max(b[2] for b in boxes), max(b[3] for b in boxes))


# =========================
# 点归属
# =========================
# 备选射线方向（弧度）；射线贴近某个顶点时换下一个
_RAY_DIRECTIONS = (0.0, 0.6154797, 1.9033101, 2.7181746, 3.9270612, 4.6211235, 5.3715629, 1.2490458)


def _line_crossing(s: Point, e: Point, px: float, py: float, cos_t: float, sin_t: float) -> int:
    # 旋转到射线方向为 +x 的局部坐标
    sx, sy = s.x - px, s.y - py
    ex, ey = e.x - px, e.y - py
    s_y = -sx * sin_t + sy * cos_t
    e_y = -ex * sin_t + ey * cos_t
    if (s_y > 0.0) == (e_y > 0.0):
        return 0
    s_x = sx * cos_t + sy * sin_t
    e_x = ex * cos_t + ey * sin_t
    x = s_x + (e_x - s_x) * (-s_y) / (e_y - s_y)
    if x <= 0.0:
        return 0
    return 1 if e_y > 0.0 else -1


def _arc_crossing(arc: ArcEdge, px: float, py: float, theta: float, cos_t: float, sin_t: float) -> int:
    c, r = arc.circle.center, arc.circle.radius
    cx, cy = c.x - px, c.y - py
    lx = cx * cos_t + cy * sin_t
    ly = -cx * sin_t + cy * cos_t
    k = -ly / r
    if k <= -1.0 or k >= 1.0:
        return 0
    t_up = math.asin(k)               # 右侧交点，逆时针经过时向上穿越
    t_down = math.pi - t_up           # 左侧交点，向下穿越
    half = r * math.cos(t_up)
    start_local = arc.start_angle - theta
    count = 0
    for t, x, sign in ((t_up, lx + half, 1), (t_down, lx - half, -1)):
        if x <= 0.0:
            continue
        off = normalize_angle(t - start_local)
        if 0.0 < off < arc.sweep or (arc.is_full_circle and off == 0.0):
            count += sign
    return count


def _ray_is_clear(vertices: Sequence[Point], px: float, py: float, cos_t: float, sin_t: float, band: float) -> bool:
    for v in vertices:
        vx, vy = v.x - px, v.y - py
        if vx * cos_t + vy * sin_t > -band and abs(-vx * sin_t + vy * cos_t) <= band:
            return False
    return True


def winding_number(edges: Sequence[Edge], p: Point, band: float) -> int:
    """射线穿越计数求环绕数；自动避开穿过顶点的射线方向"""
    vertices = [e.start for e in edges]
    chosen = _RAY_DIRECTIONS[0]
    for theta in _RAY_DIRECTIONS:
        if _ray_is_clear(vertices, p.x, p.y, math.cos(theta), math.sin(theta), band):
            chosen = theta
            break
    else:
        logger.debug(f"({p.x}, {p.y}) 没有避开顶点的射线方向，退回水平射线")
    cos_t, sin_t = math.cos(chosen), math.sin(chosen)
    total = 0
    for e in edges:
        if isinstance(e, LineEdge):
            total += _line_crossing(e.start, e.end, p.x, p.y, cos_t, sin_t)
        else:
            total += _arc_crossing(e, p.x, p.y, chosen, cos_t, sin_t)
    return total


def membership(
    r: Region,
    p: Point,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
    band: Optional[float] = None,
) -> Membership:
    band = tol.eps_boundary if band is None else band
    edges = r.edges
    if not edges:
        return Membership.OUTSIDE
    for e in edges:
        x0, y0, x1, y1 = e.bbox()
        if x0 - band <= p.x <= x1 + band and y0 - band <= p.y <= y1 + band:
            if edge_distance(e, p) <= band:
                return Membership.BOUNDARY
    return Membership.INSIDE if winding_number(edges, p, band / 2.0) != 0 else Membership.OUTSIDE


def sample_inside(r: Region, count: int, rng: np.random.Generator, max_draws: int = 200_000) -> List[Point]:
    """在区域包围盒内拒绝采样 count 个 Inside 点"""
    box = bounding_box(r)
    if box is None or count <= 0:
        return []
    x0, y0, x1, y1 = box
    out: List[Point] = []
    draws = 0
    while len(out) < count and draws < max_draws:
        batch = rng.uniform((x0, y0), (x1, y1), size=(max(count, 64), 2))
        draws += len(batch)
        for x, y in batch:
            p = Point(float(x), float(y))
            if membership(r, p) is Membership.INSIDE:
                out.append(p)
                if len(out) == count:
                    break
    return out


# =========================
# 布尔并
# =========================
def _boxes_overlap(a: Tuple[float, float, float, float], b: Tuple[float, float, float, float], pad: float) -> bool:
    return a[0] - pad <= b[2] and b[0] - pad <= a[2] and a[1] - pad <= b[3] and b[1] - pad <= a[3]


def _right_probe(edge: Edge, offset: float) -> Point:
    """边中点向右侧（区域外侧）偏移 offset 的探测点"""
    m = edge_midpoint(edge)
    if isinstance(edge, LineEdge):
        tx, ty = edge_tangent(edge, True)
    else:
        theta = edge.start_angle + edge.sweep / 2.0
        tx, ty = -math.sin(theta), math.cos(theta)
    return Point(m.x + offset * ty, m.y - offset * tx)


def _keep_piece(piece: Edge, other: Region, tol: TolerancePolicy) -> bool:
    """子边保留条件：其右侧（本区域外侧）不在另一区域内部"""
    snap = tol.eps_snap
    m = edge_midpoint(piece)
    status = membership(other, m, tol, band=snap)
    if status is Membership.INSIDE:
        return False
    if status is Membership.OUTSIDE:
        return True
    # 与另一区域边界重合：用右侧探测点决定
    probe = _right_probe(piece, 10.0 * snap)
    return membership(other, probe, tol, band=snap) is not Membership.INSIDE


def _subdivide(mine: List[Edge], theirs: List[Edge], tol: TolerancePolicy) -> Tuple[List[List[Point]], List[List[Point]]]:
    cuts_mine: List[List[Point]] = [[] for _ in mine]
    cuts_theirs: List[List[Point]] = [[] for _ in theirs]
    boxes_theirs = [e.bbox() for e in theirs]
    pad = tol.eps_snap
    for i, e1 in enumerate(mine):
        b1 = e1.bbox()
        for j, e2 in enumerate(theirs):
            if not _boxes_overlap(b1, boxes_theirs[j], pad):
                continue
            for p in edge_intersections(e1, e2, tol):
                cuts_mine[i].append(p)
                cuts_theirs[j].append(p)
    return cuts_mine, cuts_theirs


class _PointIndex:
    """网格哈希：按 snap 距离查找邻近端点"""

    def __init__(self, cell: float):
        self.cell = cell
        self._grid: Dict[Tuple[int, int], List[int]] = defaultdict(list)
        self._points: List[Point] = []

    def _key(self, p: Point) -> Tuple[int, int]:
        return (math.floor(p.x / self.cell), math.floor(p.y / self.cell))

    def add(self, p: Point, idx: int) -> None:
        self._grid[self._key(p)].append(idx)
        while len(self._points) <= idx:
            self._points.append(p)
        self._points[idx] = p

    def near(self, p: Point, radius: float) -> List[int]:
        kx, ky = self._key(p)
        out = []
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for idx in self._grid.get((kx + dx, ky + dy), ()):
                    if distance(self._points[idx], p) <= radius:
                        out.append(idx)
        return out


def _same_piece(e1: Edge, e2: Edge, snap: float) -> bool:
    if type(e1) is not type(e2):
        return False
    if distance(e1.start, e2.start) > snap or distance(e1.end, e2.end) > snap:
        return False
    if isinstance(e1, ArcEdge):
        return distance(e1.center, e2.center) <= snap and abs(e1.radius - e2.radius) <= snap
    return True


def _dedupe_pieces(pieces: List[Edge], snap: float) -> List[Edge]:
    index = _PointIndex(max(snap * 4.0, 1e-12))
    kept: List[Edge] = []
    for piece in pieces:
        if any(_same_piece(kept[k], piece, snap) for k in index.near(piece.start, snap)):
            continue
        index.add(piece.start, len(kept))
        kept.append(piece)
    return kept


def _near_point(edge: Edge, at_start: bool) -> Point:
    f = min(1e-3 / edge_length(edge), 0.25)
    return edge.point_at(f if at_start else 1.0 - f)


def _turn_angle(incoming: Edge, outgoing: Edge) -> float:
    """连接点处 incoming → outgoing 的有向转角（左转为正），用两条边上的近邻点计算"""
    a = _near_point(incoming, at_start=False)
    v = incoming.end
    b = _near_point(outgoing, at_start=True)
    d1x, d1y = v.x - a.x, v.y - a.y
    d2x, d2y = b.x - v.x, b.y - v.y
    return math.atan2(d1x * d2y - d1y * d2x, d1x * d2x + d1y * d2y)


def stitch_loops(pieces: List[Edge], tol: TolerancePolicy = DEFAULT_TOLERANCE) -> List[ArcPolygon]:
    """按端点把子边缝合成闭环；同一顶点有多条出边时取左转最大的一条"""
    snap = tol.eps_snap
    index = _PointIndex(max(snap * 4.0, 1e-12))
    for i, piece in enumerate(pieces):
        index.add(piece.start, i)
    used = [False] * len(pieces)
    loops: List[ArcPolygon] = []

    for first in range(len(pieces)):
        if used[first]:
            continue
        used[first] = True
        chain = [first]
        origin = pieces[first].start
        closed = False
        while True:
            cur = pieces[chain[-1]]
            if distance(cur.end, origin) <= snap:
                closed = True
                break
            options = [k for k in index.near(cur.end, snap) if not used[k]]
            if not options:
                break
            nxt = max(options, key=lambda k: _turn_angle(cur, pieces[k]))
            used[nxt] = True
            chain.append(nxt)
        if not closed:
            logger.warning(
                f"无法闭合的边界链已丢弃：{len(chain)} 段，起点 {origin.as_tuple()}"
            )
            continue
        edges = merge_collinear_edges(_close_chain([pieces[k] for k in chain], snap), tol)
        polygon = ArcPolygon(tuple(edges))
        if abs(polygon.signed_area) <= tol.eps_geom:
            continue
        loops.append(polygon)
    return loops


def _close_chain(edges: List[Edge], snap: float) -> List[Edge]:
    """把环上相邻边的衔接点统一成同一坐标（取后一条边的起点）"""
    out: List[Edge] = []
    n = len(edges)
    for i, e in enumerate(edges):
        nxt_start = edges[(i + 1) % n].start
        if e.end == nxt_start or distance(e.end, nxt_start) > snap:
            out.append(e)
            continue
        if isinstance(e, LineEdge):
            out.append(LineEdge(e.start, nxt_start))
        elif e.is_full_circle:
            out.append(e)
        else:
            out.append(ArcEdge(e.circle, e.start, nxt_start, e.appendix))
    return out


def union(a: Region, b: Region, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> Region:
    """点集并；输出环方向正确，边为最大边"""
    if a.is_empty():
        return b
    if b.is_empty():
        return a
    edges_a, edges_b = a.edges, b.edges
    cuts_a, cuts_b = _subdivide(edges_a, edges_b, tol)
    snap = tol.eps_snap

    pieces: List[Edge] = []
    for edge, cuts in zip(edges_a, cuts_a):
        pieces.extend(p for p in split_edge(edge, cuts, snap) if _keep_piece(p, b, tol))
    for edge, cuts in zip(edges_b, cuts_b):
        pieces.extend(p for p in split_edge(edge, cuts, snap) if _keep_piece(p, a, tol))

    pieces = _dedupe_pieces(pieces, snap)
    loops = stitch_loops(pieces, tol)
    return Region(tuple(loops))


def union_all(regions: Iterable[Region], tol: TolerancePolicy = DEFAULT_TOLERANCE) -> Region:
    """确定顺序的左折叠"""
    acc = Region.empty()
    for r in regions:
        acc = union(acc, r, tol)
    return acc
