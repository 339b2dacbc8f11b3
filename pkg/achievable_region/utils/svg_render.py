# -*- coding: utf-8 -*-
"""
SVG 渲染：障碍（黑色）、源点（圆点）、预算圆（虚线）、区域边界（实线）
- 画布 y 轴翻转（数学坐标 y 向上）；因此逆时针圆弧的 sweep-flag 为 0
- 每个环一条 path，每条障碍一条 path；源点和预算圆用 circle 元素
"""
from pathlib import Path
from typing import List, Optional, Tuple, Union

import svgwrite

from achievable_region.geometry.core import ArcEdge, Edge, LineEdge, Point
from achievable_region.geometry.region_ops import Region, bounding_box
from achievable_region.services.pipeline import ProblemInstance


def _fmt(v: float) -> str:
    return f"{v:.9g}"


def _xy(p: Point) -> str:
    return f"{_fmt(p.x)} {_fmt(-p.y)}"


def _arc_command(e: ArcEdge) -> List[str]:
    r = _fmt(e.radius)
    if e.is_full_circle:
        # 整圆拆成两段半圆
        return [f"A {r} {r} 0 0 0 {_xy(e.appendix)}", f"A {r} {r} 0 0 0 {_xy(e.end)}"]
    large = 1 if e.sweep > 3.141592653589793 else 0
    return [f"A {r} {r} 0 {large} 0 {_xy(e.end)}"]


def loop_path_data(edges: Tuple[Edge, ...]) -> str:
    parts = [f"M {_xy(edges[0].start)}"]
    for e in edges:
        if isinstance(e, LineEdge):
            parts.append(f"L {_xy(e.end)}")
        else:
            parts.extend(_arc_command(e))
    parts.append("Z")
    return " ".join(parts)


def _viewbox(inst: ProblemInstance, region: Region, pad_ratio: float = 0.05) -> Tuple[float, float, float, float]:
    s, l = inst.s, inst.l
    xs = [s.x - l, s.x + l]
    ys = [s.y - l, s.y + l]
    for o in inst.obstacles:
        xs.extend((o.a.x, o.b.x))
        ys.extend((o.a.y, o.b.y))
    box = bounding_box(region)
    if box is not None:
        xs.extend((box[0], box[2]))
        ys.extend((box[1], box[3]))
    minx, maxx = min(xs), max(xs)
    # y 翻转后的范围
    miny, maxy = -max(ys), -min(ys)
    pad = pad_ratio * max(maxx - minx, maxy - miny, 1e-9)
    return (minx - pad, miny - pad, (maxx - minx) + 2.0 * pad, (maxy - miny) + 2.0 * pad)


def build_drawing(
    inst: ProblemInstance,
    region: Region,
    out_path: Optional[Union[str, Path]] = None,
    stroke_width: float = 0.0,
) -> svgwrite.Drawing:
    vb = _viewbox(inst, region)
    width = stroke_width or vb[2] / 400.0
    dwg = svgwrite.Drawing(str(out_path) if out_path else "region.svg", profile="full")
    dwg.attribs["viewBox"] = " ".join(_fmt(v) for v in vb)

    g_region = dwg.g(id="region", fill="#4a90d9", fill_opacity=0.25, stroke="#1f5fa8", fill_rule="nonzero")
    for lp in region.loops:
        g_region.add(dwg.path(d=loop_path_data(lp.edges), stroke_width=width))
    dwg.add(g_region)

    budget = dwg.circle(center=(inst.s.x, -inst.s.y), r=inst.l, fill="none", stroke="#888",
                        stroke_width=width)
    budget.dasharray([4 * width, 3 * width])
    dwg.add(budget)

    g_obs = dwg.g(id="obstacles", fill="none", stroke="#000", stroke_linecap="round")
    for o in inst.obstacles:
        g_obs.add(dwg.path(d=f"M {_xy(o.a)} L {_xy(o.b)}", stroke_width=2.0 * width))
    dwg.add(g_obs)

    dwg.add(dwg.circle(center=(inst.s.x, -inst.s.y), r=3.0 * width, fill="#d11", stroke="none"))
    return dwg


def render_svg(inst: ProblemInstance, region: Region, out_path: Union[str, Path]) -> None:
    build_drawing(inst, region, out_path).save()
