# -*- coding: utf-8 -*-
"""
oracle 交叉校验（check 命令的引擎，异步 + 并发控制）
- 在 C(s,l) 的包围盒内按种子均匀采样
- 区域侧用 membership，真值侧用独立的测地距离 oracle（π(s,p) <= l）
- 边界带内的点、|π−l| < eps_boundary 的点跳过
- oracle 查询放到线程里执行，Semaphore 限制并发；结果按采样序号汇总，保证报告可复现
"""
from __future__ import annotations

import asyncio
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from achievable_region.config import CHECK_MAX_CONCURRENCY
from achievable_region.errors import PointOnObstacleError
from achievable_region.geometry.core import DEFAULT_TOLERANCE, Point, TolerancePolicy
from achievable_region.geometry.region_ops import Membership, Region, membership
from achievable_region.services.pipeline import ProblemInstance
from achievable_region.services.shortest_path import geodesic_distance

logger = logging.getLogger(__name__)

REPORT_LIMIT = 10


@dataclass
class SampleVerdict:
    index: int
    point: Point
    region: Membership
    geodesic: float
    budget: float
    skipped: bool = False

    @property
    def oracle_inside(self) -> bool:
        return self.geodesic <= self.budget


@dataclass
class CheckReport:
    samples: int
    checked: int = 0
    skipped: int = 0
    agree: int = 0
    disagreements: List[SampleVerdict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def lines(self) -> List[str]:
        out = [
            f"samples={self.samples} checked={self.checked} skipped={self.skipped} "
            f"agree={self.agree} disagree={len(self.disagreements)}"
        ]
        for v in self.disagreements[:REPORT_LIMIT]:
            out.append(
                f"#{v.index} ({v.point.x!r}, {v.point.y!r}) region={v.region.value} "
                f"oracle={'inside' if v.oracle_inside else 'outside'} pi={v.geodesic!r}"
            )
        return out


def sample_points(inst: ProblemInstance, count: int, seed: int) -> List[Point]:
    rng = np.random.default_rng(seed)
    s, l = inst.s, inst.l
    pts = rng.uniform((s.x - l, s.y - l), (s.x + l, s.y + l), size=(count, 2))
    return [Point(float(x), float(y)) for x, y in pts]


def _evaluate(
    index: int,
    p: Point,
    inst: ProblemInstance,
    region: Region,
    tol: TolerancePolicy,
) -> SampleVerdict:
    m = membership(region, p, tol)
    if m is Membership.BOUNDARY:
        return SampleVerdict(index, p, m, math.nan, inst.l, skipped=True)
    try:
        d = geodesic_distance(inst.obstacles, inst.s, p, tol)
    except PointOnObstacleError:
        return SampleVerdict(index, p, m, math.nan, inst.l, skipped=True)
    skipped = math.isfinite(d) and abs(d - inst.l) < tol.eps_boundary
    return SampleVerdict(index, p, m, d, inst.l, skipped=skipped)


async def run_check(
    inst: ProblemInstance,
    region: Region,
    samples: int,
    seed: int,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
    concurrency: Optional[int] = None,
) -> CheckReport:
    points = sample_points(inst, samples, seed)
    sem = asyncio.Semaphore(concurrency or CHECK_MAX_CONCURRENCY)

    async def _worker(i: int, p: Point) -> SampleVerdict:
        async with sem:
            return await asyncio.to_thread(_evaluate, i, p, inst, region, tol)

    verdicts = await asyncio.gather(*(_worker(i, p) for i, p in enumerate(points)))

    report = CheckReport(samples=samples)
    for v in sorted(verdicts, key=lambda x: x.index):
        if v.skipped:
            report.skipped += 1
            continue
        report.checked += 1
        if (v.region is Membership.INSIDE) == v.oracle_inside:
            report.agree += 1
        else:
            report.disagreements.append(v)
    logger.info(
        f"校验完成：采样 {samples}，参与比较 {report.checked}，跳过 {report.skipped}，"
        f"不一致 {len(report.disagreements)}"
    )
    return report


def check_region(
    inst: ProblemInstance,
    region: Region,
    samples: int,
    seed: int,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
    concurrency: Optional[int] = None,
) -> CheckReport:
    return asyncio.run(run_check(inst, region, samples, seed, tol, concurrency))
