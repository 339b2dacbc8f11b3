# -*- coding: utf-8 -*-
"""
随机实例生成（gen 命令的引擎）
- 线段长度 ∈ [0.05, 0.25] × min(W, H)，方向均匀；与已有线段的最小间隙 ≥ 2·eps_boundary，否则重采
- 源点同样拒绝采样，离所有障碍至少 2·eps_boundary
- l ∈ GEN_BUDGET_RANGE × 包围盒对角线
- 固定种子 → 完全确定的输出
"""
import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from achievable_region.config import GEN_BUDGET_RANGE, GEN_MAX_RETRIES
from achievable_region.errors import InstanceGenerationError
from achievable_region.geometry.core import (
    DEFAULT_TOLERANCE, ObstacleSegment, Point, TolerancePolicy, point_segment_distance,
    segment_segment_intersection,
)
from achievable_region.services.pipeline import ProblemInstance

logger = logging.getLogger(__name__)

SEGMENT_LENGTH_RANGE = (0.05, 0.25)


def segment_clearance(s1: ObstacleSegment, s2: ObstacleSegment, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> float:
    if segment_segment_intersection(s1.endpoints, s2.endpoints, tol) is not None:
        return 0.0
    return min(
        point_segment_distance(s1.a, s2.a, s2.b),
        point_segment_distance(s1.b, s2.a, s2.b),
        point_segment_distance(s2.a, s1.a, s1.b),
        point_segment_distance(s2.b, s1.a, s1.b),
    )


def _sample_segment(rng: np.random.Generator, idx: int, width: float, height: float) -> Optional[ObstacleSegment]:
    ax, ay = rng.uniform(0.0, width), rng.uniform(0.0, height)
    length = rng.uniform(*SEGMENT_LENGTH_RANGE) * min(width, height)
    theta = rng.uniform(0.0, 2.0 * math.pi)
    bx, by = ax + length * math.cos(theta), ay + length * math.sin(theta)
    if not (0.0 <= bx <= width and 0.0 <= by <= height):
        return None
    return ObstacleSegment(Point(ax, ay), Point(bx, by), idx)


def generate_instance(
    n: int,
    seed: int,
    box: Tuple[float, float] = (1.0, 1.0),
    max_retries: int = GEN_MAX_RETRIES,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> ProblemInstance:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    width, height = box
    if not (width > 0.0 and height > 0.0):
        raise ValueError(f"box must be positive, got {box}")
    rng = np.random.default_rng(seed)
    clearance = 2.0 * tol.eps_boundary

    obstacles: List[ObstacleSegment] = []
    for idx in range(n):
        for _ in range(max_retries):
            seg = _sample_segment(rng, idx, width, height)
            if seg is None:
                continue
            if all(segment_clearance(seg, o, tol) >= clearance for o in obstacles):
                obstacles.append(seg)
                break
        else:
            raise InstanceGenerationError(
                f"retry budget exceeded: placed {len(obstacles)} of {n} segments after {max_retries} attempts"
            )

    s = _sample_source(rng, obstacles, width, height, clearance, max_retries)
    lo, hi = GEN_BUDGET_RANGE
    l = float(rng.uniform(lo, hi)) * math.hypot(width, height)
    logger.info(f"生成实例：障碍 {n} 条，种子 {seed}，包围盒 {width}x{height}，l={l:.6g}")
    return ProblemInstance(obstacles, s, l)


def _sample_source(
    rng: np.random.Generator,
    obstacles: Sequence[ObstacleSegment],
    width: float,
    height: float,
    clearance: float,
    max_retries: int,
) -> Point:
    for _ in range(max_retries):
        p = Point(rng.uniform(0.0, width), rng.uniform(0.0, height))
        if all(point_segment_distance(p, o.a, o.b) >= clearance for o in obstacles):
            return p
    raise InstanceGenerationError(f"retry budget exceeded: no source position after {max_retries} attempts")
