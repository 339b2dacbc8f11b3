# -*- coding: utf-8 -*-
import math

import numpy as np
import pytest

from achievable_region.geometry.core import DEFAULT_TOLERANCE, ObstacleSegment, Point
from achievable_region.services.pipeline import ProblemInstance

SQRT2 = math.sqrt(2.0)


def seg(ax, ay, bx, by, i=0) -> ObstacleSegment:
    return ObstacleSegment(Point(ax, ay), Point(bx, by), i)


@pytest.fixture
def tol():
    return DEFAULT_TOLERANCE


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def wall():
    """单条竖直障碍 x=1, y∈[-1,1]"""
    return seg(1, -1, 1, 1)


@pytest.fixture
def one_obstacle(wall):
    return ProblemInstance([wall], Point(0, 0), 2.0)


@pytest.fixture
def open_plane():
    return ProblemInstance([], Point(0, 0), 1.0)
