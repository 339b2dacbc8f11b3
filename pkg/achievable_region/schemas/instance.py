# -*- coding: utf-8 -*-
import math
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

Coord = Tuple[float, float]


# ===== 实例文件 =====
class InstanceFile(BaseModel):
    """
    {"s":[x,y], "l":number, "obstacles":[[[x,y],[x,y]], ...]}
    """
    model_config = ConfigDict(extra="forbid")

    s: Coord = Field(..., description="源点坐标")
    l: float = Field(..., description="最大路径长度（预算）")
    obstacles: List[Tuple[Coord, Coord]] = Field(default_factory=list, description="线段障碍，每条为两个端点")

    @field_validator("s")
    @classmethod
    def _finite_source(cls, v: Coord) -> Coord:
        if not all(math.isfinite(x) for x in v):
            raise ValueError("coordinates must be finite")
        return v

    @field_validator("obstacles")
    @classmethod
    def _finite_obstacles(cls, v: List[Tuple[Coord, Coord]]) -> List[Tuple[Coord, Coord]]:
        for i, (a, b) in enumerate(v):
            if not all(math.isfinite(x) for x in (*a, *b)):
                raise ValueError(f"obstacle {i} has non-finite coordinates")
        return v
