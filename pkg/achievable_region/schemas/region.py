# -*- coding: utf-8 -*-
from typing import Annotated, List, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

Coord = Tuple[float, float]


# ===== 边界边 =====
class LineEdgeOut(BaseModel):
    model_config = ConfigDict(extra="forbid")

    type: Literal["line"] = "line"
    start: Coord
    end: Coord


class ArcEdgeOut(BaseModel):
    """逆时针圆弧：start → appendix → end"""
    model_config = ConfigDict(extra="forbid")

    type: Literal["arc"] = "arc"
    center: Coord
    radius: float = Field(..., gt=0)
    start: Coord
    end: Coord
    appendix: Coord = Field(..., description="弧上严格位于两端之间的附加点，用于区分优弧/劣弧")


EdgeOut = Annotated[Union[LineEdgeOut, ArcEdgeOut], Field(discriminator="type")]


class LoopOut(BaseModel):
    model_config = ConfigDict(extra="forbid")

    orientation: Literal["ccw", "cw"] = Field(..., description="ccw 外环 / cw 洞")
    edges: List[EdgeOut] = Field(..., min_length=1)


# ===== 区域文件 =====
class RegionFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    loops: List[LoopOut] = Field(default_factory=list)
    area: float = 0.0
