# -*- coding: utf-8 -*-
"""
实例文件 / 区域文件的读写工具
- 读取：JSON 解析失败与结构校验失败统一转换为 SchemaError（附带 "路径: 原因"）
- 写出：固定键顺序 + float 原样 repr，相同输入得到逐字节相同的文件
"""
import json
from pathlib import Path
from typing import Any, List, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from achievable_region.errors import DegenerateGeometryError, InstanceValidationError, SchemaError
from achievable_region.geometry.core import ArcEdge, ArcPolygon, Circle, LineEdge, ObstacleSegment, Point
from achievable_region.geometry.region_ops import Region, area
from achievable_region.schemas.instance import InstanceFile
from achievable_region.schemas.region import ArcEdgeOut, LineEdgeOut, LoopOut, RegionFile
from achievable_region.services.pipeline import ProblemInstance

M = TypeVar("M", bound=BaseModel)
PathLike = Union[str, Path]


def _error_path(loc: Tuple[Any, ...]) -> str:
    return ".".join(str(x) for x in loc) or "$"


def parse_model(text: str, model: Type[M], source: str = "") -> M:
    """解析 JSON 文本并做结构校验"""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError([(f"$ (line {e.lineno}, column {e.colno})", e.msg)], source) from e
    try:
        return model.model_validate(raw)
    except ValidationError as e:
        errors = [(_error_path(err["loc"]), err["msg"]) for err in e.errors()]
        raise SchemaError(errors, source) from e


def _read(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SchemaError([("$", f"cannot read file: {e.strerror}")], str(path)) from e


# ===== 实例 =====
def instance_from_file(doc: InstanceFile) -> ProblemInstance:
    obstacles: List[ObstacleSegment] = []
    violations: List[str] = []
    for i, (a, b) in enumerate(doc.obstacles):
        try:
            obstacles.append(ObstacleSegment(Point(*a), Point(*b), i))
        except DegenerateGeometryError:
            violations.append(f"obstacles[{i}]: degenerate segment")
    if violations:
        raise InstanceValidationError(violations)
    return ProblemInstance(obstacles, Point(*doc.s), doc.l)


def load_instance(path: PathLike) -> ProblemInstance:
    return instance_from_file(parse_model(_read(path), InstanceFile, str(path)))


def dump_instance(inst: ProblemInstance) -> str:
    doc = {
        "s": [inst.s.x, inst.s.y],
        "l": inst.l,
        "obstacles": [[[o.a.x, o.a.y], [o.b.x, o.b.y]] for o in inst.obstacles],
    }
    return json.dumps(doc, ensure_ascii=False) + "\n"


# ===== 区域 =====
def region_to_file(r: Region) -> RegionFile:
    loops = []
    for lp in r.loops:
        edges = []
        for e in lp.edges:
            if isinstance(e, LineEdge):
                edges.append(LineEdgeOut(start=e.start.as_tuple(), end=e.end.as_tuple()))
            else:
                edges.append(ArcEdgeOut(
                    center=e.center.as_tuple(), radius=e.radius,
                    start=e.start.as_tuple(), end=e.end.as_tuple(), appendix=e.appendix.as_tuple(),
                ))
        loops.append(LoopOut(orientation=lp.orientation, edges=edges))
    return RegionFile(loops=loops, area=area(r))


def dump_region(r: Region) -> str:
    return region_to_file(r).model_dump_json(indent=2) + "\n"


def region_from_file(doc: RegionFile) -> Region:
    loops = []
    for i, lp in enumerate(doc.loops):
        edges = []
        for j, e in enumerate(lp.edges):
            try:
                if isinstance(e, LineEdgeOut):
                    edges.append(LineEdge(Point(*e.start), Point(*e.end)))
                else:
                    edges.append(ArcEdge(Circle(Point(*e.center), e.radius),
                                         Point(*e.start), Point(*e.end), Point(*e.appendix)))
            except DegenerateGeometryError as err:
                raise SchemaError([(f"loops.{i}.edges.{j}", err.detail)]) from err
        try:
            loops.append(ArcPolygon(tuple(edges)))
        except DegenerateGeometryError as err:
            raise SchemaError([(f"loops.{i}", err.detail)]) from err
    return Region(tuple(loops))


def load_region(path: PathLike) -> Region:
    return region_from_file(parse_model(_read(path), RegionFile, str(path)))
