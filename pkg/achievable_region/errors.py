# -*- coding: utf-8 -*-
"""
统一异常：库代码只抛异常，由命令行层映射为退出码
- detail 字段为可直接展示给用户的错误描述
"""
from typing import List, Optional


class RegionError(Exception):
    """所有业务异常的基类"""

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class DegenerateGeometryError(RegionError, ValueError):
    """退化几何：重合点求极角、零长射线、非法圆等"""


class PointOnObstacleError(RegionError, ValueError):
    """点落在障碍物线段的相对内部"""

    def __init__(self, detail: str = "point on obstacle interior"):
        super().__init__(detail)


class NotStrictlyAchievableError(RegionError, ValueError):
    def __init__(self, detail: str = "not strictly achievable"):
        super().__init__(detail)


class InstanceValidationError(RegionError, ValueError):
    """实例不满足不变量，violations 逐条列出"""

    def __init__(self, violations: List[str]):
        super().__init__("; ".join(violations) or "invalid instance")
        self.violations = list(violations)


class SchemaError(RegionError, ValueError):
    """文件解析 / 结构校验失败；errors 为 (路径, 原因) 列表"""

    def __init__(self, errors: List[tuple], source: Optional[str] = None):
        lines = [f"{path}: {reason}" for path, reason in errors]
        head = f"{source}: " if source else ""
        super().__init__(head + "; ".join(lines))
        self.errors = list(errors)


class InstanceGenerationError(RegionError, RuntimeError):
    """随机实例拒绝采样超出重试预算"""
