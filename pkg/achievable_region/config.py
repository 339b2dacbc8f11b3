# -*- coding: utf-8 -*-
"""
环境变量加载与全局配置（模块导入时读取一次，避免在计算循环内反复IO）
"""
import os
from typing import Optional

from dotenv import load_dotenv

# 加载 .env
load_dotenv()

# ===== 几何容差 =====
# eps_geom：绝对几何容差（单位尺度坐标下）；eps_boundary：点归属判定的边界带宽
EPS_GEOM = float(os.getenv("REGION_EPS", "1e-9"))
EPS_BOUNDARY = float(os.getenv("REGION_EPS_BOUNDARY", "1e-6"))

# ===== 并发配置 =====
# check 命令中 oracle 查询的最大并发数
CHECK_MAX_CONCURRENCY = int(os.getenv("REGION_CHECK_CONCURRENCY", "8"))

# ===== 随机实例生成 =====
# 每条线段拒绝采样的最大重试次数，超出则生成失败（exit 3）
GEN_MAX_RETRIES = int(os.getenv("REGION_GEN_MAX_RETRIES", "2000"))
GEN_BUDGET_RANGE = (0.2, 1.2)  # l 取值为 [0.2, 1.2] × 包围盒对角线

# ===== 日志 =====
LOG_LEVEL = os.getenv("REGION_LOG_LEVEL", "INFO")
# 日志文件（如果需要文件日志，可打开）
LOG_FILE: Optional[str] = os.getenv("REGION_LOG_FILE", None)
