# -*- coding: utf-8 -*-
"""compute：读取实例 → 计算可达区域 → 写 RegionFile（可选 SVG）"""
import argparse
import logging
from pathlib import Path

from achievable_region.services.pipeline import compute_region
from achievable_region.utils.region_json import dump_region, load_instance
from achievable_region.utils.svg_render import render_svg

logger = logging.getLogger(__name__)


def register(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("compute", help="计算可达区域并写出 RegionFile")
    p.add_argument("--input", required=True, help="实例 JSON 路径")
    p.add_argument("--output", required=True, help="RegionFile 输出路径")
    p.add_argument("--svg", default=None, help="可选：SVG 输出路径")
    p.add_argument("--algorithm", choices=("alg1", "alg2"), default="alg2",
                   help="alg2 只跑一次 Dijkstra；alg1 逐端点重算（基准对比用）")
    p.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    inst = load_instance(args.input)
    report = compute_region(inst, args.algorithm)
    Path(args.output).write_text(dump_region(report.region), encoding="utf-8")
    if args.svg:
        render_svg(inst, report.region, args.svg)
    logger.info(
        f"compute 完成：loops={report.loops} holes={report.holes} area={report.area!r} "
        f"effective_endpoints={report.effective_endpoints} -> {args.output}"
    )
    return 0
