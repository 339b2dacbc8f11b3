# -*- coding: utf-8 -*-
"""check：随机采样点上比对区域归属与 oracle，存在不一致时退出码为 4"""
import argparse

from achievable_region.errors import InstanceValidationError
from achievable_region.services.check_service import check_region
from achievable_region.services.pipeline import achievable_region, validate_instance
from achievable_region.utils.region_json import load_instance, load_region

EXIT_DISAGREEMENT = 4


def register(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("check", help="用测地距离 oracle 校验可达区域")
    p.add_argument("--input", required=True, help="实例 JSON 路径")
    p.add_argument("--samples", type=int, default=1000, help="采样点数量")
    p.add_argument("--seed", type=int, default=0, help="采样种子")
    p.add_argument("--region", default=None, help="可选：直接回放已保存的 RegionFile，而不是重新计算")
    p.add_argument("--concurrency", type=int, default=None, help="oracle 并发数（默认取 REGION_CHECK_CONCURRENCY）")
    p.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    inst = load_instance(args.input)
    if args.region:
        violations = validate_instance(inst)
        if violations:
            raise InstanceValidationError(violations)
        region = load_region(args.region)
    else:
        region = achievable_region(inst)
    report = check_region(inst, region, args.samples, args.seed, concurrency=args.concurrency)
    for line in report.lines():
        print(line)
    return 0 if report.ok else EXIT_DISAGREEMENT
