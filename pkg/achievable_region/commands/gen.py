# -*- coding: utf-8 -*-
import argparse
from pathlib import Path

from achievable_region.services.generator import generate_instance
from achievable_region.utils.region_json import dump_instance


def _non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def register(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("gen", help="生成随机实例（固定种子可复现）")
    p.add_argument("--n", type=_non_negative, required=True, help="障碍数量")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", type=float, nargs=2, metavar=("W", "H"), default=(1.0, 1.0), help="包围盒宽高")
    p.add_argument("--output", required=True, help="实例 JSON 输出路径")
    p.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    inst = generate_instance(args.n, args.seed, tuple(args.box))
    Path(args.output).write_text(dump_instance(inst), encoding="utf-8")
    return 0
