# -*- coding: utf-8 -*-
"""bench：同一批随机实例上比较 alg1（逐端点 Dijkstra）与 alg2（一次 Dijkstra）的耗时"""
import argparse
import time
from typing import List, Tuple

from achievable_region.services.generator import generate_instance
from achievable_region.services.pipeline import ProblemInstance, compute_region


def register(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("bench", help="alg1 / alg2 耗时对比")
    p.add_argument("--sizes", type=int, nargs="+", default=[25, 50, 100, 200], help="障碍数量列表")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=1, help="每个规模重复次数，取最快一次")
    p.set_defaults(func=run)


def time_algorithm(inst: ProblemInstance, algorithm: str, repeat: int) -> float:
    best = float("inf")
    for _ in range(max(repeat, 1)):
        started = time.perf_counter()
        compute_region(inst, algorithm)
        best = min(best, time.perf_counter() - started)
    return best


def run(args: argparse.Namespace) -> int:
    rows: List[Tuple[int, float, float]] = []
    for n in args.sizes:
        inst = generate_instance(n, args.seed)
        rows.append((n, time_algorithm(inst, "alg1", args.repeat), time_algorithm(inst, "alg2", args.repeat)))

    print(f"{'n':>6} {'alg1 (s)':>12} {'alg2 (s)':>12} {'alg1/alg2':>10}")
    for n, t1, t2 in rows:
        print(f"{n:>6} {t1:>12.4f} {t2:>12.4f} {t1 / t2 if t2 > 0 else float('inf'):>10.2f}")
    return 0
