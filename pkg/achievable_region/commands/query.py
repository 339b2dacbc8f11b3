# -*- coding: utf-8 -*-
"""query：单点查询，输出 π(s,p)、控制点、最短路折线以及是否可达"""
import argparse

from achievable_region.errors import InstanceValidationError
from achievable_region.geometry.core import Point
from achievable_region.services.pipeline import validate_instance
from achievable_region.services.shortest_path import (
    anchors_for, control_point, dijkstra, shortest_path_nodes,
)
from achievable_region.services.visibility import build_visibility_graph
from achievable_region.utils.region_json import load_instance


def register(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("query", help="查询单点的测地距离与控制点")
    p.add_argument("--input", required=True, help="实例 JSON 路径")
    p.add_argument("--point", type=float, nargs=2, metavar=("X", "Y"), required=True)
    p.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    inst = load_instance(args.input)
    violations = validate_instance(inst)
    if violations:
        raise InstanceValidationError(violations)
    p = Point(*args.point)
    obstacles = list(inst.obstacles)

    # 额外点 [s, p]：同一张图上既得到 π(s,·) 又得到 p 的最短路
    g = build_visibility_graph(obstacles, [inst.s, p])
    dm = dijkstra(g, g.extra_index(0))
    target = g.extra_index(1)
    pi = dm.dist[target]
    path = [g.nodes[i] for i in shortest_path_nodes(dm, target)]

    anchors = anchors_for(obstacles, inst.s)
    cp = control_point(p, dm, anchors, obstacles)

    print(f"pi={pi!r}")
    if cp is None:
        print("control_point=none")
    else:
        k, total = cp
        a = anchors[k]
        label = "s" if k == 0 else f"endpoint[{k - 1}]"
        print(f"control_point={label} ({a.x!r}, {a.y!r}) total={total!r}")
    print("path=" + " -> ".join(f"({v.x!r}, {v.y!r})" for v in path))
    print(f"achievable={'yes' if pi <= inst.l else 'no'}")
    return 0
