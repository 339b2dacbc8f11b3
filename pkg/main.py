import argparse
import logging
import sys
from typing import List, Optional

from achievable_region.commands import COMMANDS
from achievable_region.config import LOG_FILE, LOG_LEVEL
from achievable_region.errors import (
    DegenerateGeometryError, InstanceGenerationError, InstanceValidationError, PointOnObstacleError,
    RegionError, SchemaError,
)

logging.basicConfig(
    level=getattr(logging, LOG_LEVEL.upper(), logging.INFO),
    format="%(asctime)s | %(levelname)s | %(name)s | %(message)s"
)
if LOG_FILE:
    _fh = logging.FileHandler(LOG_FILE, encoding="utf-8")
    _fh.setFormatter(logging.Formatter("%(asctime)s | %(levelname)s | %(name)s | %(message)s"))
    logging.getLogger().addHandler(_fh)

logger = logging.getLogger("achievable_region")

# 退出码
EXIT_OK = 0
EXIT_SCHEMA = 1
EXIT_INVARIANT = 2
EXIT_GENERATION = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="achievable-region", description="线段障碍环境下的可达区域计算与校验")
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd in COMMANDS:
        cmd.register(sub)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as e:
        logger.error(f"文件格式错误: {e.detail}")
        for path, reason in e.errors:
            print(f"{path}: {reason}", file=sys.stderr)
        return EXIT_SCHEMA
    except InstanceValidationError as e:
        logger.error(f"实例不合法: {e.detail}")
        for v in e.violations:
            print(v, file=sys.stderr)
        return EXIT_INVARIANT
    except (PointOnObstacleError, DegenerateGeometryError) as e:
        logger.error(f"几何退化: {e.detail}")
        print(e.detail, file=sys.stderr)
        return EXIT_INVARIANT
    except InstanceGenerationError as e:
        logger.error(f"实例生成失败: {e.detail}")
        print(e.detail, file=sys.stderr)
        return EXIT_GENERATION
    except RegionError as e:
        logger.exception(f"未分类的错误: {e.detail}")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
