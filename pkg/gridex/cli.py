import argparse
import asyncio
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from .env import Env
from .models import CellAnnotation, MergeRule, PipelineConfig
from .pipeline import PipelineRunner, StageFailed, stage_summary
from .util import TimeParser

logger = logging.getLogger("gridex")

COMMANDS = ("run", "ca", "grid", "chain", "query", "bench")


class UsageError(Exception):
    pass


def _id_list(value: str) -> List[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def _int_list(value: str) -> List[int]:
    try:
        return [int(item) for item in _id_list(value)]

    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}")


def _pair(value: str) -> Tuple[int, int]:
    items = _int_list(value)
    if len(items) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated axes, got {value!r}")

    return items[0], items[1]


def _point(value: str) -> Tuple[float, float]:
    try:
        u, v = (float(item) for item in value.split(","))

    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a point as u,v, got {value!r}")

    return u, v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridex",
        description="Correspondence analysis factor planes as pixel grids, coarsening chains and grid-bucketed search.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", help="CSV matrix: header of column ids, row id first on every row")
    parser.add_argument("--sup-rows", type=_id_list, default=[], help="comma-separated supplementary row ids")
    parser.add_argument("--sup-cols", type=_id_list, default=[], help="comma-separated supplementary column ids")
    parser.add_argument("--axes", type=int, default=None, help="retained factor axes (default 5, fewer for small inputs)")
    parser.add_argument("--pair", type=_pair, default=(1, 2), help="1-based factor pair to pixellate (default 1,2)")
    parser.add_argument("--merge-rule", choices=[rule.value for rule in MergeRule], default=MergeRule.LEAST_SUM.value)
    parser.add_argument("--resolution", type=int, default=None, help="grid index resolution G")
    parser.add_argument("--occupancy", type=float, default=4.0, help="mean points per index cell when G is derived")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out-dir", default="out")
    parser.add_argument("--cloud", choices=["rows", "columns", "all"], default="rows")
    parser.add_argument("--counts", action="store_true", help="print zero cells as 0 instead of .")
    parser.add_argument("--point", type=_point, action="append", default=[], help="query point u,v (repeatable)")
    parser.add_argument("--exclude", default=None, help="point id to leave out of query answers")
    parser.add_argument("--n", type=_int_list, default=[1000, 10000], help="comma-separated bench sizes")
    parser.add_argument("--queries", type=int, default=100, help="bench queries per n")
    parser.add_argument("--distribution", choices=["uniform", "skewed"], default="uniform")
    parser.add_argument("--no-timing", action="store_true", help="leave wall time out of the bench table")
    parser.add_argument("--log-level", choices=["debug", "info", "warning", "error"], default=None)
    parser.add_argument("--timeout", default=None, help="per-stage deadline, e.g. 90s or 10m")

    return parser


def build_env(args: argparse.Namespace) -> Env:
    overrides: Dict[str, str] = {}
    if args.log_level is not None:
        overrides["GRIDEX_LOG_LEVEL"] = args.log_level

    if args.timeout is not None:
        overrides["GRIDEX_STAGE_TIMEOUT"] = args.timeout

    types_map = Env.types_map()
    env = Env(**{key: types_map[key](value) for key, value in overrides.items()})
    TimeParser(env.GRIDEX_STAGE_TIMEOUT)

    return env


def build_config(args: argparse.Namespace) -> PipelineConfig:
    settings: Dict[str, Any] = {
        "input": args.input,
        "sup_rows": args.sup_rows,
        "sup_cols": args.sup_cols,
        "axes": args.axes,
        "pair": args.pair,
        "merge_rule": MergeRule(args.merge_rule),
        "resolution": args.resolution,
        "occupancy": args.occupancy,
        "seed": args.seed,
        "out_dir": args.out_dir,
        "cloud": args.cloud,
        "annotation": CellAnnotation.COUNTS if args.counts else CellAnnotation.BLANK_ZERO,
        "bench_n": args.n,
        "bench_queries": args.queries,
        "distribution": args.distribution,
        "bench_timing": not args.no_timing,
    }

    return PipelineConfig.model_validate(settings, strict=False)


async def dispatch(runner: PipelineRunner, args: argparse.Namespace) -> None:
    match args.command:
        case "run":
            await runner.run_pipeline()

        case "ca":
            await runner.run_ca()

        case "grid":
            await runner.run_grid()

        case "chain":
            await runner.run_chain()

        case "query":
            if not args.point:
                raise UsageError("query needs at least one --point u,v")

            for line in await runner.run_query(args.point, exclude=args.exclude):
                print(line)

        case "bench":
            path = await runner.run_bench()
            print(path.read_text(encoding="utf-8"), end="")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        env = build_env(args)
        config = build_config(args)

    except (ValidationError, ValueError) as err:
        print(f"Err. - config - {err}", file=sys.stderr)
        return 2

    logging.basicConfig(
        level=env.GRIDEX_LOG_LEVEL.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    runner = PipelineRunner(config, env=env)
    try:
        asyncio.run(dispatch(runner, args))

    except StageFailed as failed:
        print(failed.run.error, file=sys.stderr)

    except UsageError as err:
        print(f"Err. - {args.command} - {err}", file=sys.stderr)
        return 2

    finally:
        runner.shutdown()

    logger.info("stages: %s", stage_summary(runner.runs))
    return runner.exit_status


if __name__ == "__main__":
    sys.exit(main())
