"""Command-line entry point: plan, baseline, bench, and profile subcommands.

Exit codes: 0 success, 2 mission parse error, 3 validation error,
4 empty grid, 1 any other planning failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import (
    EmptyGridError,
    InvalidInputError,
    MissionParseError,
    MissionValidationError,
    OutOfRangeError,
    ScoppError,
)
from .geo import to_cartesian
from .auction import RobotState
from .discretize import PolygonSet, build_grid
from .mission import MissionSpec, load_mission, mission_config_dict, validate_mission
from .output import (
    plan_geojson,
    write_bench_csv,
    write_json,
    write_timings_csv,
    write_waypoints_csv,
)
from .pipeline import run_pipeline
from .plotting import (
    save_computing_time_plot,
    save_coverage_plot,
    save_mission_time_plot,
    save_timings_plot,
)
from .sim import evaluate, scalability_sweep, sweep_baseline

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_EMPTY_GRID = 4

SEED_ENV_VAR = "SCOPP_SEED"


def _resolve_seed(flag_seed: int | None, mission: MissionSpec) -> int:
    """Seed priority: --seed flag, mission file, SCOPP_SEED env var, then 0."""
    if flag_seed is not None:
        return flag_seed
    if mission.options.seed is not None:
        return mission.options.seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise MissionValidationError(f"{SEED_ENV_VAR} must be an integer, got {env!r}")
    return 0


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _load(args: argparse.Namespace) -> MissionSpec:
    mission = load_mission(args.mission)
    validate_mission(mission, strict_faa=True if args.strict_faa else None)
    return mission


def cmd_plan(args: argparse.Namespace) -> int:
    mission = _load(args)
    seed = _resolve_seed(args.seed, mission)
    result = run_pipeline(mission, n_robots=args.robots, seed=seed)
    metrics = evaluate(result.plan, mission.uav, result.grid)
    config = mission_config_dict(mission, result.n_robots, seed)
    doc = plan_geojson(result.plan, metrics, config)

    out = Path(args.out)
    write_json(doc, out)
    write_waypoints_csv(result.plan, metrics, out.with_suffix(".csv"))
    save_coverage_plot(metrics, out.with_name(out.stem + "_coverage.svg"))
    if args.print:
        print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_baseline(args: argparse.Namespace) -> int:
    mission = _load(args)
    seed = _resolve_seed(args.seed, mission)
    n = args.robots if args.robots is not None else len(mission.robots)
    if n < 1:
        raise InvalidInputError(f"--robots must be >= 1, got {n}")

    projection = mission.projection()
    area = PolygonSet(
        boundary=tuple(to_cartesian(projection, g) for g in mission.boundary),
        holes=tuple(tuple(to_cartesian(projection, g) for g in ring) for ring in mission.no_fly),
    )
    grid = build_grid(area, mission.uav, points_per_edge=mission.options.points_per_edge)
    robots = [
        RobotState(index=i, start=to_cartesian(projection, mission.robots[i % len(mission.robots)]),
                   start_geo=mission.robots[i % len(mission.robots)])
        for i in range(n)
    ]
    plan = sweep_baseline(grid, robots, projection=projection)
    metrics = evaluate(plan, mission.uav, grid)
    doc = plan_geojson(plan, metrics, mission_config_dict(mission, n, seed))

    out = Path(args.out)
    write_json(doc, out)
    write_waypoints_csv(plan, metrics, out.with_suffix(".csv"))
    save_coverage_plot(metrics, out.with_name(out.stem + "_coverage.svg"))
    if args.print:
        print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    mission = _load(args)
    base_seed = _resolve_seed(args.seed, mission)
    seeds = args.seeds if args.seeds else [base_seed]
    result = scalability_sweep(mission, args.team_sizes, seeds)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_bench_csv(result, out / "bench.csv")
    save_mission_time_plot(result, out / "mission_time.svg")
    save_computing_time_plot(result, out / "computing_time.svg")
    if args.print:
        for s in result.summary:
            print(
                f"n={s.n_robots} mission={s.mean_mission_time_s:.9g}"
                f"±{s.std_mission_time_s:.9g}s computing={s.mean_computing_time_s:.9g}s"
            )
    return EXIT_OK


def cmd_profile(args: argparse.Namespace) -> int:
    mission = _load(args)
    seed = _resolve_seed(args.seed, mission)
    result = run_pipeline(mission, n_robots=args.robots, seed=seed)

    out = Path(args.out)
    write_timings_csv(result.timings, out)
    save_timings_plot(result.timings, out.with_suffix(".svg"))
    if args.print:
        for name, seconds in result.timings.rows():
            print(f"{name}: {seconds:.9g}s")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scopp",
        description="Multi-robot coverage planning: partition a survey area and route a team.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, robots: bool = True) -> None:
        p.add_argument("--mission", required=True, help="mission JSON file")
        p.add_argument("--out", required=True, help="output path")
        if robots:
            p.add_argument("--robots", type=int, default=None, help="team size override")
        p.add_argument("--seed", type=int, default=None, help="clustering seed")
        p.add_argument("--strict-faa", action="store_true", help="treat operating-envelope violations as errors")
        p.add_argument("--print", action="store_true", help="also print results to stdout")

    p_plan = sub.add_parser("plan", help="plan a mission and write GeoJSON/CSV/SVG")
    common(p_plan)
    p_plan.set_defaults(func=cmd_plan)

    p_base = sub.add_parser("baseline", help="serpentine-sweep baseline plan")
    common(p_base)
    p_base.set_defaults(func=cmd_baseline)

    p_bench = sub.add_parser("bench", help="mission/computing time versus team size")
    common(p_bench, robots=False)
    p_bench.add_argument("--team-sizes", type=_int_list, required=True, help="comma-separated team sizes")
    p_bench.add_argument("--seeds", type=_int_list, default=None, help="comma-separated seeds")
    p_bench.set_defaults(func=cmd_bench)

    p_prof = sub.add_parser("profile", help="per-stage pipeline timings")
    common(p_prof)
    p_prof.set_defaults(func=cmd_profile)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MissionParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (MissionValidationError, InvalidInputError, OutOfRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except EmptyGridError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY_GRID
    except ScoppError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
