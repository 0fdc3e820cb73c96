"""Constant-velocity mission simulator, sweep baseline, and benchmark sweeps.

A robot covers a cell the instant it reaches the cell's center waypoint, so
mission time is pure path length over velocity and the completion time is
the slowest robot's total.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .auction import RobotState
from .discretize import Grid, UavParams
from .errors import EmptyGridError, InvalidInputError
from .geo import Projection
from .mission import MissionSpec
from .pathplan import RANDOM, SWEEP, Plan, attach_geographic
from .pipeline import PipelineResult, StageTimings, run_pipeline


@dataclass(frozen=True)
class MetricsReport:
    """Simulator output for one plan."""

    t_by_robot: tuple[float, ...]
    completion_time_s: float
    area_by_robot_m2: tuple[float, ...]
    n_cells_by_robot: tuple[int, ...]
    eta_by_robot: tuple[tuple[float, ...], ...]
    coverage_curve: tuple[tuple[float, float], ...]


def evaluate(plan: Plan, params: UavParams, grid: Grid) -> MetricsReport:
    """Fly every route at constant velocity and report times and coverage.

    The coverage curve starts at (0, 0) and gains one cell area per waypoint
    arrival, merged across robots in time order (ties by robot then leg).
    """
    v = params.velocity_mps
    if v <= 0.0:
        raise InvalidInputError(f"velocity must be > 0, got {v}")
    width = grid.cell_width_m
    cell_area = width * width

    etas = []
    totals = []
    events = []  # (eta, robot, leg)
    for r, route in enumerate(plan.waypoints_by_robot):
        t = 0.0
        route_etas = [0.0]
        for leg in range(1, len(route)):
            a, b = route[leg - 1], route[leg]
            t += math.hypot(b.x - a.x, b.y - a.y) / v
            route_etas.append(t)
            events.append((t, r, leg))
        etas.append(tuple(route_etas))
        totals.append(t)

    events.sort()
    covered = 0.0
    curve = [(0.0, 0.0)]
    for t, _, _ in events:
        covered += cell_area
        curve.append((t, covered))

    n_cells = tuple(len(cells) for cells in plan.assigned_cells)
    return MetricsReport(
        t_by_robot=tuple(totals),
        completion_time_s=max(totals) if totals else 0.0,
        area_by_robot_m2=tuple(n * cell_area for n in n_cells),
        n_cells_by_robot=n_cells,
        eta_by_robot=tuple(etas),
        coverage_curve=tuple(curve),
    )


def _serpentine_order(grid: Grid) -> list[int]:
    # Column-major sweep: columns left to right, direction alternating so the
    # path snakes instead of jumping back.
    order = []
    for col in range(grid.cols):
        rows = range(grid.rows) if col % 2 == 0 else range(grid.rows - 1, -1, -1)
        for row in rows:
            cell = grid.cell_at(row, col)
            if cell.is_free:
                order.append(cell.id)
    return order


def sweep_baseline(
    grid: Grid, robots: list[RobotState], projection: Projection | None = None
) -> Plan:
    """Boustrophedon baseline: one serpentine sweep split into near-equal runs.

    The sweep order over free cells is fixed; robot r flies the r-th
    contiguous chunk (chunk sizes differ by at most one). Geographic
    waypoints are attached only when a projection is supplied.
    """
    if not robots:
        raise InvalidInputError("need at least one robot")
    if grid.n_free == 0:
        raise EmptyGridError("no free cells to sweep")
    order = _serpentine_order(grid)
    center_of = {c.id: c.center for c in grid.free_cells}
    n_robots = len(robots)
    base, extra = divmod(len(order), n_robots)

    by_index = sorted(robots, key=lambda r: r.index)
    routes = []
    assigned = []
    lo = 0
    for i, robot in enumerate(by_index):
        size = base + (1 if i < extra else 0)
        chunk = order[lo : lo + size]
        lo += size
        assigned.append(tuple(chunk))
        routes.append(tuple([robot.start] + [center_of[cid] for cid in chunk]))
    plan = Plan(waypoints_by_robot=tuple(routes), assigned_cells=tuple(assigned), strategy=SWEEP)
    if projection is not None:
        plan = attach_geographic(plan, projection)
    return plan


def random_order_plan(plan: Plan, seed: int | None = None) -> Plan:
    """Ablation helper: same cells per robot, visit order shuffled."""
    rng = np.random.default_rng(seed)
    routes = []
    for route in plan.waypoints_by_robot:
        start, rest = route[0], list(route[1:])
        perm = rng.permutation(len(rest))
        routes.append(tuple([start] + [rest[i] for i in perm]))
    return Plan(
        waypoints_by_robot=tuple(routes),
        assigned_cells=plan.assigned_cells,
        strategy=RANDOM,
        waypoints_geo=None,
    )


def profile_pipeline(mission: MissionSpec, n_robots: int | None = None, seed: int | None = None) -> StageTimings:
    """Run the pipeline once and return its stage timings."""
    return run_pipeline(mission, n_robots=n_robots, seed=seed).timings


@dataclass(frozen=True)
class SweepRow:
    n_robots: int
    seed: int
    mission_time_s: float
    computing_time_s: float


@dataclass(frozen=True)
class SweepSummary:
    n_robots: int
    mean_mission_time_s: float
    std_mission_time_s: float
    mean_computing_time_s: float
    std_computing_time_s: float


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]
    summary: tuple[SweepSummary, ...]


def _evaluate_result(result: PipelineResult) -> MetricsReport:
    return evaluate(result.plan, result.mission.uav, result.grid)


def scalability_sweep(mission: MissionSpec, team_sizes, seeds) -> SweepResult:
    """Run every (team size, seed) pair and aggregate timing statistics.

    Mission times are deterministic per (size, seed); computing times are
    wall-clock and vary run to run. Rows keep the input order: team sizes
    outer, seeds inner.
    """
    sizes = [int(n) for n in team_sizes]
    seed_list = [int(s) for s in seeds]
    if not sizes or not seed_list:
        raise InvalidInputError("team_sizes and seeds must be nonempty")
    if any(n < 1 for n in sizes):
        raise InvalidInputError("team sizes must be >= 1")

    rows = []
    summary = []
    for n in sizes:
        missions = []
        computings = []
        for s in seed_list:
            t0 = time.perf_counter()
            result = run_pipeline(mission, n_robots=n, seed=s)
            computing = time.perf_counter() - t0
            metrics = _evaluate_result(result)
            rows.append(
                SweepRow(
                    n_robots=n,
                    seed=s,
                    mission_time_s=metrics.completion_time_s,
                    computing_time_s=computing,
                )
            )
            missions.append(metrics.completion_time_s)
            computings.append(computing)
        m = np.asarray(missions)
        c = np.asarray(computings)
        summary.append(
            SweepSummary(
                n_robots=n,
                mean_mission_time_s=float(m.mean()),
                std_mission_time_s=float(m.std(ddof=1)) if len(m) > 1 else 0.0,
                mean_computing_time_s=float(c.mean()),
                std_computing_time_s=float(c.std(ddof=1)) if len(c) > 1 else 0.0,
            )
        )
    return SweepResult(rows=tuple(rows), summary=tuple(summary))
