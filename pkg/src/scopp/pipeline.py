"""Runs the full planning pipeline and times its four stages."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .auction import Assignment, BiasTable, RobotState, auction_conflicts, compute_bias
from .discretize import Grid, PolygonSet, build_grid, validate_uav_bounds
from .errors import InvalidInputError
from .geo import Projection, to_cartesian
from .mission import MissionSpec
from .partition import CellClassification, ClusterState, classify_cells, lloyd_cluster
from .pathplan import Plan, finalize_plan

STAGE_DISCRETIZATION = "Discretization"
STAGE_PARTITIONING = "Partitioning"
STAGE_CONFLICT = "Conflict Resolution"
STAGE_PATH = "Path Planning"
STAGE_TOTAL = "Total"


@dataclass(frozen=True)
class StageTimings:
    """Wall-clock seconds per pipeline stage; total covers glue as well."""

    discretization_s: float
    partitioning_s: float
    conflict_resolution_s: float
    path_planning_s: float
    total_s: float

    def rows(self) -> tuple[tuple[str, float], ...]:
        return (
            (STAGE_DISCRETIZATION, self.discretization_s),
            (STAGE_PARTITIONING, self.partitioning_s),
            (STAGE_CONFLICT, self.conflict_resolution_s),
            (STAGE_PATH, self.path_planning_s),
            (STAGE_TOTAL, self.total_s),
        )


@dataclass(frozen=True)
class PipelineResult:
    mission: MissionSpec
    n_robots: int
    seed: int
    projection: Projection
    area: PolygonSet
    grid: Grid
    robots: tuple[RobotState, ...]
    cluster_state: ClusterState
    classification: CellClassification
    bias: BiasTable
    assignment: Assignment
    plan: Plan
    timings: StageTimings


def resolve_seed(mission: MissionSpec, seed: int | None = None) -> int:
    if seed is not None:
        return seed
    if mission.options.seed is not None:
        return mission.options.seed
    return 0


def run_pipeline(mission: MissionSpec, n_robots: int | None = None, seed: int | None = None) -> PipelineResult:
    """Plan a mission end to end: grid, partition, auction, and routes.

    n_robots defaults to the number of launch positions in the mission; a
    larger team reuses the listed positions round-robin. The resolved seed
    drives the clustering initialization only.
    """
    n = len(mission.robots) if n_robots is None else n_robots
    if n < 1:
        raise InvalidInputError(f"n_robots must be >= 1, got {n}")
    used_seed = resolve_seed(mission, seed)
    validate_uav_bounds(mission.uav, strict=mission.options.strict_faa)

    t0 = time.perf_counter()
    projection = mission.projection()
    area = PolygonSet(
        boundary=tuple(to_cartesian(projection, g) for g in mission.boundary),
        holes=tuple(tuple(to_cartesian(projection, g) for g in ring) for ring in mission.no_fly),
    )
    grid = build_grid(area, mission.uav, points_per_edge=mission.options.points_per_edge)
    t1 = time.perf_counter()

    points, _ = grid.perimeter_point_arrays
    cluster_state = lloyd_cluster(
        points,
        n_clusters=n,
        tol_m=grid.cell_width_m * mission.options.tol_factor,
        max_iter=mission.options.max_iter,
        seed=used_seed,
    )
    t2 = time.perf_counter()

    starts = tuple(mission.robots[i % len(mission.robots)] for i in range(n))
    robots = tuple(
        RobotState(index=i, start=to_cartesian(projection, g), start_geo=g)
        for i, g in enumerate(starts)
    )
    classification = classify_cells(grid, cluster_state)
    bias = compute_bias(list(robots), classification.dominated, grid, mission.options.bias_factor)
    assignment = auction_conflicts(classification.conflicted, classification.dominated, bias, n)
    t3 = time.perf_counter()

    plan = finalize_plan(assignment, list(robots), grid, projection, leaf_size=mission.options.leaf_size)
    t4 = time.perf_counter()

    timings = StageTimings(
        discretization_s=t1 - t0,
        partitioning_s=t2 - t1,
        conflict_resolution_s=t3 - t2,
        path_planning_s=t4 - t3,
        total_s=time.perf_counter() - t0,
    )
    return PipelineResult(
        mission=mission,
        n_robots=n,
        seed=used_seed,
        projection=projection,
        area=area,
        grid=grid,
        robots=robots,
        cluster_state=cluster_state,
        classification=classification,
        bias=bias,
        assignment=assignment,
        plan=plan,
        timings=timings,
    )
