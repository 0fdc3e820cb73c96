"""Serializes plans and benchmark results to GeoJSON and CSV.

All floats are rounded to 9 significant digits before writing so repeated
runs with the same inputs produce byte-identical files.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .errors import InvalidInputError
from .pathplan import Plan
from .pipeline import StageTimings
from .sim import MetricsReport, SweepResult

PLAN_DOC_VERSION = "coverage-plan/1"


def sig9(x: float) -> float:
    """Round to 9 significant digits."""
    return float(f"{x:.9g}")


def _round_tree(value):
    if isinstance(value, float):
        return sig9(value)
    if isinstance(value, dict):
        return {k: _round_tree(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round_tree(v) for v in value]
    return value


def plan_geojson(plan: Plan, metrics: MetricsReport, config: dict) -> dict:
    """GeoJSON FeatureCollection: one LineString route per robot.

    Coordinates follow the GeoJSON convention, [lon, lat]. Mission-level
    results ride along as foreign members (version, config, metrics).
    """
    if plan.waypoints_geo is None:
        raise InvalidInputError("plan has no geographic waypoints; attach a projection first")
    features = []
    for r, route in enumerate(plan.waypoints_geo):
        coords = [[p.lon, p.lat] for p in route]
        features.append(
            {
                "type": "Feature",
                "geometry": {"type": "LineString", "coordinates": coords},
                "properties": {
                    "robot": r,
                    "strategy": plan.strategy,
                    "n_cells": len(plan.assigned_cells[r]),
                    "area_m2": metrics.area_by_robot_m2[r],
                    "travel_time_s": metrics.t_by_robot[r],
                    "eta_s": list(metrics.eta_by_robot[r]),
                    "assigned_cells": list(plan.assigned_cells[r]),
                },
            }
        )
    doc = {
        "type": "FeatureCollection",
        "version": PLAN_DOC_VERSION,
        "config": config,
        "metrics": {
            "completion_time_s": metrics.completion_time_s,
            "t_by_robot_s": list(metrics.t_by_robot),
            "area_by_robot_m2": list(metrics.area_by_robot_m2),
            "n_cells_by_robot": list(metrics.n_cells_by_robot),
            "coverage_curve": [[t, a] for t, a in metrics.coverage_curve],
        },
        "features": features,
    }
    return _round_tree(doc)


def write_json(doc: dict, path: str | Path) -> None:
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _fmt(x) -> str:
    return f"{x:.9g}" if isinstance(x, float) else str(x)


def write_waypoints_csv(plan: Plan, metrics: MetricsReport, path: str | Path) -> None:
    """Flat per-waypoint table: robot, seq, lat, lon, eta_s."""
    if plan.waypoints_geo is None:
        raise InvalidInputError("plan has no geographic waypoints; attach a projection first")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["robot", "seq", "lat", "lon", "eta_s"])
        for r, route in enumerate(plan.waypoints_geo):
            for seq, p in enumerate(route):
                writer.writerow(
                    [r, seq, _fmt(sig9(p.lat)), _fmt(sig9(p.lon)), _fmt(sig9(metrics.eta_by_robot[r][seq]))]
                )


def write_bench_csv(result: SweepResult, path: str | Path) -> None:
    """Per-run rows followed by per-team-size mean/std rows."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["kind", "n_robots", "seed", "mission_time_s", "computing_time_s"])
        for row in result.rows:
            writer.writerow(
                ["run", row.n_robots, row.seed, _fmt(sig9(row.mission_time_s)), _fmt(sig9(row.computing_time_s))]
            )
        for s in result.summary:
            writer.writerow(
                ["mean", s.n_robots, "", _fmt(sig9(s.mean_mission_time_s)), _fmt(sig9(s.mean_computing_time_s))]
            )
            writer.writerow(
                ["std", s.n_robots, "", _fmt(sig9(s.std_mission_time_s)), _fmt(sig9(s.std_computing_time_s))]
            )


def write_timings_csv(timings: StageTimings, path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["stage", "seconds"])
        for name, seconds in timings.rows():
            writer.writerow([name, _fmt(sig9(seconds))])
