"""Mission file schema: survey boundary, no-fly zones, robots, and options.

Structural problems (missing fields, malformed coordinates) raise
MissionParseError; out-of-range settings raise MissionValidationError so the
CLI can distinguish the two failure modes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .auction import DEFAULT_BIAS_FACTOR
from .discretize import UavParams, validate_uav_bounds
from .errors import InvalidInputError, MissionParseError, MissionValidationError
from .geo import GeoPoint, Projection
from .pathplan import DEFAULT_LEAF_SIZE

MISSION_VERSION = "1"

DEFAULT_POINTS_PER_EDGE = 3
DEFAULT_TOL_FACTOR = 0.125  # stop Lloyd's when centroids move < width/8
DEFAULT_MAX_ITER = 10


@dataclass(frozen=True)
class MissionOptions:
    """Tunables with working defaults; seed may be left unresolved (None)."""

    bias_factor: float = DEFAULT_BIAS_FACTOR
    points_per_edge: int = DEFAULT_POINTS_PER_EDGE
    leaf_size: int = DEFAULT_LEAF_SIZE
    tol_factor: float = DEFAULT_TOL_FACTOR
    max_iter: int = DEFAULT_MAX_ITER
    seed: int | None = None
    strict_faa: bool = False
    anchor: GeoPoint | None = None


@dataclass(frozen=True)
class MissionSpec:
    boundary: tuple[GeoPoint, ...]
    no_fly: tuple[tuple[GeoPoint, ...], ...]
    robots: tuple[GeoPoint, ...]
    uav: UavParams
    options: MissionOptions
    version: str = MISSION_VERSION

    def anchor(self) -> GeoPoint:
        """Projection anchor: explicit option, else the boundary centroid."""
        if self.options.anchor is not None:
            return self.options.anchor
        return boundary_centroid(self.boundary)

    def projection(self) -> Projection:
        return Projection(anchor=self.anchor())


def boundary_centroid(boundary: tuple[GeoPoint, ...]) -> GeoPoint:
    """Area-weighted centroid of the ring in degree space."""
    a2 = 0.0
    cx = 0.0
    cy = 0.0
    n = len(boundary)
    for i in range(n):
        p, q = boundary[i], boundary[(i + 1) % n]
        w = p.lon * q.lat - q.lon * p.lat
        a2 += w
        cx += (p.lon + q.lon) * w
        cy += (p.lat + q.lat) * w
    if a2 == 0.0:  # degenerate ring; fall back to the vertex mean
        return GeoPoint(
            sum(p.lat for p in boundary) / n, sum(p.lon for p in boundary) / n
        )
    return GeoPoint(cy / (3.0 * a2), cx / (3.0 * a2))


def _require(doc: dict, key: str, source: str) -> Any:
    if key not in doc:
        raise MissionParseError(f"{source}: missing required field '{key}'")
    return doc[key]


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MissionParseError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _geo_pair(value: Any, where: str) -> GeoPoint:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise MissionParseError(f"{where}: expected a [lat, lon] pair, got {value!r}")
    lat = _number(value[0], f"{where}[0]")
    lon = _number(value[1], f"{where}[1]")
    try:
        return GeoPoint(lat, lon)
    except InvalidInputError as exc:
        raise MissionParseError(f"{where}: {exc}") from exc


def _ring(value: Any, where: str, min_points: int) -> tuple[GeoPoint, ...]:
    if not isinstance(value, list):
        raise MissionParseError(f"{where}: expected a list of [lat, lon] pairs")
    if len(value) < min_points:
        raise MissionParseError(f"{where}: needs at least {min_points} vertices, got {len(value)}")
    return tuple(_geo_pair(v, f"{where}[{i}]") for i, v in enumerate(value))


def parse_mission(doc: Any, source: str = "<mission>") -> MissionSpec:
    """Build a MissionSpec from a decoded JSON document."""
    if not isinstance(doc, dict):
        raise MissionParseError(f"{source}: top level must be an object")
    version = doc.get("version", MISSION_VERSION)
    if str(version) != MISSION_VERSION:
        raise MissionParseError(f"{source}: unsupported version {version!r}")

    boundary = _ring(_require(doc, "boundary", source), f"{source}: boundary", 3)
    no_fly_raw = doc.get("no_fly", [])
    if not isinstance(no_fly_raw, list):
        raise MissionParseError(f"{source}: no_fly must be a list of rings")
    no_fly = tuple(
        _ring(ring, f"{source}: no_fly[{i}]", 3) for i, ring in enumerate(no_fly_raw)
    )
    robots = _ring(_require(doc, "robots", source), f"{source}: robots", 1)

    uav_doc = _require(doc, "uav", source)
    if not isinstance(uav_doc, dict):
        raise MissionParseError(f"{source}: uav must be an object")
    try:
        uav = UavParams(
            height_m=_number(_require(uav_doc, "height_m", f"{source}: uav"), f"{source}: uav.height_m"),
            fov_deg=_number(_require(uav_doc, "fov_deg", f"{source}: uav"), f"{source}: uav.fov_deg"),
            velocity_mps=_number(
                _require(uav_doc, "velocity_mps", f"{source}: uav"), f"{source}: uav.velocity_mps"
            ),
        )
    except InvalidInputError as exc:
        raise MissionParseError(f"{source}: uav: {exc}") from exc

    opt_doc = doc.get("options", {})
    if not isinstance(opt_doc, dict):
        raise MissionParseError(f"{source}: options must be an object")
    defaults = MissionOptions()
    seed = opt_doc.get("seed", None)
    if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int)):
        raise MissionParseError(f"{source}: options.seed must be an integer")
    anchor = opt_doc.get("anchor", None)
    strict = opt_doc.get("strict_faa", False)
    if not isinstance(strict, bool):
        raise MissionParseError(f"{source}: options.strict_faa must be a boolean")
    options = MissionOptions(
        bias_factor=_number(opt_doc.get("bias_factor", defaults.bias_factor), f"{source}: options.bias_factor"),
        points_per_edge=int(
            _number(opt_doc.get("points_per_edge", defaults.points_per_edge), f"{source}: options.points_per_edge")
        ),
        leaf_size=int(_number(opt_doc.get("leaf_size", defaults.leaf_size), f"{source}: options.leaf_size")),
        tol_factor=_number(opt_doc.get("tol_factor", defaults.tol_factor), f"{source}: options.tol_factor"),
        max_iter=int(_number(opt_doc.get("max_iter", defaults.max_iter), f"{source}: options.max_iter")),
        seed=seed,
        strict_faa=strict,
        anchor=_geo_pair(anchor, f"{source}: options.anchor") if anchor is not None else None,
    )
    return MissionSpec(
        boundary=boundary,
        no_fly=no_fly,
        robots=robots,
        uav=uav,
        options=options,
        version=str(version),
    )


def load_mission(path: str | Path) -> MissionSpec:
    """Read and parse a mission JSON file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise MissionParseError(f"{path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MissionParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return parse_mission(doc, source=str(path))


def validate_mission(mission: MissionSpec, strict_faa: bool | None = None) -> None:
    """Range-check options and the operating envelope.

    strict_faa overrides the mission's own flag when given. Out-of-envelope
    vehicle settings warn by default and raise only under strict.
    """
    o = mission.options
    problems = []
    if not (math.isfinite(o.bias_factor) and o.bias_factor >= 0.0):
        problems.append(f"options.bias_factor must be >= 0, got {o.bias_factor}")
    if o.points_per_edge < 2:
        problems.append(f"options.points_per_edge must be >= 2, got {o.points_per_edge}")
    if o.leaf_size < 1:
        problems.append(f"options.leaf_size must be >= 1, got {o.leaf_size}")
    if not (math.isfinite(o.tol_factor) and o.tol_factor > 0.0):
        problems.append(f"options.tol_factor must be > 0, got {o.tol_factor}")
    if o.max_iter < 1:
        problems.append(f"options.max_iter must be >= 1, got {o.max_iter}")
    if problems:
        raise MissionValidationError("; ".join(problems))
    strict = mission.options.strict_faa if strict_faa is None else strict_faa
    try:
        validate_uav_bounds(mission.uav, strict=strict)
    except InvalidInputError as exc:
        raise MissionValidationError(str(exc)) from exc


def mission_config_dict(mission: MissionSpec, n_robots: int, seed: int) -> dict:
    """Fully resolved mission echo; identical inputs give an identical dict."""
    return {
        "version": mission.version,
        "boundary": [[p.lat, p.lon] for p in mission.boundary],
        "no_fly": [[[p.lat, p.lon] for p in ring] for ring in mission.no_fly],
        "robots": [[p.lat, p.lon] for p in mission.robots],
        "uav": {
            "height_m": mission.uav.height_m,
            "fov_deg": mission.uav.fov_deg,
            "velocity_mps": mission.uav.velocity_mps,
        },
        "options": {
            "bias_factor": mission.options.bias_factor,
            "points_per_edge": mission.options.points_per_edge,
            "leaf_size": mission.options.leaf_size,
            "tol_factor": mission.options.tol_factor,
            "max_iter": mission.options.max_iter,
            "seed": seed,
            "strict_faa": mission.options.strict_faa,
            "anchor": [mission.anchor().lat, mission.anchor().lon],
        },
        "n_robots": n_robots,
    }
