"""Orders each robot's cells into a flight path by repeated nearest-neighbor.

A small KD-tree makes the nearest-unvisited query cheap; its tie-breaking
(lowest point index on equal distance) matches a linear scan exactly so the
planner is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import AbstractSet, Sequence

import numpy as np

from .auction import Assignment, RobotState
from .discretize import Grid
from .errors import EmptyCandidateError, InvalidInputError
from .geo import CartPoint, GeoPoint, Projection, to_geographic

DEFAULT_LEAF_SIZE = 10

QLBM = "qlbm"
SWEEP = "sweep"
RANDOM = "random"


@dataclass(frozen=True, eq=False, slots=True)
class _Node:
    bounds: tuple[float, float, float, float]  # xmin, ymin, xmax, ymax
    indices: np.ndarray | None = None  # leaf payload
    axis: int = -1
    left: "_Node | None" = None
    right: "_Node | None" = None
    # leaf point data as plain floats, (x, y, index); avoids numpy scalar
    # overhead in the query hot loop
    leaf_xyi: tuple[tuple[float, float, int], ...] | None = None

    @property
    def is_leaf(self) -> bool:
        return self.indices is not None


@dataclass(frozen=True, eq=False)
class KdTree:
    """2-d tree over a fixed point set; splits alternate x/y by depth."""

    points: np.ndarray
    leaf_size: int
    root: _Node


def _make_leaf(pts: np.ndarray, idx: np.ndarray, bounds: tuple[float, float, float, float]) -> _Node:
    leaf = np.sort(idx)
    leaf.setflags(write=False)
    coords = pts[leaf].tolist()
    return _Node(
        bounds=bounds,
        indices=leaf,
        leaf_xyi=tuple((cx, cy, int(i)) for (cx, cy), i in zip(coords, leaf.tolist())),
    )


def _build(
    pts: np.ndarray, by_x: np.ndarray, by_y: np.ndarray, depth: int, leaf_size: int, side: np.ndarray
) -> _Node:
    # by_x/by_y hold the same point indices presorted by (x, index) and
    # (y, index); bounds then come from the first and last entries.
    bounds = (
        float(pts[by_x[0], 0]),
        float(pts[by_y[0], 1]),
        float(pts[by_x[-1], 0]),
        float(pts[by_y[-1], 1]),
    )
    m = len(by_x)
    if m <= leaf_size:
        return _make_leaf(pts, by_x, bounds)
    # Split at the median position: both halves are always nonempty, so
    # leaves never overflow.
    key = by_x if depth % 2 == 0 else by_y
    mid = m // 2
    left_key, right_key = key[:mid], key[mid:]
    side[left_key] = True
    side[right_key] = False
    if depth % 2 == 0:
        mask = side[by_y]
        lx, rx = left_key, right_key
        ly, ry = by_y[mask], by_y[~mask]
    else:
        mask = side[by_x]
        lx, rx = by_x[mask], by_x[~mask]
        ly, ry = left_key, right_key
    return _Node(
        bounds=bounds,
        axis=depth % 2,
        left=_build(pts, lx, ly, depth + 1, leaf_size, side),
        right=_build(pts, rx, ry, depth + 1, leaf_size, side),
    )


def kd_build(points, leaf_size: int = DEFAULT_LEAF_SIZE) -> KdTree:
    """Build a KD-tree over the given points."""
    if leaf_size < 1:
        raise InvalidInputError(f"leaf_size must be >= 1, got {leaf_size}")
    if isinstance(points, np.ndarray):
        pts = np.array(points, dtype=float)
    else:
        pts = np.array([(p.x, p.y) for p in points], dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) == 0:
        raise InvalidInputError("points must be a nonempty (n, 2) set")
    if not np.isfinite(pts).all():
        raise InvalidInputError("points must be finite")
    pts.setflags(write=False)
    n = len(pts)
    idx = np.arange(n, dtype=np.int64)
    by_x = idx[np.lexsort((idx, pts[:, 0]))]
    by_y = idx[np.lexsort((idx, pts[:, 1]))]
    root = _build(pts, by_x, by_y, 0, leaf_size, np.empty(n, dtype=bool))
    return KdTree(points=pts, leaf_size=leaf_size, root=root)


def _box_min_d2(bounds: tuple[float, float, float, float], x: float, y: float) -> float:
    dx = max(bounds[0] - x, 0.0, x - bounds[2])
    dy = max(bounds[1] - y, 0.0, y - bounds[3])
    return dx * dx + dy * dy


def kd_nearest(tree: KdTree, query: CartPoint, exclude: AbstractSet[int] = frozenset()) -> int:
    """Index of the nearest non-excluded point (ties to the lowest index)."""
    x, y = query.x, query.y
    best_d2 = math.inf
    best_i = -1
    stack = [(0.0, tree.root)]
    while stack:
        box_d2, node = stack.pop()
        # Non-strict bound keeps equally distant lower-index points reachable.
        if box_d2 > best_d2:
            continue
        leaf = node.leaf_xyi
        if leaf is not None:
            for px, py, i in leaf:
                if i in exclude:
                    continue
                dx = px - x
                dy = py - y
                d2 = dx * dx + dy * dy
                if d2 < best_d2 or (d2 == best_d2 and i < best_i):
                    best_d2 = d2
                    best_i = i
            continue
        left, right = node.left, node.right
        x0, y0, x1, y1 = left.bounds
        dx = x0 - x if x < x0 else (x - x1 if x > x1 else 0.0)
        dy = y0 - y if y < y0 else (y - y1 if y > y1 else 0.0)
        dl = dx * dx + dy * dy
        x0, y0, x1, y1 = right.bounds
        dx = x0 - x if x < x0 else (x - x1 if x > x1 else 0.0)
        dy = y0 - y if y < y0 else (y - y1 if y > y1 else 0.0)
        dr = dx * dx + dy * dy
        # push the nearer child last so it is explored first
        if dl <= dr:
            if dr <= best_d2:
                stack.append((dr, right))
            stack.append((dl, left))
        else:
            if dl <= best_d2:
                stack.append((dl, left))
            stack.append((dr, right))
    if best_i < 0:
        raise EmptyCandidateError("every point is excluded")
    return best_i


def plan_path(
    start: CartPoint,
    cell_centers: Sequence[CartPoint],
    leaf_size: int = DEFAULT_LEAF_SIZE,
) -> list[CartPoint]:
    """Chain cell centers greedily from start, always hopping to the nearest
    unvisited one. Returns [start] when there is nothing to visit.

    The tree is rebuilt over the remaining task list after every hop. Since
    the remaining list keeps its original relative order, tie-breaking by
    lowest tree index matches lowest original index exactly.
    """
    if not cell_centers:
        return [start]
    pts = np.array([(p.x, p.y) for p in cell_centers], dtype=float)
    remaining = list(range(len(cell_centers)))
    path = [start]
    cursor = start
    while remaining:
        tree = kd_build(pts[remaining], leaf_size=leaf_size)
        nxt = kd_nearest(tree, cursor)
        cursor = cell_centers[remaining.pop(nxt)]
        path.append(cursor)
    return path


@dataclass(frozen=True)
class Plan:
    """Ordered waypoints per robot, in the plane and (optionally) geographic."""

    waypoints_by_robot: tuple[tuple[CartPoint, ...], ...]
    assigned_cells: tuple[tuple[int, ...], ...]
    strategy: str = QLBM
    waypoints_geo: tuple[tuple[GeoPoint, ...], ...] | None = None

    @property
    def n_robots(self) -> int:
        return len(self.waypoints_by_robot)


def attach_geographic(plan: Plan, projection: Projection) -> Plan:
    """Fill in geographic waypoints via the inverse transform."""
    geo = tuple(
        tuple(to_geographic(projection, w) for w in route) for route in plan.waypoints_by_robot
    )
    return Plan(
        waypoints_by_robot=plan.waypoints_by_robot,
        assigned_cells=plan.assigned_cells,
        strategy=plan.strategy,
        waypoints_geo=geo,
    )


def finalize_plan(
    assignment: Assignment,
    robots: list[RobotState],
    grid: Grid,
    projection: Projection,
    leaf_size: int = DEFAULT_LEAF_SIZE,
) -> Plan:
    """Turn a cell assignment into per-robot waypoint routes."""
    if len(assignment.cells_by_robot) != len(robots):
        raise InvalidInputError(
            f"assignment covers {len(assignment.cells_by_robot)} robots, got {len(robots)}"
        )
    center_of = {c.id: c.center for c in grid.free_cells}
    by_index = sorted(robots, key=lambda r: r.index)
    routes = []
    for robot in by_index:
        centers = [center_of[cid] for cid in assignment.cells_by_robot[robot.index]]
        routes.append(tuple(plan_path(robot.start, centers, leaf_size=leaf_size)))
    plan = Plan(
        waypoints_by_robot=tuple(routes),
        assigned_cells=assignment.cells_by_robot,
        strategy=QLBM,
    )
    return attach_geographic(plan, projection)
