"""Discretizes the mission area into square cells with perimeter sample points.

Cell width follows from the camera footprint: a robot hovering at height h
with downward field of view F sees a square of side 2*h*tan(F/2), so a cell
is fully surveyed the moment a robot reaches its center.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import EmptyGridError, InvalidInputError
from .geo import CartPoint

# Operating envelope used for mission validation: small-UAS altitude/speed
# limits combined with the height range a thermal camera can resolve people.
MIN_OPERATING_HEIGHT_M = 25.0
MAX_OPERATING_HEIGHT_M = 100.0
MIN_VELOCITY_MPS = 2.0
MAX_VELOCITY_MPS = 10.0

FREE = "free"
BLOCKED = "blocked"

# A point within this distance of a ring edge counts as on the edge.
_ON_EDGE_TOL_M = 1e-9


@dataclass(frozen=True)
class UavParams:
    """Vehicle parameters that size the grid and drive the simulator."""

    height_m: float
    fov_deg: float
    velocity_mps: float

    def __post_init__(self) -> None:
        for name in ("height_m", "fov_deg", "velocity_mps"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidInputError(f"{name} must be finite")
        if not 0.0 < self.fov_deg < 180.0:
            raise InvalidInputError(f"fov_deg must be in (0, 180), got {self.fov_deg}")
        if self.height_m < 0.0:
            raise InvalidInputError(f"height_m must be >= 0, got {self.height_m}")
        if self.velocity_mps <= 0.0:
            raise InvalidInputError(f"velocity_mps must be > 0, got {self.velocity_mps}")

    def operating_bound_violations(self) -> tuple[str, ...]:
        """Operating-envelope violations (empty when within bounds)."""
        problems = []
        if not MIN_OPERATING_HEIGHT_M <= self.height_m <= MAX_OPERATING_HEIGHT_M:
            problems.append(
                f"height_m={self.height_m} outside operating bounds "
                f"[{MIN_OPERATING_HEIGHT_M}, {MAX_OPERATING_HEIGHT_M}]"
            )
        if not MIN_VELOCITY_MPS <= self.velocity_mps <= MAX_VELOCITY_MPS:
            problems.append(
                f"velocity_mps={self.velocity_mps} outside operating bounds "
                f"[{MIN_VELOCITY_MPS}, {MAX_VELOCITY_MPS}]"
            )
        return tuple(problems)


def validate_uav_bounds(params: UavParams, strict: bool = False) -> None:
    """Warn on operating-envelope violations, or raise when strict."""
    problems = params.operating_bound_violations()
    if not problems:
        return
    message = "; ".join(problems)
    if strict:
        raise InvalidInputError(message)
    warnings.warn(message, stacklevel=2)


def cell_width(params: UavParams) -> float:
    """Ground footprint width in meters: 2 * h * tan(F / 2)."""
    return 2.0 * params.height_m * math.tan(math.radians(params.fov_deg) / 2.0)


def ring_area(ring: Sequence[CartPoint]) -> float:
    """Signed shoelace area of a ring (positive when counter-clockwise)."""
    total = 0.0
    n = len(ring)
    for i in range(n):
        a, b = ring[i], ring[(i + 1) % n]
        total += a.x * b.y - b.x * a.y
    return total / 2.0


def ring_perimeter(ring: Sequence[CartPoint]) -> float:
    """Total edge length of a closed ring."""
    n = len(ring)
    return sum(math.hypot(ring[(i + 1) % n].x - ring[i].x, ring[(i + 1) % n].y - ring[i].y) for i in range(n))


def _orient(a: CartPoint, b: CartPoint, c: CartPoint) -> float:
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def _segments_cross(p1: CartPoint, p2: CartPoint, q1: CartPoint, q2: CartPoint) -> bool:
    d1 = _orient(q1, q2, p1)
    d2 = _orient(q1, q2, p2)
    d3 = _orient(p1, p2, q1)
    d4 = _orient(p1, p2, q2)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)):
        return True
    # Collinear overlap also makes the ring non-simple.
    def on(a: CartPoint, b: CartPoint, c: CartPoint) -> bool:
        return (
            _orient(a, b, c) == 0.0
            and min(a.x, b.x) <= c.x <= max(a.x, b.x)
            and min(a.y, b.y) <= c.y <= max(a.y, b.y)
        )
    return on(p1, p2, q1) or on(p1, p2, q2) or on(q1, q2, p1) or on(q1, q2, p2)


def _normalize_ring(points: Sequence[CartPoint], ccw: bool, label: str) -> tuple[CartPoint, ...]:
    ring = list(points)
    if len(ring) >= 2 and ring[0] == ring[-1]:
        ring = ring[:-1]
    if len(ring) < 3:
        raise InvalidInputError(f"{label} needs at least 3 distinct vertices, got {len(ring)}")
    area = ring_area(ring)
    if area == 0.0:
        raise InvalidInputError(f"{label} is degenerate (zero area)")
    n = len(ring)
    for i in range(n):
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue  # adjacent edges share a vertex
            if _segments_cross(ring[i], ring[(i + 1) % n], ring[j], ring[(j + 1) % n]):
                raise InvalidInputError(f"{label} is self-intersecting")
    if (area > 0.0) != ccw:
        ring.reverse()
    return tuple(ring)


@dataclass(frozen=True)
class PolygonSet:
    """Mission area: one outer boundary (CCW) and zero or more hole rings (CW)."""

    boundary: tuple[CartPoint, ...]
    holes: tuple[tuple[CartPoint, ...], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "boundary", _normalize_ring(self.boundary, ccw=True, label="boundary"))
        holes = tuple(
            _normalize_ring(h, ccw=False, label=f"hole[{i}]") for i, h in enumerate(self.holes)
        )
        object.__setattr__(self, "holes", holes)
        for i, hole in enumerate(holes):
            if not self._touches_boundary(hole):
                raise InvalidInputError(f"hole[{i}] lies entirely outside the boundary")

    def _touches_boundary(self, hole: tuple[CartPoint, ...]) -> bool:
        if any(point_in_polygon(v, self.boundary) for v in hole):
            return True
        if any(point_in_polygon(v, hole) for v in self.boundary):
            return True
        nb, nh = len(self.boundary), len(hole)
        return any(
            _segments_cross(self.boundary[i], self.boundary[(i + 1) % nb], hole[j], hole[(j + 1) % nh])
            for i in range(nb)
            for j in range(nh)
        )


@dataclass(frozen=True)
class Cell:
    """One square grid cell; blocked cells carry no perimeter points."""

    id: int
    center: CartPoint
    perimeter_points: tuple[CartPoint, ...]
    status: str

    @property
    def is_free(self) -> bool:
        return self.status == FREE


@dataclass(frozen=True)
class Grid:
    """Regular lattice of cells covering the boundary's bounding box."""

    cells: tuple[Cell, ...]
    cell_width_m: float
    origin: CartPoint  # min corner of the boundary bounding box
    rows: int
    cols: int

    @cached_property
    def free_cells(self) -> tuple[Cell, ...]:
        return tuple(c for c in self.cells if c.is_free)

    @cached_property
    def free_cell_ids(self) -> tuple[int, ...]:
        return tuple(c.id for c in self.free_cells)

    @property
    def n_free(self) -> int:
        return len(self.free_cells)

    @property
    def free_area_m2(self) -> float:
        return self.n_free * self.cell_width_m**2

    @cached_property
    def free_center_array(self) -> np.ndarray:
        arr = np.array([(c.center.x, c.center.y) for c in self.free_cells], dtype=float)
        arr.setflags(write=False)
        return arr

    @cached_property
    def perimeter_point_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """All free-cell perimeter points as (n, 2) floats plus owning cell ids."""
        pts = []
        owners = []
        for cell in self.free_cells:
            for p in cell.perimeter_points:
                pts.append((p.x, p.y))
                owners.append(cell.id)
        points = np.array(pts, dtype=float).reshape(-1, 2)
        owner_ids = np.array(owners, dtype=np.int64)
        points.setflags(write=False)
        owner_ids.setflags(write=False)
        return points, owner_ids

    def row_col(self, cell_id: int) -> tuple[int, int]:
        return divmod(cell_id, self.cols)

    def cell_at(self, row: int, col: int) -> Cell:
        return self.cells[row * self.cols + col]


def point_in_polygon(pt: CartPoint, ring: Sequence[CartPoint]) -> bool:
    """Even-odd containment test; points on an edge count as inside."""
    if len(ring) < 3:
        raise InvalidInputError(f"ring needs at least 3 vertices, got {len(ring)}")
    x, y = pt.x, pt.y
    inside = False
    n = len(ring)
    for i in range(n):
        a = ring[i]
        b = ring[(i + 1) % n]
        ex, ey = b.x - a.x, b.y - a.y
        seg_len = math.hypot(ex, ey)
        if seg_len > 0.0:
            cross = ex * (y - a.y) - ey * (x - a.x)
            if (
                abs(cross) <= _ON_EDGE_TOL_M * seg_len
                and min(a.x, b.x) - _ON_EDGE_TOL_M <= x <= max(a.x, b.x) + _ON_EDGE_TOL_M
                and min(a.y, b.y) - _ON_EDGE_TOL_M <= y <= max(a.y, b.y) + _ON_EDGE_TOL_M
            ):
                return True
        if (a.y > y) != (b.y > y):
            x_cross = a.x + (y - a.y) * ex / ey
            if x < x_cross:
                inside = not inside
    return inside


def _perimeter_points(cx: float, cy: float, width: float, points_per_edge: int) -> tuple[CartPoint, ...]:
    # Evenly spaced walk around the square, counter-clockwise from the SW
    # corner; each edge contributes its starting corner plus interior points.
    x0, y0 = cx - width / 2.0, cy - width / 2.0
    step = width / points_per_edge
    pts: list[CartPoint] = []
    for i in range(4 * points_per_edge):
        edge, k = divmod(i, points_per_edge)
        off = k * step
        if edge == 0:
            pts.append(CartPoint(x0 + off, y0))
        elif edge == 1:
            pts.append(CartPoint(x0 + width, y0 + off))
        elif edge == 2:
            pts.append(CartPoint(x0 + width - off, y0 + width))
        else:
            pts.append(CartPoint(x0, y0 + width - off))
    return tuple(pts)


def build_grid(area: PolygonSet, params: UavParams, points_per_edge: int = 3) -> Grid:
    """Lay a lattice of cells over the boundary and mark free/blocked status.

    A cell is free iff its center is inside the boundary and outside every
    hole; only free cells get perimeter sample points.
    """
    if points_per_edge < 2:
        raise InvalidInputError(f"points_per_edge must be >= 2, got {points_per_edge}")
    width = cell_width(params)
    if width <= 0.0:
        raise InvalidInputError("cell width is zero; check height_m and fov_deg")
    if abs(ring_area(area.boundary)) < width * width:
        raise EmptyGridError(
            f"boundary area {abs(ring_area(area.boundary)):.3f} m^2 is smaller than one "
            f"{width:.3f} m cell"
        )
    min_x = min(p.x for p in area.boundary)
    min_y = min(p.y for p in area.boundary)
    max_x = max(p.x for p in area.boundary)
    max_y = max(p.y for p in area.boundary)
    cols = max(1, math.ceil((max_x - min_x) / width))
    rows = max(1, math.ceil((max_y - min_y) / width))

    cells = []
    n_free = 0
    for row in range(rows):
        for col in range(cols):
            center = CartPoint(min_x + (col + 0.5) * width, min_y + (row + 0.5) * width)
            free = point_in_polygon(center, area.boundary) and not any(
                point_in_polygon(center, hole) for hole in area.holes
            )
            n_free += free
            cells.append(
                Cell(
                    id=row * cols + col,
                    center=center,
                    perimeter_points=_perimeter_points(center.x, center.y, width, points_per_edge)
                    if free
                    else (),
                    status=FREE if free else BLOCKED,
                )
            )
    if n_free == 0:
        raise EmptyGridError("no cell center falls inside the boundary")
    return Grid(
        cells=tuple(cells),
        cell_width_m=width,
        origin=CartPoint(min_x, min_y),
        rows=rows,
        cols=cols,
    )
