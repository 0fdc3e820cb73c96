"""Settles conflicted cells with a greedy auction biased by start distance.

Robots that start farther from the survey area lose a little effective
priority: their bid is inflated by d0 * B converted to cell-count units,
which shifts work toward robots that are already close.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .discretize import Grid
from .errors import InconsistentStateError, InvalidInputError
from .geo import CartPoint, GeoPoint

DEFAULT_BIAS_FACTOR = 0.5

DOMINATED = "dominated"
AUCTIONED = "auctioned"


@dataclass(frozen=True)
class RobotState:
    """A robot's slot in the team and its launch position."""

    index: int
    start: CartPoint
    start_geo: GeoPoint | None = None

    def __post_init__(self) -> None:
        if self.index < 0:
            raise InvalidInputError(f"robot index must be >= 0, got {self.index}")


@dataclass(frozen=True)
class BiasTable:
    """Per-robot start-distance bias, expressed in cell-count units."""

    d0_m: tuple[float, ...]
    bias_cells: tuple[float, ...]
    bias_factor: float


@dataclass(frozen=True)
class Assignment:
    """Final cell ownership: sorted cell ids per robot plus provenance."""

    cells_by_robot: tuple[tuple[int, ...], ...]
    source: dict[int, str]


def compute_bias(
    robots: list[RobotState],
    dominated: dict[int, int],
    grid: Grid,
    bias_factor: float = DEFAULT_BIAS_FACTOR,
) -> BiasTable:
    """Bias each robot by its distance to its nearest dominated cell center.

    A robot with no dominated cells falls back to the nearest free cell.
    The distance is scaled by bias_factor and divided by the cell width so it
    is comparable to the auction's cell counts.
    """
    if not robots:
        raise InvalidInputError("need at least one robot")
    if sorted(r.index for r in robots) != list(range(len(robots))):
        raise InvalidInputError("robot indexes must be exactly 0..n-1")
    if not (math.isfinite(bias_factor) and bias_factor >= 0.0):
        raise InvalidInputError(f"bias_factor must be >= 0, got {bias_factor}")
    if grid.n_free == 0:
        raise InvalidInputError("grid has no free cells to measure distance against")

    by_index = sorted(robots, key=lambda r: r.index)
    center_of = {c.id: c.center for c in grid.free_cells}
    owned_centers: list[list[CartPoint]] = [[] for _ in robots]
    for cell_id, robot in dominated.items():
        if not 0 <= robot < len(robots):
            raise InvalidInputError(f"dominated cell {cell_id} names unknown robot {robot}")
        owned_centers[robot].append(center_of[cell_id])

    width = grid.cell_width_m
    all_free = [c.center for c in grid.free_cells]
    d0 = []
    for robot in by_index:
        candidates = owned_centers[robot.index] or all_free
        d0.append(min(math.hypot(p.x - robot.start.x, p.y - robot.start.y) for p in candidates))
    return BiasTable(
        d0_m=tuple(d0),
        bias_cells=tuple(d * bias_factor / width for d in d0),
        bias_factor=bias_factor,
    )


def auction_conflicts(
    conflicted,
    dominated: dict[int, int],
    bias: BiasTable,
    n_robots: int,
) -> Assignment:
    """Award each conflicted cell to the robot with the lowest biased load.

    Cells are auctioned in ascending id order; a robot's bid is its current
    cell count plus its fixed bias, ties going to the lowest robot index.
    """
    if n_robots <= 0:
        raise InvalidInputError(f"n_robots must be >= 1, got {n_robots}")
    if len(bias.bias_cells) != n_robots:
        raise InvalidInputError(
            f"bias table covers {len(bias.bias_cells)} robots, expected {n_robots}"
        )
    conflicted_ids = sorted(int(c) for c in conflicted)
    overlap = set(conflicted_ids) & set(dominated)
    if overlap:
        raise InconsistentStateError(f"cells both dominated and conflicted: {sorted(overlap)}")

    counts = np.zeros(n_robots, dtype=float)
    cells: list[list[int]] = [[] for _ in range(n_robots)]
    source: dict[int, str] = {}
    for cell_id, robot in dominated.items():
        if not 0 <= robot < n_robots:
            raise InvalidInputError(f"dominated cell {cell_id} names unknown robot {robot}")
        counts[robot] += 1.0
        cells[robot].append(int(cell_id))
        source[int(cell_id)] = DOMINATED

    bias_arr = np.asarray(bias.bias_cells, dtype=float)
    for cell_id in conflicted_ids:
        winner = int(np.argmin(counts + bias_arr))
        counts[winner] += 1.0
        cells[winner].append(cell_id)
        source[cell_id] = AUCTIONED

    return Assignment(
        cells_by_robot=tuple(tuple(sorted(c)) for c in cells),
        source=source,
    )
