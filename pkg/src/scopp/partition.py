"""Splits the surveyable area among robots by clustering cell perimeter points.

Lloyd's algorithm on the perimeter samples yields contiguous, size-balanced
regions; cells whose samples end up in different clusters are flagged as
conflicted and settled later by the auction step.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .discretize import Grid
from .errors import InconsistentStateError, InvalidInputError
from .geo import CartPoint

_ASSIGN_CHUNK = 8192


@dataclass(frozen=True, eq=False)
class ClusterState:
    """Converged clustering: centroids, per-point labels, and inertia history."""

    centroids: tuple[CartPoint, ...]
    labels: np.ndarray
    inertia: float
    iterations_run: int
    inertia_by_iteration: tuple[float, ...]


@dataclass(frozen=True)
class CellClassification:
    """Cells split into dominated (single owner) and conflicted (several)."""

    dominated: dict[int, int]
    conflicted: tuple[int, ...]


def _as_array(points) -> np.ndarray:
    if isinstance(points, np.ndarray):
        arr = np.asarray(points, dtype=float)
    else:
        arr = np.array([(p.x, p.y) for p in points], dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise InvalidInputError(f"points must be (n, 2), got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise InvalidInputError("points must be finite")
    return arr


def _assign(pts: np.ndarray, centroids: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Label each point with its nearest centroid (ties to the lowest index)."""
    n = len(pts)
    labels = np.empty(n, dtype=np.int64)
    min_d2 = np.empty(n, dtype=float)
    for lo in range(0, n, _ASSIGN_CHUNK):
        hi = min(lo + _ASSIGN_CHUNK, n)
        diff = pts[lo:hi, None, :] - centroids[None, :, :]
        d2 = (diff * diff).sum(axis=2)
        labels[lo:hi] = d2.argmin(axis=1)
        min_d2[lo:hi] = d2[np.arange(hi - lo), labels[lo:hi]]
    return labels, min_d2


def _seed_centroids(pts: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    """k-means++ style seeding: spread initial centroids by squared distance."""
    n = len(pts)
    chosen = [int(rng.integers(n))]
    d2 = ((pts - pts[chosen[0]]) ** 2).sum(axis=1)
    for _ in range(1, k):
        total = d2.sum()
        if total > 0.0:
            idx = int(rng.choice(n, p=d2 / total))
        else:
            idx = int(rng.integers(n))  # all remaining points coincide
        chosen.append(idx)
        d2 = np.minimum(d2, ((pts - pts[idx]) ** 2).sum(axis=1))
    return pts[chosen].copy()


def _update(pts: np.ndarray, labels: np.ndarray, old: np.ndarray, k: int) -> np.ndarray:
    counts = np.bincount(labels, minlength=k).astype(float)
    sum_x = np.bincount(labels, weights=pts[:, 0], minlength=k)
    sum_y = np.bincount(labels, weights=pts[:, 1], minlength=k)
    new = old.copy()
    nonempty = counts > 0
    new[nonempty, 0] = sum_x[nonempty] / counts[nonempty]
    new[nonempty, 1] = sum_y[nonempty] / counts[nonempty]
    # Reseed each empty cluster at the point farthest from its stale centroid
    # so every robot keeps a region.
    taken: set[int] = set()
    for e in np.flatnonzero(~nonempty):
        d2 = ((pts - old[e]) ** 2).sum(axis=1)
        for idx in np.argsort(-d2, kind="stable"):
            if int(idx) not in taken:
                taken.add(int(idx))
                new[e] = pts[idx]
                break
    return new


def lloyd_cluster(
    points,
    n_clusters: int,
    tol_m: float,
    max_iter: int = 10,
    seed: int | None = None,
) -> ClusterState:
    """Cluster points into n_clusters groups, stopping when centroids settle.

    Iteration stops once the largest centroid displacement drops below tol_m,
    the labels stop changing, or max_iter rounds have run. Inertia (sum of
    squared point-to-nearest-centroid distances) is recorded after each round.
    """
    pts = _as_array(points)
    n = len(pts)
    if n == 0:
        raise InvalidInputError("no points to cluster")
    if not 1 <= n_clusters <= n:
        raise InvalidInputError(f"n_clusters must be in [1, {n}], got {n_clusters}")
    if not tol_m > 0.0:
        raise InvalidInputError(f"tol_m must be > 0, got {tol_m}")
    if max_iter < 1:
        raise InvalidInputError(f"max_iter must be >= 1, got {max_iter}")

    rng = np.random.default_rng(seed)
    centroids = _seed_centroids(pts, n_clusters, rng)
    labels, _ = _assign(pts, centroids)

    history: list[float] = []
    iterations = 0
    while iterations < max_iter:
        iterations += 1
        new_centroids = _update(pts, labels, centroids, n_clusters)
        shift = float(np.sqrt(((new_centroids - centroids) ** 2).sum(axis=1)).max())
        centroids = new_centroids
        new_labels, min_d2 = _assign(pts, centroids)
        history.append(float(min_d2.sum()))
        unchanged = bool(np.array_equal(new_labels, labels))
        labels = new_labels
        if shift < tol_m or unchanged:
            break

    labels.setflags(write=False)
    return ClusterState(
        centroids=tuple(CartPoint(float(c[0]), float(c[1])) for c in centroids),
        labels=labels,
        inertia=history[-1],
        iterations_run=iterations,
        inertia_by_iteration=tuple(history),
    )


def classify_cells(grid: Grid, state: ClusterState) -> CellClassification:
    """Mark each free cell dominated (all samples in one cluster) or conflicted."""
    _, owner_ids = grid.perimeter_point_arrays
    if len(state.labels) != len(owner_ids):
        raise InconsistentStateError(
            f"labels cover {len(state.labels)} points but the grid has {len(owner_ids)}"
        )
    dominated: dict[int, int] = {}
    conflicted: list[int] = []
    pos = 0
    for cell in grid.free_cells:
        k = len(cell.perimeter_points)
        block = state.labels[pos : pos + k]
        pos += k
        first = int(block[0])
        if bool((block == first).all()):
            dominated[cell.id] = first
        else:
            conflicted.append(cell.id)
    return CellClassification(dominated=dominated, conflicted=tuple(conflicted))
