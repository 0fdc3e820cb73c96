"""SVG figures for plans and benchmark sweeps (headless matplotlib)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .pipeline import StageTimings
from .sim import MetricsReport, SweepResult


def save_coverage_plot(metrics: MetricsReport, path: str | Path) -> None:
    """Covered area versus time for one simulated mission."""
    ts = [t for t, _ in metrics.coverage_curve]
    areas = [a for _, a in metrics.coverage_curve]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.step(ts, areas, where="post")
    ax.set_xlabel("time (s)")
    ax.set_ylabel("covered area (m$^2$)")
    ax.set_title("Coverage over time")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def _sweep_plot(result: SweepResult, which: str, ylabel: str, title: str, path: str | Path) -> None:
    sizes = [s.n_robots for s in result.summary]
    means = [getattr(s, f"mean_{which}_s") for s in result.summary]
    stds = [getattr(s, f"std_{which}_s") for s in result.summary]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.errorbar(sizes, means, yerr=stds, marker="o", capsize=3)
    ax.set_xlabel("team size")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def save_mission_time_plot(result: SweepResult, path: str | Path) -> None:
    _sweep_plot(result, "mission_time", "mission time (s)", "Mission time vs team size", path)


def save_computing_time_plot(result: SweepResult, path: str | Path) -> None:
    _sweep_plot(result, "computing_time", "computing time (s)", "Computing time vs team size", path)


def save_timings_plot(timings: StageTimings, path: str | Path) -> None:
    """Bar chart of per-stage wall-clock time."""
    rows = [(name, seconds) for name, seconds in timings.rows() if name != "Total"]
    names = [n for n, _ in rows]
    values = [v for _, v in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(names, values)
    ax.set_ylabel("seconds")
    ax.set_title("Pipeline stage timings")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
