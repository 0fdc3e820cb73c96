"""Per-stage computing-time profile across team sizes.

Runs the pipeline for each (team size, seed) pair, averages the stage
timings over seeds, and plots how each stage scales with the team. Path
planning gets cheaper as regions shrink while partitioning grows.
"""

from __future__ import annotations

import argparse
import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from scopp.cli import _int_list
from scopp.mission import load_mission, validate_mission
from scopp.pipeline import run_pipeline

ROOT = Path(__file__).resolve().parent.parent
STAGES = ("Discretization", "Partitioning", "Conflict Resolution", "Path Planning", "Total")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--mission", default=str(ROOT / "missions" / "medium.json"))
    parser.add_argument("--team-sizes", type=_int_list, default=[5, 10, 15, 20])
    parser.add_argument("--seeds", type=_int_list, default=[0, 1, 2])
    parser.add_argument("--out", default=str(ROOT / "results" / "profiling"))
    args = parser.parse_args()

    mission = load_mission(args.mission)
    validate_mission(mission)

    means: dict[int, dict[str, float]] = {}
    for n in args.team_sizes:
        acc = {name: 0.0 for name in STAGES}
        for seed in args.seeds:
            timings = run_pipeline(mission, n_robots=n, seed=seed).timings
            for name, seconds in timings.rows():
                acc[name] += seconds
        means[n] = {name: total / len(args.seeds) for name, total in acc.items()}
        row = "  ".join(f"{name} {means[n][name]:.3f}s" for name in STAGES)
        print(f"n={n:>3}  {row}")

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "stage_timings.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n_robots", "stage", "mean_seconds"])
        for n in args.team_sizes:
            for name in STAGES:
                writer.writerow([n, name, f"{means[n][name]:.9g}"])

    fig, ax = plt.subplots(figsize=(6, 4))
    for name in STAGES[:-1]:
        ax.plot(args.team_sizes, [means[n][name] for n in args.team_sizes], marker="o", label=name)
    ax.set_xlabel("team size")
    ax.set_ylabel("mean seconds")
    ax.set_title("Stage computing time vs team size")
    ax.legend()
    fig.tight_layout()
    fig.savefig(out / "stage_timings.svg")
    plt.close(fig)
    print(f"wrote {out / 'stage_timings.csv'}")


if __name__ == "__main__":
    main()
