"""Mission-time and computing-time scaling versus team size.

Repeats the planning pipeline for each (team size, seed) pair on one mission
and writes the per-run table plus mean/std plots. Defaults reproduce the
medium-map sweep used in the acceptance checks.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from scopp.cli import _int_list
from scopp.mission import load_mission, validate_mission
from scopp.output import write_bench_csv
from scopp.plotting import save_computing_time_plot, save_mission_time_plot
from scopp.sim import scalability_sweep

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--mission", default=str(ROOT / "missions" / "medium.json"))
    parser.add_argument("--team-sizes", type=_int_list, default=[5, 10, 20, 30, 60, 100, 150])
    parser.add_argument("--seeds", type=_int_list, default=list(range(5)))
    parser.add_argument("--out", default=str(ROOT / "results" / "scalability"))
    args = parser.parse_args()

    mission = load_mission(args.mission)
    validate_mission(mission)
    result = scalability_sweep(mission, args.team_sizes, args.seeds)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_bench_csv(result, out / "bench.csv")
    save_mission_time_plot(result, out / "mission_time.svg")
    save_computing_time_plot(result, out / "computing_time.svg")

    for s in result.summary:
        print(
            f"n={s.n_robots:>4}  mission {s.mean_mission_time_s:9.1f} "
            f"± {s.std_mission_time_s:7.1f} s   computing {s.mean_computing_time_s:7.3f} s"
        )
    print(f"wrote {out / 'bench.csv'}")


if __name__ == "__main__":
    main()
