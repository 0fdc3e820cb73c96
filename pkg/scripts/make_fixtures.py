"""Regenerates the mission fixtures in missions/.

Each fixture is designed in local meters and converted to geographic
coordinates around a fixed anchor. Areas match the three survey sizes used
in the benchmark study: 0.332, 1.012 (after the no-fly cutout), and
3.436 km^2.
"""

from __future__ import annotations

import json
from pathlib import Path

from scopp.geo import CartPoint, GeoPoint, Projection, to_geographic

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "missions"

# Dendritic "bayou" shape: a vertical trunk with four horizontal fingers.
# Trunk 120 x 740, fingers 760 x 80 each: 88,800 + 4*60,800 = 332,000 m^2.
SMALL_BOUNDARY = [
    (0, 0), (120, 0), (120, 70), (880, 70), (880, 150), (120, 150),
    (120, 240), (880, 240), (880, 320), (120, 320),
    (120, 410), (880, 410), (880, 490), (120, 490),
    (120, 580), (880, 580), (880, 660), (120, 660),
    (120, 740), (0, 740),
]

# L-shape 1200x600 plus 500x600 arm minus a 100x80 no-fly block:
# 720,000 + 300,000 - 8,000 = 1,012,000 m^2.
MEDIUM_BOUNDARY = [(0, 0), (1200, 0), (1200, 600), (500, 600), (500, 1200), (0, 1200)]
MEDIUM_HOLE = [(200, 200), (300, 200), (300, 280), (200, 280)]

# Convex: 2148x1600 rectangle with one 40 m corner chamfer:
# 3,436,800 - 800 = 3,436,000 m^2.
LARGE_BOUNDARY = [(0, 0), (2148, 0), (2148, 1560), (2108, 1600), (0, 1600)]


def _geo(projection: Projection, points) -> list[list[float]]:
    out = []
    for x, y in points:
        g = to_geographic(projection, CartPoint(float(x), float(y)))
        out.append([g.lat, g.lon])
    return out


def make(name: str, anchor: GeoPoint, boundary, holes, dispatchers, velocity: float) -> None:
    projection = Projection(anchor=anchor)
    doc = {
        "version": "1",
        "boundary": _geo(projection, boundary),
        "no_fly": [_geo(projection, h) for h in holes],
        "robots": _geo(projection, dispatchers),
        "uav": {"height_m": 100.0, "fov_deg": 14.0, "velocity_mps": velocity},
        "options": {},
    }
    path = OUT / f"{name}.json"
    path.write_text(json.dumps(doc, indent=2) + "\n")
    print(f"wrote {path}")


def main() -> None:
    OUT.mkdir(exist_ok=True)
    make(
        "small",
        GeoPoint(30.21, -92.03),
        SMALL_BOUNDARY,
        [],
        [(0, 0)],
        velocity=4.0,
    )
    make(
        "medium",
        GeoPoint(30.25, -92.01),
        MEDIUM_BOUNDARY,
        [MEDIUM_HOLE],
        [(0, 0), (0, 1200)],
        velocity=8.0,
    )
    make(
        "large",
        GeoPoint(30.18, -91.95),
        LARGE_BOUNDARY,
        [],
        [(0, 0), (2148, 0), (0, 1600)],
        velocity=10.0,
    )


if __name__ == "__main__":
    main()
