"""Shared test fixtures: a tiny square mission built around a fixed anchor."""

import json

import pytest

from scopp.discretize import UavParams, cell_width
from scopp.geo import CartPoint, GeoPoint, Projection, to_geographic
from scopp.mission import parse_mission

ANCHOR = GeoPoint(30.0, -92.0)
UAV = UavParams(height_m=100.0, fov_deg=14.0, velocity_mps=10.0)


def tiny_mission_doc(side_cells: int = 4, starts=((0.0, 0.0), None), seed=7) -> dict:
    """A square mission side_cells wide; plane starts are projected back to
    geographic. None as a start means the far corner."""
    proj = Projection(anchor=ANCHOR)
    w = cell_width(UAV)
    s = side_cells * w

    def geo(xy):
        g = to_geographic(proj, CartPoint(xy[0], xy[1]))
        return [g.lat, g.lon]

    resolved = [(s, s) if p is None else p for p in starts]
    doc = {
        "version": "1",
        "boundary": [geo(c) for c in [(0.0, 0.0), (s, 0.0), (s, s), (0.0, s)]],
        "robots": [geo(p) for p in resolved],
        "uav": {"height_m": UAV.height_m, "fov_deg": UAV.fov_deg, "velocity_mps": UAV.velocity_mps},
        "options": {"anchor": [ANCHOR.lat, ANCHOR.lon]},
    }
    if seed is not None:
        doc["options"]["seed"] = seed
    return doc


@pytest.fixture
def tiny_doc():
    return tiny_mission_doc()


@pytest.fixture
def tiny_mission():
    return parse_mission(tiny_mission_doc())


@pytest.fixture
def tiny_mission_file(tmp_path):
    path = tmp_path / "tiny.json"
    path.write_text(json.dumps(tiny_mission_doc()))
    return path
