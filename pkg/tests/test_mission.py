"""Mission file parsing, validation, and config-echo tests."""

import json

import pytest

from scopp.errors import MissionParseError, MissionValidationError
from scopp.geo import GeoPoint
from scopp.mission import (
    MissionOptions,
    MissionSpec,
    boundary_centroid,
    load_mission,
    mission_config_dict,
    parse_mission,
    validate_mission,
)
from tests.conftest import UAV, tiny_mission_doc


def mutated(doc: dict, **overrides) -> dict:
    out = json.loads(json.dumps(doc))
    out.update(overrides)
    return out


class TestParse:
    def test_happy_path(self, tiny_doc):
        m = parse_mission(tiny_doc)
        assert len(m.boundary) == 4
        assert m.no_fly == ()
        assert len(m.robots) == 2
        assert m.uav.height_m == 100.0
        assert m.options.seed == 7
        assert m.options.anchor == GeoPoint(30.0, -92.0)
        assert m.version == "1"

    def test_option_defaults(self, tiny_doc):
        doc = mutated(tiny_doc, options={})
        m = parse_mission(doc)
        assert m.options.bias_factor == 0.5
        assert m.options.points_per_edge == 3
        assert m.options.leaf_size == 10
        assert m.options.tol_factor == 0.125
        assert m.options.max_iter == 10
        assert m.options.seed is None
        assert m.options.strict_faa is False
        assert m.options.anchor is None

    def test_top_level_must_be_object(self):
        with pytest.raises(MissionParseError, match="top level"):
            parse_mission([1, 2, 3])

    @pytest.mark.parametrize("field", ["boundary", "robots", "uav"])
    def test_missing_required_field(self, tiny_doc, field):
        doc = mutated(tiny_doc)
        del doc[field]
        with pytest.raises(MissionParseError, match=field):
            parse_mission(doc)

    def test_two_vertex_boundary(self, tiny_doc):
        doc = mutated(tiny_doc, boundary=tiny_doc["boundary"][:2])
        with pytest.raises(MissionParseError, match="at least 3"):
            parse_mission(doc)

    def test_bad_coordinate_pair(self, tiny_doc):
        doc = mutated(tiny_doc, robots=[[30.0]])
        with pytest.raises(MissionParseError, match="lat, lon"):
            parse_mission(doc)

    def test_non_numeric_coordinate(self, tiny_doc):
        doc = mutated(tiny_doc, robots=[["x", -92.0]])
        with pytest.raises(MissionParseError, match="number"):
            parse_mission(doc)

    def test_boolean_is_not_a_number(self, tiny_doc):
        doc = mutated(tiny_doc, robots=[[True, -92.0]])
        with pytest.raises(MissionParseError, match="number"):
            parse_mission(doc)

    def test_latitude_out_of_range_is_parse_error(self, tiny_doc):
        doc = mutated(tiny_doc, robots=[[95.0, -92.0]])
        with pytest.raises(MissionParseError, match="lat"):
            parse_mission(doc)

    def test_unsupported_version(self, tiny_doc):
        with pytest.raises(MissionParseError, match="version"):
            parse_mission(mutated(tiny_doc, version="2"))

    def test_no_fly_must_be_ring_list(self, tiny_doc):
        with pytest.raises(MissionParseError, match="no_fly"):
            parse_mission(mutated(tiny_doc, no_fly="nope"))
        with pytest.raises(MissionParseError, match="no_fly"):
            parse_mission(mutated(tiny_doc, no_fly=[[[30.0, -92.0]]]))

    def test_bad_uav_params_are_parse_errors(self, tiny_doc):
        doc = mutated(tiny_doc, uav={"height_m": 100.0, "fov_deg": 200.0, "velocity_mps": 5.0})
        with pytest.raises(MissionParseError, match="fov"):
            parse_mission(doc)

    def test_seed_must_be_integer(self, tiny_doc):
        doc = mutated(tiny_doc, options={"seed": 1.5})
        with pytest.raises(MissionParseError, match="seed"):
            parse_mission(doc)

    def test_strict_faa_must_be_boolean(self, tiny_doc):
        doc = mutated(tiny_doc, options={"strict_faa": "yes"})
        with pytest.raises(MissionParseError, match="strict_faa"):
            parse_mission(doc)


class TestLoad:
    def test_round_trip(self, tiny_mission_file):
        m = load_mission(tiny_mission_file)
        assert len(m.boundary) == 4

    def test_missing_file(self, tmp_path):
        with pytest.raises(MissionParseError):
            load_mission(tmp_path / "nope.json")

    def test_invalid_json_reports_position(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{\n  \"boundary\": [,]\n}")
        with pytest.raises(MissionParseError, match=r"broken\.json:2:"):
            load_mission(path)


class TestValidate:
    def test_defaults_pass(self, tiny_mission):
        validate_mission(tiny_mission)

    @pytest.mark.parametrize(
        "options,needle",
        [
            ({"bias_factor": -1.0}, "bias_factor"),
            ({"points_per_edge": 1}, "points_per_edge"),
            ({"leaf_size": 0}, "leaf_size"),
            ({"tol_factor": 0.0}, "tol_factor"),
            ({"max_iter": 0}, "max_iter"),
        ],
    )
    def test_out_of_range_options(self, tiny_doc, options, needle):
        m = parse_mission(mutated(tiny_doc, options=options))
        with pytest.raises(MissionValidationError, match=needle):
            validate_mission(m)

    def test_envelope_violation_warns_by_default(self, tiny_doc):
        doc = mutated(tiny_doc, uav={"height_m": 150.0, "fov_deg": 14.0, "velocity_mps": 5.0})
        m = parse_mission(doc)
        with pytest.warns(UserWarning, match="height_m"):
            validate_mission(m)

    def test_envelope_violation_strict_override(self, tiny_doc):
        doc = mutated(tiny_doc, uav={"height_m": 150.0, "fov_deg": 14.0, "velocity_mps": 5.0})
        m = parse_mission(doc)
        with pytest.raises(MissionValidationError, match="height_m"):
            validate_mission(m, strict_faa=True)

    def test_mission_level_strict_flag(self, tiny_doc):
        doc = mutated(
            tiny_doc,
            uav={"height_m": 150.0, "fov_deg": 14.0, "velocity_mps": 5.0},
            options={"strict_faa": True},
        )
        m = parse_mission(doc)
        with pytest.raises(MissionValidationError):
            validate_mission(m)


class TestAnchor:
    def test_explicit_anchor_wins(self, tiny_mission):
        assert tiny_mission.anchor() == GeoPoint(30.0, -92.0)

    def test_default_anchor_is_centroid(self, tiny_doc):
        doc = mutated(tiny_doc, options={})
        m = parse_mission(doc)
        assert m.anchor() == boundary_centroid(m.boundary)

    def test_square_centroid(self):
        ring = (GeoPoint(0, 0), GeoPoint(0, 2), GeoPoint(2, 2), GeoPoint(2, 0))
        c = boundary_centroid(ring)
        assert c.lat == pytest.approx(1.0)
        assert c.lon == pytest.approx(1.0)

    def test_degenerate_ring_falls_back_to_vertex_mean(self):
        ring = (GeoPoint(1, 1), GeoPoint(2, 2), GeoPoint(3, 3))
        c = boundary_centroid(ring)
        assert c.lat == pytest.approx(2.0)
        assert c.lon == pytest.approx(2.0)


class TestConfigEcho:
    def test_repeatable_and_resolved(self, tiny_mission):
        a = mission_config_dict(tiny_mission, n_robots=3, seed=11)
        b = mission_config_dict(tiny_mission, n_robots=3, seed=11)
        assert a == b
        assert a["n_robots"] == 3
        assert a["options"]["seed"] == 11
        assert a["options"]["anchor"] == [30.0, -92.0]
        assert a["uav"]["velocity_mps"] == 10.0

    def test_construction_without_parse(self):
        m = MissionSpec(
            boundary=(GeoPoint(0, 0), GeoPoint(0, 0.01), GeoPoint(0.01, 0.01), GeoPoint(0.01, 0)),
            no_fly=(),
            robots=(GeoPoint(0, 0),),
            uav=UAV,
            options=MissionOptions(),
        )
        cfg = mission_config_dict(m, n_robots=1, seed=0)
        assert cfg["no_fly"] == []
