# -*- coding: utf-8 -*-
import json
import math
from xml.etree import ElementTree

import pytest

from conftest import seg
from achievable_region.errors import InstanceValidationError, SchemaError
from achievable_region.geometry.core import Circle, Point
from achievable_region.geometry.region_ops import area
from achievable_region.schemas.instance import InstanceFile
from achievable_region.schemas.region import RegionFile
from achievable_region.services.cvr import construct_cvr
from achievable_region.services.pipeline import ProblemInstance, achievable_region
from achievable_region.utils.region_json import (
    dump_instance, dump_region, load_instance, load_region, parse_model, region_from_file,
)
from achievable_region.utils.svg_render import build_drawing, loop_path_data, render_svg

SVG_NS = "{http://www.w3.org/2000/svg}"


class TestInstanceFile:
    def test_load(self, tmp_path):
        path = tmp_path / "inst.json"
        path.write_text('{"s": [0, 0], "l": 2, "obstacles": [[[1, -1], [1, 1]]]}', encoding="utf-8")
        inst = load_instance(path)
        assert inst.s == Point(0, 0) and inst.l == 2.0
        assert inst.obstacles[0].a == Point(1, -1)
        assert inst.obstacles[0].id == 0

    def test_dump_is_stable(self, one_obstacle):
        text = dump_instance(one_obstacle)
        assert text.endswith("\n")
        doc = json.loads(text)
        assert list(doc) == ["s", "l", "obstacles"]
        assert doc["obstacles"] == [[[1.0, -1.0], [1.0, 1.0]]]
        assert dump_instance(one_obstacle) == text

    def test_malformed_json(self):
        with pytest.raises(SchemaError) as err:
            parse_model("{not json", InstanceFile, "x.json")
        assert err.value.errors[0][0].startswith("$")

    def test_missing_field_path(self):
        with pytest.raises(SchemaError) as err:
            parse_model('{"s": [0, 0], "obstacles": []}', InstanceFile)
        assert ("l", "Field required") in err.value.errors

    def test_extra_field_rejected(self):
        with pytest.raises(SchemaError):
            parse_model('{"s": [0, 0], "l": 1, "obstacles": [], "note": 1}', InstanceFile)

    def test_nested_path(self):
        with pytest.raises(SchemaError) as err:
            parse_model('{"s": [0, 0], "l": 1, "obstacles": [[[0, 0], [1]]]}', InstanceFile)
        assert any(path.startswith("obstacles.0.1") for path, _ in err.value.errors)

    def test_degenerate_segment(self, tmp_path):
        path = tmp_path / "inst.json"
        path.write_text('{"s": [0, 0], "l": 1, "obstacles": [[[1, 1], [1, 1]]]}', encoding="utf-8")
        with pytest.raises(InstanceValidationError) as err:
            load_instance(path)
        assert err.value.violations == ["obstacles[0]: degenerate segment"]

    def test_missing_file(self, tmp_path):
        with pytest.raises(SchemaError):
            load_instance(tmp_path / "nope.json")


class TestRegionFile:
    def test_dump_and_load(self, one_obstacle, tmp_path):
        region = achievable_region(one_obstacle)
        text = dump_region(region)
        doc = json.loads(text)
        assert doc["area"] == pytest.approx(area(region))
        assert {e["type"] for lp in doc["loops"] for e in lp["edges"]} == {"line", "arc"}
        assert doc["loops"][0]["orientation"] == "ccw"

        path = tmp_path / "region.json"
        path.write_text(text, encoding="utf-8")
        again = load_region(path)
        assert area(again) == pytest.approx(area(region), rel=1e-12)
        assert dump_region(again) == text

    def test_unknown_edge_type(self):
        bad = '{"loops": [{"orientation": "ccw", "edges": [{"type": "bezier", "start": [0, 0]}]}], "area": 0}'
        with pytest.raises(SchemaError) as err:
            parse_model(bad, RegionFile)
        assert err.value.errors[0][0].startswith("loops.0.edges.0")

    def test_open_loop_rejected(self):
        doc = RegionFile.model_validate({
            "loops": [{"orientation": "ccw", "edges": [
                {"type": "line", "start": [0, 0], "end": [1, 0]},
                {"type": "line", "start": [1, 0], "end": [1, 1]},
            ]}],
            "area": 0.5,
        })
        with pytest.raises(SchemaError) as err:
            region_from_file(doc)
        assert err.value.errors[0][0] == "loops.0"

    def test_arc_off_circle_rejected(self):
        doc = RegionFile.model_validate({
            "loops": [{"orientation": "ccw", "edges": [
                {"type": "arc", "center": [0, 0], "radius": 1, "start": [1, 0], "end": [1, 0], "appendix": [-2, 0]},
            ]}],
        })
        with pytest.raises(SchemaError) as err:
            region_from_file(doc)
        assert err.value.errors[0][0] == "loops.0.edges.0"


class TestSvg:
    def test_path_count(self, one_obstacle, tmp_path):
        region = achievable_region(one_obstacle)
        out = tmp_path / "region.svg"
        render_svg(one_obstacle, region, out)
        root = ElementTree.parse(out).getroot()
        paths = root.findall(f".//{SVG_NS}path")
        assert len(paths) == len(region.loops) + len(one_obstacle.obstacles)
        circles = root.findall(f".//{SVG_NS}circle")
        assert len(circles) == 2

    def test_full_circle_uses_two_arcs(self, open_plane):
        region = achievable_region(open_plane)
        d = loop_path_data(region.loops[0].edges)
        assert d.startswith("M ") and d.endswith(" Z")
        assert d.count(" A ") == 2

    def test_y_axis_flipped(self):
        inst = ProblemInstance([seg(0, 1, 1, 2)], Point(0, 0), 1.0)
        dwg = build_drawing(inst, achievable_region(inst))
        assert "M 0 -1 L 1 -2" in dwg.tostring()

    def test_large_arc_flag(self, one_obstacle):
        poly = construct_cvr(Circle(Point(0, 0), 2), list(one_obstacle.obstacles))
        d = loop_path_data(poly.edges)
        # 270° 圆弧：large-arc=1，sweep-flag=0
        assert f"A 2 2 0 1 0 {math.sqrt(2):.9g} {math.sqrt(2):.9g}" in d
