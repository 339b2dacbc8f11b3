# -*- coding: utf-8 -*-
import functools
import json
import math

import pytest

from main import EXIT_GENERATION, EXIT_INVARIANT, EXIT_OK, EXIT_SCHEMA, main
from achievable_region.commands import gen as gen_command
from achievable_region.commands.check import EXIT_DISAGREEMENT
from achievable_region.services.generator import generate_instance
from achievable_region.utils.region_json import dump_instance


@pytest.fixture
def instance_file(tmp_path, one_obstacle):
    path = tmp_path / "inst.json"
    path.write_text(dump_instance(one_obstacle), encoding="utf-8")
    return path


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


class TestGen:
    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["gen", "--n", "15", "--seed", "9", "--output", str(a)]) == EXIT_OK
        assert main(["gen", "--n", "15", "--seed", "9", "--output", str(b)]) == EXIT_OK
        assert a.read_bytes() == b.read_bytes()
        assert len(json.loads(a.read_text())["obstacles"]) == 15

    def test_generation_failure(self, tmp_path, monkeypatch):
        monkeypatch.setattr(gen_command, "generate_instance", functools.partial(generate_instance, max_retries=1))
        out = tmp_path / "x.json"
        code = main(["gen", "--n", "500", "--seed", "0", "--box", "0.05", "0.05", "--output", str(out)])
        assert code == EXIT_GENERATION
        assert not out.exists()

    def test_negative_n_is_usage_error(self, tmp_path):
        with pytest.raises(SystemExit):
            main(["gen", "--n", "-3", "--output", str(tmp_path / "x.json")])


class TestCompute:
    def test_empty_instance(self, tmp_path):
        inst = write(tmp_path, "inst.json", '{"s": [0, 0], "l": 1, "obstacles": []}')
        out = tmp_path / "region.json"
        assert main(["compute", "--input", str(inst), "--output", str(out)]) == EXIT_OK
        doc = json.loads(out.read_text())
        assert doc["area"] == pytest.approx(math.pi)
        assert len(doc["loops"]) == 1

    def test_budget_at_endpoint_distance(self, tmp_path):
        l = math.sqrt(2) + 3e-10
        inst = write(tmp_path, "inst.json", json.dumps({"s": [0, 0], "l": l, "obstacles": [[[1, -1], [1, 1]]]}))
        out = tmp_path / "region.json"
        assert main(["compute", "--input", str(inst), "--output", str(out)]) == EXIT_OK
        assert json.loads(out.read_text())["area"] == pytest.approx(1.5 * math.pi + 1)

    def test_with_svg_and_alg1(self, tmp_path, instance_file):
        out, svg = tmp_path / "region.json", tmp_path / "region.svg"
        code = main(["compute", "--input", str(instance_file), "--output", str(out),
                     "--svg", str(svg), "--algorithm", "alg1"])
        assert code == EXIT_OK
        assert svg.read_text().count("<path") == 2

    def test_malformed_json(self, tmp_path, capsys):
        inst = write(tmp_path, "bad.json", '{"s": [0, 0], "l": ')
        assert main(["compute", "--input", str(inst), "--output", str(tmp_path / "o.json")]) == EXIT_SCHEMA
        assert "$ (line 1" in capsys.readouterr().err

    def test_schema_path_reported(self, tmp_path, capsys):
        inst = write(tmp_path, "bad.json", '{"s": [0, 0], "l": "far", "obstacles": []}')
        assert main(["compute", "--input", str(inst), "--output", str(tmp_path / "o.json")]) == EXIT_SCHEMA
        assert any(line.startswith("l: ") for line in capsys.readouterr().err.splitlines())

    def test_crossing_obstacles(self, tmp_path, capsys):
        inst = write(tmp_path, "x.json",
                     '{"s": [5, 5], "l": 1, "obstacles": [[[0, 0], [2, 2]], [[0, 2], [2, 0]]]}')
        out = tmp_path / "o.json"
        assert main(["compute", "--input", str(inst), "--output", str(out)]) == EXIT_INVARIANT
        assert "not disjoint" in capsys.readouterr().err
        assert not out.exists()

    def test_source_on_obstacle(self, tmp_path):
        inst = write(tmp_path, "x.json", '{"s": [1, 0], "l": 1, "obstacles": [[[1, -1], [1, 1]]]}')
        assert main(["compute", "--input", str(inst), "--output", str(tmp_path / "o.json")]) == EXIT_INVARIANT


class TestCheck:
    def test_agreement(self, instance_file, capsys):
        assert main(["check", "--input", str(instance_file), "--samples", "200", "--seed", "3"]) == EXIT_OK
        first = capsys.readouterr().out.splitlines()[0]
        assert first.startswith("samples=200 ") and first.endswith("disagree=0")

    def test_corrupted_region_replay(self, tmp_path, instance_file, capsys):
        region = write(tmp_path, "region.json", json.dumps({
            "loops": [{"orientation": "ccw", "edges": [{
                "type": "arc", "center": [0, 0], "radius": 2.0,
                "start": [2, 0], "end": [2, 0], "appendix": [-2, 0],
            }]}],
            "area": 4 * math.pi,
        }))
        code = main(["check", "--input", str(instance_file), "--samples", "300", "--seed", "1",
                     "--region", str(region), "--concurrency", "2"])
        assert code == EXIT_DISAGREEMENT
        out = capsys.readouterr().out.splitlines()
        assert "disagree=0" not in out[0]
        assert out[1].startswith("#")

    def test_replay_of_computed_region(self, tmp_path, instance_file):
        out = tmp_path / "region.json"
        assert main(["compute", "--input", str(instance_file), "--output", str(out)]) == EXIT_OK
        assert main(["check", "--input", str(instance_file), "--samples", "150", "--region", str(out)]) == EXIT_OK


class TestQuery:
    def test_around_the_wall(self, instance_file, capsys):
        assert main(["query", "--input", str(instance_file), "--point", "1.2", "1.0"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        pi = float(lines[0].split("=", 1)[1])
        assert pi == pytest.approx(math.sqrt(2) + 0.2)
        assert lines[1].startswith("control_point=endpoint[1] (1.0, 1.0)")
        assert lines[2] == "path=(0.0, 0.0) -> (1.0, 1.0) -> (1.2, 1.0)"
        assert lines[3] == "achievable=yes"

    def test_unreachable_within_budget(self, instance_file, capsys):
        assert main(["query", "--input", str(instance_file), "--point", "2", "0"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "control_point=endpoint[0]" in out
        assert "achievable=no" in out

    def test_point_on_obstacle(self, instance_file):
        assert main(["query", "--input", str(instance_file), "--point", "1", "0.5"]) == EXIT_INVARIANT


def test_bench_prints_table(capsys):
    assert main(["bench", "--sizes", "3", "6", "--seed", "1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split() == ["n", "alg1", "(s)", "alg2", "(s)", "alg1/alg2"]
    assert [int(line.split()[0]) for line in lines[1:]] == [3, 6]
