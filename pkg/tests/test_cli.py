import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from kforcing import gadget_lq, is_k_power_dominating_set, read_graph, sierpinski, write_graph
from kforcing.cli import main

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def s33(tmp_path):
    path = tmp_path / "s33.graph"
    write_graph(sierpinski(3, 3), path)
    return path


@pytest.fixture
def l2(tmp_path):
    path = tmp_path / "l2.graph"
    write_graph(gadget_lq(2, 2)[0], path)
    return path


class TestSolve:
    def test_s33(self, capsys, s33):
        code, out, _ = run(capsys, "solve", "--param", "pdk", "-k", 1, s33)
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, schema("solve"))
        assert data["result"]["value"] == 3
        assert is_k_power_dominating_set(sierpinski(3, 3), 1, data["result"]["witness"])

    @pytest.mark.parametrize("param", ["zk", "gamma"])
    def test_other_params(self, capsys, s33, param):
        code, out, _ = run(capsys, "solve", "--param", param, "-k", 1, s33)
        assert code == 0
        jsonschema.validate(json.loads(out), schema("solve"))

    def test_text(self, capsys, s33):
        code, out, _ = run(capsys, "solve", "--param", "pdk", "-k", 1, "--format", "text", s33)
        assert code == 0 and out.startswith("gammaPk = 3\n")

    def test_budget_exit(self, capsys, s33):
        code, _, err = run(capsys, "solve", "--param", "zk", "-k", 1, "--budget", 10, s33)
        assert code == 3 and "budget" in err

    def test_output_file(self, capsys, s33, tmp_path):
        target = tmp_path / "out.json"
        code, out, _ = run(capsys, "solve", "--param", "pdk", "-k", 1, "--output", target, s33)
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["result"]["value"] == 3


class TestClosure:
    def test_l2_hub(self, capsys, l2):
        code, out, _ = run(capsys, "closure", "--mode", "power", "-k", 2, "--seed-set", "0", l2)
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, schema("closure"))
        assert data["result"]["success"]
        assert data["result"]["rounds"][-1] == list(range(11))

    def test_forcing(self, capsys, s33):
        code, out, _ = run(capsys, "closure", "--mode", "forcing", "-k", 1, "--seed-set", "0,1", s33)
        assert code == 0
        jsonschema.validate(json.loads(out), schema("closure"))

    def test_bad_vertex(self, capsys, s33):
        code, _, err = run(capsys, "closure", "--mode", "forcing", "-k", 1, "--seed-set", "99", s33)
        assert code == 2 and "out of range" in err

    def test_bad_id_list(self, capsys, s33):
        code, _, _ = run(capsys, "closure", "--mode", "forcing", "-k", 1, "--seed-set", "a,b", s33)
        assert code == 2


class TestGraphOps:
    def test_contract(self, capsys, s33, tmp_path):
        target = tmp_path / "c.graph"
        code, out, _ = run(capsys, "contract", "--set", "0,1,2", s33, "-o", target)
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, schema("contract"))
        assert read_graph(target).order == 25
        assert data["result"]["contracted_vertex"] == 24

    def test_xhat(self, capsys, s33, tmp_path):
        target = tmp_path / "x.graph"
        code, out, _ = run(capsys, "xhat", "--set", "0,1,2", s33, "-o", target)
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, schema("xhat"))
        assert read_graph(target).order == 5

    def test_gen(self, capsys, tmp_path):
        target = tmp_path / "u.graph"
        code, _, _ = run(capsys, "gen", "uq", "-k", 2, "--q", 2, "-o", target)
        assert code == 0
        meta = json.loads(Path(str(target) + ".meta.json").read_text())
        jsonschema.validate(meta, schema("gen-meta"))
        assert meta["x"] == [5, 6, 7] and read_graph(target).order == 8

    def test_gen_stdout(self, capsys):
        code, out, _ = run(capsys, "gen", "random", "--n", 8, "--prob", 0.3, "--seed", 42)
        assert code == 0 and out.startswith("8 13\n0 2\n")

    def test_gen_invalid_params(self, capsys):
        code, _, _ = run(capsys, "gen", "gpr", "-k", 1, "--p", 6, "--r", 3)
        assert code == 2


class TestBound:
    def test_partition(self, capsys, tmp_path):
        g = tmp_path / "s34.graph"
        write_graph(sierpinski(3, 4), g)
        parts = tmp_path / "parts.json"
        parts.write_text(json.dumps([list(range(i * 27, (i + 1) * 27)) for i in range(3)]))
        code, out, _ = run(capsys, "bound", "partition", "--param", "pdk", "-k", 1, "--parts", parts, g)
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, schema("bound-partition"))
        assert data["result"]["bound"] == 9

    def test_partition_timings(self, capsys, s33, tmp_path):
        parts = tmp_path / "parts.json"
        parts.write_text(json.dumps([list(range(i * 9, (i + 1) * 9)) for i in range(3)]))
        code, out, _ = run(capsys, "bound", "partition", "--param", "pdk", "-k", 1, "--parts", parts, "--timings", s33)
        data = json.loads(out)
        jsonschema.validate(data, schema("bound-partition"))
        assert "seconds" in data["result"]["parts"][0]

    def test_partition_hypothesis_exit(self, capsys, s33, tmp_path):
        parts = tmp_path / "parts.json"
        parts.write_text(json.dumps([[4], [v for v in range(27) if v != 4]]))
        code, out, _ = run(capsys, "bound", "partition", "--param", "zk", "-k", 1, "--parts", parts, s33)
        assert code == 4
        data = json.loads(out)
        jsonschema.validate(data, schema("bound-partition"))
        assert data["result"]["hypothesis"]["failing_parts"] == [0]

    def test_bad_parts_file(self, capsys, s33, tmp_path):
        parts = tmp_path / "parts.json"
        parts.write_text("{}")
        code, _, _ = run(capsys, "bound", "partition", "--param", "pdk", "-k", 1, "--parts", parts, s33)
        assert code == 2

    @pytest.mark.parametrize("param", ["pdk", "zk"])
    def test_contraction(self, capsys, s33, param):
        code, out, _ = run(capsys, "bound", "contraction", "--param", param, "-k", 1, "--set", "0,1,2", s33)
        assert code == 0
        jsonschema.validate(json.loads(out), schema("bound-contraction"))

    def test_contraction_hypothesis_exit(self, capsys, s33):
        code, out, _ = run(capsys, "bound", "contraction", "--param", "zk", "-k", 1, "--set", "4", s33)
        assert code == 4
        jsonschema.validate(json.loads(out), schema("bound-contraction"))

    def test_low_degree_precondition(self, capsys, s33):
        code, _, err = run(capsys, "bound", "contraction", "--param", "pdk", "--low-degree", "-k", 1, "--set", "1,2", s33)
        assert code == 4 and "degree" in err


class TestVerify:
    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "verify", "-k", 1, "nonexistent.file")
        assert code == 2 and "nonexistent.file" in err

    def test_graph(self, capsys, s33):
        code, out, _ = run(capsys, "verify", "-k", 1, "--trials", 5, s33)
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, schema("verify"))
        assert data["result"]["ok"] and data["result"]["failed"] == 0

    def test_sierpinski(self, capsys):
        code, out, _ = run(capsys, "verify", "sierpinski", "--p", 3, "--n", 3, "-k", 1)
        assert code == 0
        jsonschema.validate(json.loads(out), schema("verify"))

    def test_sierpinski_needs_params(self, capsys):
        code, _, _ = run(capsys, "verify", "sierpinski", "-k", 1)
        assert code == 2

    def test_families_text(self, capsys):
        code, out, _ = run(capsys, "verify", "families", "--format", "text")
        assert code == 0 and "PASS" in out and "FAIL" not in out


class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [[], ["bogus"], ["solve", "--param", "xx", "f"], ["solve", "--param", "pdk", "-k", "-1", "f"],
         ["solve", "--param", "pdk", "--workers", "0", "f"]],
    )
    def test_usage_errors(self, capsys, argv):
        code, _, _ = run(capsys, *argv)
        assert code == 2

    def test_malformed_graph(self, capsys, tmp_path):
        bad = tmp_path / "bad.graph"
        bad.write_text("3 1\n0 5\n")
        code, _, err = run(capsys, "solve", "--param", "pdk", bad)
        assert code == 2 and "bad.graph" in err


class TestDeterminism:
    def test_byte_identical_subprocess(self, tmp_path):
        g = tmp_path / "r.graph"
        cmd = [sys.executable, "-m", "kforcing", "gen", "random", "--n", "9", "--prob", "0.35", "--seed", "7", "-o", str(g)]
        subprocess.run(cmd, check=True)
        outs = []
        for _ in range(2):
            proc = subprocess.run(
                [sys.executable, "-m", "kforcing", "verify", "-k", "1", "--seed", "3", "--trials", "5", str(g)],
                capture_output=True, check=False,
            )
            assert proc.returncode == 0
            outs.append(proc.stdout)
        assert outs[0] == outs[1] and outs[0]

    def test_partition_workers_identical(self, capsys, tmp_path):
        g = tmp_path / "s34.graph"
        write_graph(sierpinski(3, 4), g)
        parts = tmp_path / "parts.json"
        parts.write_text(json.dumps([list(range(i * 27, (i + 1) * 27)) for i in range(3)]))
        base = ["bound", "partition", "--param", "pdk", "-k", 1, "--parts", parts]
        _, one, _ = run(capsys, *base, "--workers", 1, g)
        _, three, _ = run(capsys, *base, "--workers", 3, g)
        assert one == three
