from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from microresil.cli import main
from microresil.interventions import builtin_underground_distribution
from microresil.scenario_io import serialize_patch, serialize_scenario


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def scenario_file(tmp_path, builtin):
    path = tmp_path / "scenario.json"
    path.write_bytes(serialize_scenario(builtin))
    return str(path)


@pytest.fixture()
def patch_file(tmp_path):
    path = tmp_path / "underground.json"
    path.write_bytes(serialize_patch(builtin_underground_distribution()))
    return str(path)


FAST = ["--iterations", "3000", "--seed", "5"]


class TestValidate:
    def test_builtin_reference_ok(self, runner):
        result = runner.invoke(main, ["validate", "builtin:new-england"])
        assert result.exit_code == 0
        assert "15 threats" in result.output
        assert "51 vulnerability rows" in result.output

    def test_file_ok(self, runner, scenario_file):
        result = runner.invoke(main, ["validate", scenario_file])
        assert result.exit_code == 0

    def test_validation_failure_exit_1(self, runner, tmp_path, builtin):
        doc = json.loads(serialize_scenario(builtin))
        doc["threats"][0]["importance"] = 2
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        result = runner.invoke(main, ["validate", str(bad)])
        assert result.exit_code == 1
        assert "importance" in result.output

    def test_missing_file_exit_2(self, runner, tmp_path):
        result = runner.invoke(main, ["validate", str(tmp_path / "nope.json")])
        assert result.exit_code == 2

    def test_malformed_json_exit_1(self, runner, tmp_path):
        bad = tmp_path / "broken.json"
        bad.write_text("{not json")
        result = runner.invoke(main, ["validate", str(bad)])
        assert result.exit_code == 1


class TestRun:
    def test_text_output(self, runner):
        result = runner.invoke(main, ["run", "builtin:new-england", *FAST])
        assert result.exit_code == 0
        assert "Operational risk" in result.output
        assert "Total resilience" in result.output

    def test_cube_root_classes_low_or_moderate(self, runner):
        for agg in ("threat_mean_of_means", "pair_mean"):
            result = runner.invoke(
                main, ["run", "builtin:new-england", *FAST, "--aggregation", agg]
            )
            assert result.exit_code == 0
            classes = [
                line.split("cube-root class: ")[1]
                for line in result.output.splitlines()
                if "cube-root class" in line
            ]
            assert len(classes) == 2
            assert set(classes) <= {"Low", "Moderate"}

    def test_json_output_reparses(self, runner, scenario_file):
        result = runner.invoke(main, ["run", scenario_file, *FAST, "--format", "json"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        op = doc["operational"]["mean"]
        infra = doc["infrastructural"]["mean"]
        assert doc["resilience"]["mean"] == pytest.approx(1 - (op + infra) / 2, rel=1e-12)

    def test_rerun_byte_identical(self, runner, scenario_file):
        args = ["run", scenario_file, "--iterations", "2000", "--seed", "42", "--format", "json"]
        a = runner.invoke(main, args)
        b = runner.invoke(main, args)
        assert a.exit_code == b.exit_code == 0
        assert a.output == b.output

    def test_worker_flag_does_not_change_output(self, runner, scenario_file):
        base = ["run", scenario_file, *FAST, "--format", "json"]
        a = runner.invoke(main, base)
        b = runner.invoke(main, [*base, "--workers", "4"])
        assert a.output == b.output

    def test_histogram_csv_export(self, runner, tmp_path, scenario_file):
        out = tmp_path / "hist.csv"
        result = runner.invoke(
            main, ["run", scenario_file, *FAST, "--hist-csv", str(out)]
        )
        assert result.exit_code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "bin_lo,bin_hi,count"
        assert sum(int(l.split(",")[2]) for l in lines[1:]) == 3000

    def test_histogram_source_selection(self, runner, tmp_path, scenario_file):
        out_res = tmp_path / "res.csv"
        out_op = tmp_path / "op.csv"
        runner.invoke(main, ["run", scenario_file, *FAST, "--hist-csv", str(out_res)])
        runner.invoke(
            main,
            ["run", scenario_file, *FAST, "--hist-csv", str(out_op), "--hist-source", "operational"],
        )
        assert out_res.read_text() != out_op.read_text()

    def test_unwritable_csv_exit_2(self, runner, tmp_path, scenario_file):
        result = runner.invoke(
            main,
            ["run", scenario_file, *FAST, "--hist-csv", str(tmp_path / "no" / "dir" / "x.csv")],
        )
        assert result.exit_code == 2

    def test_bad_flag_value_rejected(self, runner, scenario_file):
        result = runner.invoke(main, ["run", scenario_file, "--distribution", "exotic"])
        assert result.exit_code != 0

    def test_engine_error_exit_3(self, runner, scenario_file):
        result = runner.invoke(main, ["run", scenario_file, "--iterations", "0"])
        assert result.exit_code == 3


class TestCompare:
    def test_builtin_patch_references(self, runner):
        result = runner.invoke(
            main,
            [
                "compare",
                "builtin:new-england",
                "builtin:underground-distribution",
                "builtin:harden-generation",
                *FAST,
            ],
        )
        assert result.exit_code == 0
        assert "Ranking: 1." in result.output
        assert "underground-distribution" in result.output

    def test_patch_files(self, runner, scenario_file, patch_file):
        result = runner.invoke(main, ["compare", scenario_file, patch_file, *FAST])
        assert result.exit_code == 0
        assert "underground-distribution" in result.output

    def test_no_patches_baseline_only(self, runner, scenario_file):
        result = runner.invoke(main, ["compare", scenario_file, *FAST])
        assert result.exit_code == 0
        assert "Baseline:" in result.output
        assert "Ranking:" in result.output

    def test_json_format(self, runner, scenario_file, patch_file):
        result = runner.invoke(
            main, ["compare", scenario_file, patch_file, *FAST, "--format", "json"]
        )
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["ranking"] == ["underground-distribution"]

    def test_patch_referencing_missing_threat_exit_1(self, runner, scenario_file, tmp_path):
        bad = tmp_path / "bad_patch.json"
        bad.write_text(
            json.dumps(
                {
                    "name": "bad",
                    "description": "",
                    "ops": [{"kind": "set_importance", "threat": "Ghost", "importance": 0.1}],
                }
            )
        )
        result = runner.invoke(main, ["compare", scenario_file, str(bad), *FAST])
        assert result.exit_code == 1
        assert "Ghost" in result.output

    def test_missing_patch_file_exit_2(self, runner, scenario_file, tmp_path):
        result = runner.invoke(
            main, ["compare", scenario_file, str(tmp_path / "nope.json"), *FAST]
        )
        assert result.exit_code == 2


class TestUnknownBuiltin:
    def test_unknown_builtin_scenario(self, runner):
        result = runner.invoke(main, ["validate", "builtin:atlantis"])
        assert result.exit_code == 2

    def test_unknown_builtin_patch(self, runner):
        result = runner.invoke(
            main, ["compare", "builtin:new-england", "builtin:teleport", *FAST]
        )
        assert result.exit_code == 2
