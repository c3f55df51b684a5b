import json
import re
from pathlib import Path

import pytest
from click.testing import CliRunner

from heartrules.cli import main


@pytest.fixture(scope="module")
def workspace(tmp_path_factory):
    root = tmp_path_factory.mktemp("cli")
    data = root / "t0.csv"
    data.write_text("0,0,0\n0,1,1\n1,0,1\n1,1,1\n")
    schema = root / "schema.json"
    schema.write_text(json.dumps([
        {"name": "a", "kind": "binary"},
        {"name": "b", "kind": "binary"},
        {"name": "d", "kind": "binary", "role": "decision"},
    ]))
    return root


def run_cli(*args):
    return CliRunner().invoke(main, list(args), catch_exceptions=False)


def train_t0(workspace, out_name="model.json", *extra):
    out = workspace / out_name
    result = run_cli("train", "--data", str(workspace / "t0.csv"),
                     "--schema", str(workspace / "schema.json"),
                     "--out", str(out), "--min-support", "1",
                     "--selection", "training", *extra)
    assert result.exit_code == 0, result.output
    return out, result


def test_train_prints_stage_counts(workspace):
    out, result = train_t0(workspace)
    assert out.exists()
    assert "objects loaded:" in result.output
    assert "rules generated:" in result.output
    assert "rules selected:" in result.output
    m = re.search(r"rules selected:\s+(\d+)", result.output)
    assert int(m.group(1)) <= 3


def test_train_deterministic_bytes(workspace):
    out1, _ = train_t0(workspace, "m1.json")
    out2, _ = train_t0(workspace, "m2.json")
    assert out1.read_bytes() == out2.read_bytes()


def test_train_rejects_bad_stage(workspace):
    result = CliRunner().invoke(main, [
        "train", "--data", str(workspace / "t0.csv"),
        "--schema", str(workspace / "schema.json"),
        "--out", str(workspace / "x.json"), "--min-support", "99"])
    assert result.exit_code != 0
    assert "min_support" in result.output


def test_eval_prints_both_policies_and_crisp(workspace):
    out, _ = train_t0(workspace)
    result = run_cli("eval", "--artifact", str(out),
                     "--data", str(workspace / "t0.csv"))
    assert result.exit_code == 0, result.output
    assert "passthrough" in result.output
    assert "majority" in result.output
    assert "crisp" in result.output


def test_eval_writes_report_files(workspace):
    out, _ = train_t0(workspace)
    report = workspace / "report"
    result = run_cli("eval", "--artifact", str(out),
                     "--data", str(workspace / "t0.csv"),
                     "--report-dir", str(report))
    assert result.exit_code == 0, result.output
    assert (report / "metrics.csv").exists()
    assert (report / "metrics.json").exists()
    assert (report / "metrics.png").exists()
    assert (report / "output_sets.png").exists()
    header = (report / "metrics.csv").read_text().splitlines()[0]
    assert header.startswith("dataset,mode,policy")


def test_eval_empty_file_rejected(workspace):
    out, _ = train_t0(workspace)
    empty = workspace / "empty.csv"
    empty.write_text("")
    result = CliRunner().invoke(main, [
        "eval", "--artifact", str(out), "--data", str(empty)])
    assert result.exit_code != 0


def test_eval_threshold_changes_confusion(workspace):
    out, _ = train_t0(workspace)
    base = run_cli("eval", "--artifact", str(out), "--data", str(workspace / "t0.csv"))
    moved = run_cli("eval", "--artifact", str(out), "--data", str(workspace / "t0.csv"),
                    "--threshold", "80")
    assert base.output != moved.output


def test_diagnose_prints_rules_sorted(workspace):
    out, _ = train_t0(workspace)
    result = run_cli("diagnose", "--artifact", str(out),
                     "--set", "a=1", "--set", "b=1")
    assert result.exit_code == 0, result.output
    assert "percentage:" in result.output
    assert "CAD-YES" in result.output
    activations = [float(x) for x in re.findall(r"activation=([0-9.]+)", result.output)]
    assert activations == sorted(activations, reverse=True)


def test_diagnose_missing_and_undetermined(workspace):
    out, _ = train_t0(workspace)
    result = run_cli("diagnose", "--artifact", str(out),
                     "--set", "a=?", "--set", "b=?")
    assert "undetermined" in result.output.lower()


def test_diagnose_unknown_attribute_lists_legal_names(workspace):
    out, _ = train_t0(workspace)
    result = CliRunner().invoke(main, [
        "diagnose", "--artifact", str(out), "--set", "zz=1"])
    assert result.exit_code != 0
    assert "a" in result.output and "b" in result.output


def test_diagnose_plot_written(workspace):
    out, _ = train_t0(workspace)
    png = workspace / "curve.png"
    result = run_cli("diagnose", "--artifact", str(out),
                     "--set", "a=1", "--set", "b=1", "--plot", str(png))
    assert result.exit_code == 0, result.output
    assert png.exists() and png.stat().st_size > 0


def test_train_plot_dir(workspace, tmp_path):
    figs = tmp_path / "figs"
    out, result = train_t0(workspace, "m3.json", "--plot-dir", str(figs))
    assert (figs / "output_sets.png").exists()
