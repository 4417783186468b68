import json
import math

import pytest

from numrange.cli import main
from numrange.report import RunReport, boundary_csv, boundary_svg
from numrange.numerical_range import boundary
from numrange.model_operator import shift_matrix


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_radius_monomial_degree_three(capsys):
    code, out, _ = run_cli(capsys, "radius", "--alpha", "0,0", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["results"]["formula_radius"] == 0.7071067811865476
    assert data["version"] == "0.1.0"


def test_radius_single_zero_agreement(capsys):
    code, out, _ = run_cli(capsys, "radius", "--alpha", "0.5,0", "--n", "2")
    assert code == 0
    data = json.loads(out)
    assert abs(data["results"]["closed_form_radius"] - 0.875) < 1e-12
    assert data["results"]["agreement"]["formula_vs_eigen"] < 1e-9


def test_radius_two_zero_product_has_estimate_block(capsys):
    code, out, _ = run_cli(
        capsys, "radius", "--zero", "0.3,0", "--zero", "-0.4,0.1"
    )
    assert code == 0
    data = json.loads(out)
    assert "eigen_radius" in data["results"]
    est = data["results"]["estimate"]
    assert set(est) == {"rho", "delta", "applicable", "bound"}


def test_radius_rejects_zero_on_boundary(capsys):
    code, _, err = run_cli(capsys, "radius", "--alpha", "1,0", "--n", "2")
    assert code == 3
    assert "disc" in err


def test_malformed_zero_exits_with_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["radius", "--zero", "nonsense"])
    assert exc.value.code == 2


def test_missing_operator_spec_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "radius")
    assert code == 2
    assert "--alpha" in err or "--zero" in err


def test_boundary_csv_of_jordan_block(tmp_path, capsys):
    csv_path = tmp_path / "boundary.csv"
    code, out, _ = run_cli(
        capsys,
        "boundary", "--zero", "0,0:2", "--grid", "256", "--csv", str(csv_path),
    )
    assert code == 0
    rows = csv_path.read_text().strip().splitlines()
    assert rows[0] == "theta,lambda,x,y"
    assert len(rows) == 257
    for row in rows[1:]:
        _, _, x, y = map(float, row.split(","))
        assert abs(math.hypot(x, y) - 0.5) < 1e-6


def test_boundary_grid_consistency(capsys):
    outs = []
    for grid in ("64", "128"):
        code, out, _ = run_cli(
            capsys, "boundary", "--alpha", "0.4,0", "--n", "3", "--grid", grid
        )
        assert code == 0
        outs.append(json.loads(out)["results"]["radius_max"])
    assert abs(outs[0] - outs[1]) < 1e-3


def test_boundary_grid_too_small(capsys):
    code, _, err = run_cli(capsys, "boundary", "--alpha", "0.4,0", "--n", "3", "--grid", "32")
    assert code == 2


def test_boundary_svg_written(tmp_path, capsys):
    svg_path = tmp_path / "plot.svg"
    code, _, _ = run_cli(
        capsys,
        "boundary", "--alpha", "0.5,0", "--n", "2", "--grid", "128",
        "--svg", str(svg_path), "--vertex", "1,0",
    )
    assert code == 0
    text = svg_path.read_text()
    assert text.startswith("<svg")
    assert "<polyline" in text and "<polygon" in text


def test_boundary_unwritable_path_is_io_error(capsys):
    code, _, err = run_cli(
        capsys,
        "boundary", "--alpha", "0.5,0", "--n", "2", "--grid", "128",
        "--csv", "/nonexistent-dir/x.csv",
    )
    assert code == 4


def test_poncelet_subcommand(capsys):
    code, out, _ = run_cli(
        capsys, "poncelet", "--zero", "0,0:2", "--vertex", "1,0"
    )
    assert code == 0
    data = json.loads(out)
    verts = [complex(re, im) for re, im in data["results"]["vertices"]]
    assert len(verts) == 3
    assert abs(data["results"]["max_violation"]) < 1e-6


def test_kms_subcommand(capsys):
    code, out, _ = run_cli(capsys, "kms", "--alpha", "0.5", "--n", "6")
    assert code == 0
    data = json.loads(out)
    assert len(data["results"]["roots"]) == 6
    assert data["results"]["dense_delta_max"] < 1e-9


def test_angles_subcommand(capsys):
    code, out, _ = run_cli(
        capsys, "angles", "--zero", "0.1,0", "--zero", "-0.1,0"
    )
    assert code == 0
    data = json.loads(out)
    pair = data["results"]["pairs"][0]
    assert pair["sin_angle"] >= pair["sin_lower_bound"] - 1e-6


def test_verify_smoke_all_suites(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "all", "--trials", "1", "--seed", "0")
    assert code == 0
    data = json.loads(out)
    assert set(data["results"]) == {"radius", "poncelet", "schwarz-pick", "angles"}
    assert all(block["passed"] for block in data["results"].values())


def test_verify_radius_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "radius", "--trials", "10", "--seed", "7")
    assert code == 0
    data = json.loads(out)
    for rec in data["results"]["radius"]["records"]:
        assert rec["formula_vs_eigen"] < 1e-9


def test_byte_identical_reports(capsys):
    argv = ["radius", "--alpha", "0.3,0.2", "--n", "4"]
    _, out1, _ = run_cli(capsys, *argv)
    _, out2, _ = run_cli(capsys, *argv)
    assert out1 == out2


def test_report_roundtrip_is_byte_identical():
    report = RunReport(
        command="radius",
        inputs={"zeros": [[0.5, 0.0, 2]], "grid": 256},
        results={"eigen_radius": 0.875, "vertex": [0.0, 1.0]},
        tolerances={"radius_agreement": 1e-9},
    )
    text = report.to_json()
    assert RunReport.from_json(text).to_json() == text
    assert json.loads(text) == json.loads(RunReport.from_json(text).to_json())


def test_out_flag_writes_report(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "--out", str(path), "radius", "--alpha", "0,0", "--n", "2"
    )
    assert code == 0
    assert path.read_text() == out


def test_thread_cap_env_is_echoed(capsys, monkeypatch):
    monkeypatch.setenv("NUMRANGE_THREADS", "4")
    code, out, _ = run_cli(capsys, "radius", "--alpha", "0,0", "--n", "2")
    assert code == 0
    assert json.loads(out)["inputs"]["threads"] == 4


def test_thread_cap_env_invalid(capsys, monkeypatch):
    monkeypatch.setenv("NUMRANGE_THREADS", "many")
    code, _, err = run_cli(capsys, "radius", "--alpha", "0,0", "--n", "2")
    assert code == 2
    assert "NUMRANGE_THREADS" in err


def test_csv_serializer_digits():
    sample = boundary(shift_matrix(2), 64)
    text = boundary_csv(sample)
    first = text.splitlines()[1].split(",")
    assert len(first) == 4
    # 17 significant digits survive a float round-trip
    assert float(first[1]) == sample.support[0]


def test_svg_serializer_is_pure():
    sample = boundary(shift_matrix(2), 64)
    assert boundary_svg(sample) == boundary_svg(sample)
