import csv
import json
import math

import pytest
from click.testing import CliRunner

from cli import RunConfig, cli

HERMITIAN = ["--eta1", "1", "--phi1", "0", "--eta2", "2"]
HALF_SIN_ALPHA = ["--eta1", "0.5", "--phi1", repr(math.pi / 2), "--eta2", "1"]


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def quantities(output: str) -> dict:
    rows = list(csv.reader(output.splitlines()))
    assert rows[0] == ["quantity", "value"]
    return {name: value for name, value in rows[1:]}


def table(output: str) -> list:
    return list(csv.reader(output.splitlines()))


def test_bench_hermitian_does_not_signal(runner):
    result = runner.invoke(cli, ["bench", *HERMITIAN, "--r", "0.7", "--beta", "0.3"])
    assert result.exit_code == 0, result.stderr
    values = quantities(result.stdout)
    assert float(values["pa_h"]) == pytest.approx(0.5, abs=1e-11)
    assert float(values["pb_u"]) == pytest.approx(0.5, abs=1e-11)
    assert float(values["closed_form_residual"]) <= 1e-10


def test_bench_fig2(runner):
    result = runner.invoke(cli, ["bench", "--preset", "fig2", "--r", "1", "--beta", "0.7853981634"])
    assert result.exit_code == 0, result.stderr
    assert float(quantities(result.stdout)["pa_h"]) == pytest.approx(0.47481, abs=1e-5)


def test_bench_output_format(runner):
    result = runner.invoke(cli, ["bench", "--preset", "fig2"])
    values = quantities(result.stdout)
    assert list(values) == [
        "w_uh",
        "w_uv",
        "w_lh",
        "w_lv",
        "p_uh",
        "p_uv",
        "p_lh",
        "p_lv",
        "pa_h",
        "pa_v",
        "pb_u",
        "pb_l",
        "closed_form_residual",
    ]
    assert "\r" not in result.stdout
    assert all(len(value.replace("-", "").replace(".", "").split("e")[0]) <= 12 for value in values.values())


def test_bench_without_closed_form(runner):
    result = runner.invoke(cli, ["bench", "--preset", "fig2", "--medium-position", "before_bs"])
    assert result.exit_code == 0, result.stderr
    assert quantities(result.stdout)["closed_form_residual"] == "n/a"


def test_bench_broken_phase_exit_code(runner):
    result = runner.invoke(cli, ["bench", "--eta1", "1", "--phi1", "1.5707963", "--eta2", "0.5"])
    assert result.exit_code == 2
    assert "broken PT phase: eta2 <= eta1*|sin(phi1)|" in result.stderr


@pytest.mark.parametrize(
    "args",
    [
        ["bench", "--unknown-flag", "1"],
        ["bench", "--eta1", "abc"],
        ["bench", "--r", "1.5"],
        ["bench", "--eta1", "-1"],
        ["bench", "--preset", "nonexistent"],
        ["bench", "--bench-model", "nonexistent"],
        ["scan", "--sin-alpha", "0", "1", "0"],
        ["scan", "--sin-alpha", "0.5", "1.0", "3"],
        ["paraxial", "--rayleigh-ratio", "-1"],
        ["unknown-command"],
    ],
)
def test_config_errors_exit_with_one(runner, args):
    assert runner.invoke(cli, args).exit_code == 1


def test_invalid_config_file(runner, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    assert runner.invoke(cli, ["bench", "--config", str(path)]).exit_code == 1
    path.write_text(json.dumps({"eta1": "x"}), encoding="utf-8")
    assert runner.invoke(cli, ["bench", "--config", str(path)]).exit_code == 1
    path.write_text(json.dumps([1, 2]), encoding="utf-8")
    assert runner.invoke(cli, ["bench", "--config", str(path)]).exit_code == 1


def test_dump_config_round_trip(runner, tmp_path):
    dumped = runner.invoke(cli, ["bench", "--preset", "fig2", "--r", "0.3", "--beta", "1.1", "--dump-config"])
    assert dumped.exit_code == 0, dumped.stderr
    assert RunConfig.model_validate_json(dumped.stdout).r == 0.3

    path = tmp_path / "run.json"
    path.write_text(dumped.stdout, encoding="utf-8")
    again = runner.invoke(cli, ["bench", "--config", str(path), "--dump-config"])
    assert again.stdout == dumped.stdout

    from_flags = runner.invoke(cli, ["bench", "--preset", "fig2", "--r", "0.3", "--beta", "1.1"])
    from_file = runner.invoke(cli, ["bench", "--config", str(path)])
    assert from_file.stdout == from_flags.stdout


def test_flags_override_config_file(runner, tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"eta1": 1.0, "phi1": 0.0, "eta2": 2.0, "hwp_angle": 0.1}), encoding="utf-8")
    dumped = runner.invoke(cli, ["bench", "--config", str(path), "--beta", "0.9", "--dump-config"])
    config = RunConfig.model_validate_json(dumped.stdout)
    assert config.hwp_angle == 0.9
    assert config.eta2 == 2.0


def test_degrees_switch(runner):
    in_degrees = runner.invoke(cli, ["bench", "--preset", "fig2", "--bs-angle", "60", "--beta", "45", "--deg"])
    in_radians = runner.invoke(
        cli, ["bench", "--preset", "fig2", "--bs-angle", repr(math.pi / 3), "--beta", repr(math.pi / 4)]
    )
    assert in_degrees.exit_code == 0, in_degrees.stderr
    degrees, radians = quantities(in_degrees.stdout), quantities(in_radians.stdout)
    for name in ("w_uh", "w_lv", "pa_h", "pb_u"):
        assert float(degrees[name]) == pytest.approx(float(radians[name]), abs=1e-10)


def test_output_file_matches_stdout(runner, tmp_path):
    path = tmp_path / "bench.csv"
    to_file = runner.invoke(cli, ["bench", "--preset", "fig2", "--output", str(path)])
    to_stdout = runner.invoke(cli, ["bench", "--preset", "fig2"])
    assert to_file.stdout == ""
    assert path.read_bytes() == to_stdout.stdout.encode("utf-8")


def test_scan_without_gain_and_loss(runner):
    result = runner.invoke(cli, ["scan", "--sin-alpha", "0", "0", "1", "--beta-range", "0", "1.5", "4"])
    assert result.exit_code == 0, result.stderr
    rows = table(result.stdout)
    assert rows[0] == ["sin_alpha", "beta", "phi2", "delta"]
    assert len(rows) == 5
    assert all(abs(float(row[3])) <= 1e-12 for row in rows[1:])


def test_scan_single_point(runner):
    args = ["scan", "--sin-alpha", "0.5", "0.5", "1", "--beta-range", repr(math.pi / 4), "0", "1"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.stderr
    (row,) = table(result.stdout)[1:]
    assert float(row[3]) == pytest.approx(0.8, abs=1e-11)


def test_scan_row_count_and_determinism(runner):
    args = [
        "scan",
        "--sin-alpha",
        "0",
        "0.9",
        "4",
        "--beta-range",
        "0",
        "1.5",
        "3",
        "--phi2-range",
        "0",
        "1",
        "2",
        "--threads",
        "3",
    ]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, [*args[:-1], "1"])
    assert first.exit_code == 0, first.stderr
    assert len(table(first.stdout)) == 1 + 4 * 3 * 2
    assert first.stdout == second.stdout


def test_scan_in_degrees(runner):
    degrees = runner.invoke(cli, ["scan", "--sin-alpha", "0.5", "0.5", "1", "--beta-range", "45", "45", "1", "--deg"])
    assert float(table(degrees.stdout)[1][3]) == pytest.approx(0.8, abs=1e-11)


def test_chsh_hermitian(runner):
    result = runner.invoke(cli, ["chsh", *HERMITIAN, "--grid-resolution", "20"])
    assert result.exit_code == 0, result.stderr
    values = quantities(result.stdout)
    assert float(values["s_max"]) == pytest.approx(2.0, abs=1e-3)
    assert float(values["bound"]) == 2.0
    assert values["verdict"] == "PASS"


def test_chsh_suppressed_bound(runner):
    result = runner.invoke(cli, ["chsh", *HALF_SIN_ALPHA, "--grid-resolution", "20"])
    values = quantities(result.stdout)
    assert float(values["s_max"]) == pytest.approx(1.2, abs=1e-3)
    assert abs(float(values["bound_residual"])) <= 1e-3
    assert values["verdict"] == "PASS"


def test_chsh_fig2(runner):
    result = runner.invoke(cli, ["chsh", "--preset", "fig2", "--grid-resolution", "20"])
    assert float(quantities(result.stdout)["s_max"]) == pytest.approx(1.99746, abs=1e-3)


def test_paraxial_sweep(runner, tmp_path):
    snapshot = tmp_path / "field.csv"
    result = runner.invoke(cli, ["paraxial", *HALF_SIN_ALPHA, "--snapshot", str(snapshot)])
    assert result.exit_code == 0, result.stderr
    rows = table(result.stdout)
    assert rows[0] == ["rayleigh_ratio", "k", "include_diffraction", "max_discrepancy", "pa_h_matrix", "pa_h_paraxial"]
    assert len(rows) == 6
    weak = next(row for row in rows[1:] if float(row[0]) == 1000.0)
    assert float(weak[3]) <= 1e-3
    assert snapshot.read_text(encoding="utf-8").startswith("x,re_e_u,im_e_u,re_e_l,im_e_l\n")


def test_paraxial_without_diffraction(runner):
    result = runner.invoke(cli, ["paraxial", "--preset", "fig2", "--rayleigh-ratio", "10", "--no-diffraction"])
    assert result.exit_code == 0, result.stderr
    (row,) = table(result.stdout)[1:]
    assert row[2] == "false"
    assert float(row[3]) <= 1e-8


def test_paraxial_broken_phase(runner):
    result = runner.invoke(cli, ["paraxial", "--eta1", "2", "--phi1", "1.5707963", "--eta2", "1"])
    assert result.exit_code == 2


def test_preset_summary(runner):
    result = runner.invoke(cli, ["preset", "--grid-resolution", "20"])
    assert result.exit_code == 0, result.stderr
    values = quantities(result.stdout)
    assert values["preset"] == "fig2"
    assert float(values["eta1"]) == 1.91
    assert float(values["sin_alpha"]) == pytest.approx(0.02521, abs=1e-4)
    assert float(values["max_violation"]) == pytest.approx(0.05038, abs=1e-4)
    assert float(values["max_violation_closed_form"]) == pytest.approx(float(values["max_violation"]), abs=1e-8)
    assert float(values["s_max"]) == pytest.approx(1.99746, abs=1e-3)
    assert float(values["chsh_bound"]) == pytest.approx(1.99746, abs=1e-5)


@pytest.mark.parametrize("beta", ["0.7853981634", repr(3 * math.pi / 4)])
def test_bench_balanced_splitter_with_dark_ports(runner, beta):
    args = ["bench", "--eta1", "0", "--eta2", "1", "--bs-angle", "0.7853981634", "--beta", beta]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.stderr
    values = quantities(result.stdout)
    assert float(values["closed_form_residual"]) <= 1e-12
    assert min(float(values[name]) for name in ("w_uh", "w_uv", "w_lh", "w_lv")) <= 1e-9
