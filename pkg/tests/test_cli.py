"""Tests for the command-line front end: exit codes, CSV/JSON contracts,
and determinism."""

import json
import math

import numpy as np
import pytest

from nse import cli
from nse.errors import NumericalAbort


def _run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def _parse_csv(text):
    lines = [ln for ln in text.strip().splitlines()]
    header = lines[0].split(",")
    data = np.array([[float(tok) for tok in ln.split(",")] for ln in lines[1:]])
    return header, data


class TestList:
    def test_eight_rows_with_parameters(self, capsys):
        code, out, _ = _run(capsys, ["list"])
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 9  # header + eight families
        assert any("lambda" in ln for ln in lines)
        assert any("omega1" in ln for ln in lines)


class TestCurve:
    def test_gausson_potential_value_at_length_scale(self, capsys):
        code, out, _ = _run(capsys, [
            "curve", "--model", "gausson", "--N", "3", "--what", "potential",
            "--rmax", "2", "--points", "200",
        ])
        assert code == 0
        header, data = _parse_csv(out)
        assert header == ["r_over_length_scale", "U_over_abs_E0"]
        row = data[np.isclose(data[:, 0], 1.0)]
        assert row.shape[0] == 1
        # U(b) = hbar*Omega while E0 = 1.5*hbar*Omega
        assert abs(row[0, 1] - 2.0 / 3.0) < 1e-12

    def test_coshnd_nonlinearity_endpoint(self, capsys):
        code, out, _ = _run(capsys, [
            "curve", "--model", "coshNd", "--N", "3", "--what", "nonlinearity",
            "--points", "50",
        ])
        assert code == 0
        header, data = _parse_csv(out)
        assert header == ["phi", "G"]
        assert abs(data[-1, 0] - 1.0) < 1e-15
        assert abs(data[-1, 1] + 2.0) < 1e-12

    def test_coulomb_profile_at_bohr_radius(self, capsys):
        code, out, _ = _run(capsys, [
            "curve", "--model", "coulomb", "--what", "profile",
            "--rmax", "2", "--points", "200",
        ])
        assert code == 0
        _, data = _parse_csv(out)
        row = data[np.isclose(data[:, 0], 1.0)]
        assert abs(row[0, 1] - math.exp(-1.0)) < 1e-12

    def test_deterministic_output(self, capsys):
        argv = ["curve", "--model", "cosh1d", "--what", "profile", "--rmax", "3"]
        _, out1, _ = _run(capsys, argv)
        _, out2, _ = _run(capsys, argv)
        assert out1 == out2

    def test_file_output(self, capsys, tmp_path):
        path = tmp_path / "curve.csv"
        code, _, _ = _run(capsys, [
            "curve", "--model", "cosh1d", "--what", "potential", "-o", str(path),
        ])
        assert code == 0
        assert path.read_text().startswith("r_over_length_scale,")

    def test_usage_error_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["curve", "--model", "cosh1d", "--what", "wavelet"])
        assert exc.value.code == 2
        # parameters from a different family are rejected
        with pytest.raises(SystemExit) as exc:
            cli.main(["curve", "--model", "cosh1d", "--beta", "3", "--what", "profile"])
        assert exc.value.code == 2


class TestVerify:
    def test_invert_single_model(self, capsys):
        code, out, _ = _run(capsys, ["verify", "invert", "--model", "coulomb"])
        assert code == 0
        payload = json.loads(out)
        assert payload["total"] == 1
        case = payload["cases"][0]
        assert case["pass"] and case["measured"] < 1e-6
        assert set(case) == {"case", "family", "params", "measured", "expected",
                             "rel_dev", "grid_meta", "pass", "notes"}

    def test_limits_softened_delta(self, capsys):
        code, out, _ = _run(capsys, [
            "verify", "limits", "--case", "softened-delta", "--a", "1", "--b0", "1",
        ])
        assert code == 0
        payload = json.loads(out)
        names = {c["case"] for c in payload["cases"]}
        assert names == {"softened-delta-potential-integral", "softened-delta-G-integral"}
        assert all(c["pass"] for c in payload["cases"])

    def test_uncertainty_small_lambda(self, capsys):
        code, out, _ = _run(capsys, ["verify", "uncertainty", "--lambda", "0.01"])
        assert code == 0
        payload = json.loads(out)
        cases = {c["case"]: c for c in payload["cases"]}
        assert cases["uncertainty-product"]["measured"] > 0.5
        assert cases["uncertainty-dx-asymptotic"]["rel_dev"] < 0.02
        assert cases["uncertainty-dp-asymptotic"]["rel_dev"] < 0.02
        assert cases["uncertainty-product-lambda-1"]["pass"]

    def test_norm_suite(self, capsys):
        code, out, _ = _run(capsys, ["verify", "norm"])
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] == payload["total"] > 0

    def test_failing_case_exits_1(self, capsys):
        # lambda = 0.5 is far outside the small-lambda asymptotic band
        code, out, err = _run(capsys, ["verify", "uncertainty", "--lambda", "0.5"])
        assert code == 1
        assert "FAILED cases" in err
        payload = json.loads(out)
        assert not payload["cases"][1]["pass"]


class TestEvolve:
    def test_short_run_outputs(self, capsys, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, _, _ = _run(capsys, [
            "evolve", "--model", "cosh1d", "--a", "1", "--velocity", "0.5",
            "--time", "0.2", "--dt", "1e-3", "--grid", "1024", "--xspan", "-20:20",
        ])
        assert code == 0
        summary = json.loads((tmp_path / "nse_evolve_summary.json").read_text())
        assert summary["final_l2_err_vs_reference"] < 1e-6
        assert summary["mass_drift"] < 1e-12
        header, data = _parse_csv((tmp_path / "nse_evolve_diagnostics.csv").read_text())
        assert header == ["t", "mass", "peak_x", "l2_err_vs_reference"]
        header, snap = _parse_csv((tmp_path / "nse_evolve_snapshots.csv").read_text())
        assert header == ["t", "x", "re", "im", "abs2"]
        assert snap.shape[1] == 5

    def test_non_evolution_family_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["evolve", "--model", "coulomb", "--time", "1"])
        assert exc.value.code == 2

    def test_bad_span_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["evolve", "--model", "cosh1d", "--time", "1",
                      "--xspan", "oops"])
        assert exc.value.code == 2

    def test_numerical_abort_exit_3(self, capsys, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)

        def explode(*a, **k):
            raise NumericalAbort("test abort", None, {"t": [0.0], "mass": [1.0],
                                                      "peak_x": [0.0]})

        monkeypatch.setattr(cli.evolve, "evolve", explode)
        code, _, err = _run(capsys, [
            "evolve", "--model", "cosh1d", "--time", "0.1", "--grid", "1024",
        ])
        assert code == 3
        assert "numerical abort" in err

    def test_tan2_crank_nicolson_route(self, capsys, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, _, _ = _run(capsys, [
            "evolve", "--model", "tan2", "--time", "0.1", "--dt", "1e-3",
            "--grid", "256",
        ])
        assert code == 0
        summary = json.loads((tmp_path / "nse_evolve_summary.json").read_text())
        assert summary["final_l2_err_vs_reference"] < 1e-3
        with pytest.raises(SystemExit) as exc:
            cli.main(["evolve", "--model", "tan2", "--time", "0.1",
                      "--velocity", "0.5"])
        assert exc.value.code == 2


class TestCollide:
    def test_quick_collision(self, capsys, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, _, _ = _run(capsys, [
            "collide", "--model", "cosh1d", "--v1", "0.75", "--v2", "-0.75",
            "--sep", "12", "--dt", "2e-3", "--time", "16",
        ])
        assert code == 0
        summary = json.loads((tmp_path / "nse_collide_summary.json").read_text())
        assert summary["correlation_min"] > 0.999
        assert summary["mass_drift"] < 1e-10
        header, data = _parse_csv((tmp_path / "nse_collide_trajectories.csv").read_text())
        assert header == ["t", "peak1_x", "peak2_x"]

    def test_equal_velocities_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["collide", "--model", "cosh1d", "--v1", "0.5", "--v2", "0.5",
                      "--sep", "20", "--time", "1"])
        assert exc.value.code == 2
