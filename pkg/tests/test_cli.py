import json
import math
import subprocess
import sys

import pytest

from seec import criterion


def run_cli(*args, env=None):
    proc = subprocess.run(
        [sys.executable, "-m", "seec", *args],
        capture_output=True,
        text=True,
        env=env,
    )
    return proc.returncode, proc.stdout, proc.stderr


def parse_csv(text):
    lines = text.strip().split("\n")
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    return header, rows


class TestSweep:
    def test_ground_state_line(self):
        code, out, err = run_cli(
            "sweep", "--modes", "0:0", "--eta-min", "0", "--eta-max", "2", "--steps", "3"
        )
        assert code == 0, err
        header, rows = parse_csv(out)
        assert header == ["eta", "n", "m", "f", "entangled"]
        assert [float(r[3]) for r in rows] == [0.0, -1.0, -2.0]
        assert [r[4] for r in rows] == ["false", "true", "true"]

    def test_two_step_grid_contract(self):
        code, out, _ = run_cli(
            "sweep", "--modes", "1:1,2:0", "--eta-min", "0.5", "--eta-max", "1.5", "--steps", "2"
        )
        assert code == 0
        _, rows = parse_csv(out)
        assert len(rows) == 4  # two rows per mode
        assert [r[0] for r in rows] == ["0.5", "1.5", "0.5", "1.5"]

    def test_round_trip_against_threshold(self):
        code, out, _ = run_cli(
            "sweep", "--modes", "1:1,3:2", "--eta-min", "0", "--eta-max", "2", "--steps", "41"
        )
        assert code == 0
        _, rows = parse_csv(out)
        for eta_s, n_s, m_s, f_s, _ in rows:
            eta0 = criterion.threshold_eta0(int(n_s), int(m_s))
            assert abs(float(f_s) - (eta0 - float(eta_s))) <= 1e-9

    def test_deterministic_output(self):
        args = ("sweep", "--modes", "1:1", "--steps", "11")
        assert run_cli(*args) == run_cli(*args)

    def test_json_format(self):
        code, out, _ = run_cli("sweep", "--modes", "2:2", "--steps", "3", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert len(payload) == 3
        assert set(payload[0]) == {"eta", "n", "m", "f", "entangled"}

    def test_svg_output(self, tmp_path):
        svg_path = tmp_path / "sweep.svg"
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run_cli(
            "sweep", "--steps", "21", "--out", str(out_path), "--svg", str(svg_path)
        )
        assert code == 0
        svg = svg_path.read_text()
        assert 'viewBox="0 0 800 600"' in svg
        assert svg.count("<polyline") == 4  # default four modes
        assert ">eta</text>" in svg and ">f</text>" in svg
        assert "stroke-dasharray" in svg  # zero line
        assert out_path.read_text().startswith("eta,n,m,f,entangled\n")

    def test_invalid_steps_leaves_no_file(self, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, _, err = run_cli("sweep", "--steps", "1", "--out", str(out_path))
        assert code == 1
        assert "steps" in err
        assert not out_path.exists()

    def test_bad_mode_syntax(self):
        code, _, err = run_cli("sweep", "--modes", "1-1")
        assert code == 1
        assert "n:m" in err

    def test_mode_order_out_of_range(self):
        code, _, err = run_cli("sweep", "--modes", "40:0")
        assert code == 1


class TestThreshold:
    def test_small_grid_values(self):
        code, out, _ = run_cli("threshold", "--n-max", "1", "--m-max", "1")
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["n", "m", "eta0"]
        assert [(r[0], r[1]) for r in rows] == [("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")]
        assert float(rows[0][2]) == 0.0
        assert abs(float(rows[1][2]) - 0.270362845461478) <= 1e-9
        assert abs(float(rows[2][2]) - 0.270362845461478) <= 1e-9
        assert abs(float(rows[3][2]) - 0.540725690922956) <= 1e-9

    def test_single_cell_grid(self):
        code, out, _ = run_cli("threshold", "--n-max", "0", "--m-max", "0")
        assert code == 0
        assert out == "n,m,eta0\n0,0,0\n"

    def test_grid_symmetry(self):
        code, out, _ = run_cli("threshold", "--n-max", "4", "--m-max", "4")
        assert code == 0
        _, rows = parse_csv(out)
        table = {(r[0], r[1]): r[2] for r in rows}
        for n in range(5):
            for m in range(5):
                assert table[(str(n), str(m))] == table[(str(m), str(n))]

    def test_rejects_out_of_range(self):
        code, _, err = run_cli("threshold", "--n-max", "33")
        assert code == 1
        assert "n-max" in err


class TestCriterionCommand:
    def test_report_keys_and_values(self):
        code, out, _ = run_cli("criterion", "--n", "1", "--m", "1", "--eta", "0.3")
        assert code == 0
        payload = json.loads(out)
        assert list(payload) == [
            "n", "m", "eta", "H_w_minus", "H_v_plus", "f", "eta0",
            "entangled", "alt_f", "oracle_delta",
        ]
        assert payload["entangled"] is False
        assert abs(payload["f"] - (payload["eta0"] - 0.3)) <= 1e-12
        assert abs(payload["alt_f"] - (payload["eta0"] + 0.3)) <= 1e-12

    def test_oracle_delta_null_where_closed_form_invalid(self):
        code, out, _ = run_cli("criterion", "--n", "2", "--m", "2", "--eta", "0.1")
        assert code == 0
        assert json.loads(out)["oracle_delta"] is None


class TestDiagonalize:
    def test_degenerate_example(self):
        code, out, _ = run_cli("diagonalize", "--C", "-0.5")
        assert code == 0
        payload = json.loads(out)
        assert list(payload) == [
            "M", "K", "omega", "eta", "alpha_deg", "degenerate_branch", "roundtrip_error",
        ]
        assert abs(payload["eta"] - 0.1277064059) <= 1e-9
        assert payload["alpha_deg"] == 45.0
        assert payload["degenerate_branch"] is True
        assert payload["roundtrip_error"] <= 1e-9

    def test_decoupled(self):
        code, out, _ = run_cli("diagonalize")
        payload = json.loads(out)
        assert code == 0 and payload["eta"] == 0.0

    def test_unbound_rejected_with_message(self):
        code, _, err = run_cli("diagonalize", "--C", "2")
        assert code == 1
        assert "4AB - C^2" in err

    def test_asymmetric_couplings(self):
        code, out, _ = run_cli("diagonalize", "--A", "2", "--B", "1", "--C", "1")
        payload = json.loads(out)
        assert abs(payload["eta"] - 0.255937307546837) <= 1e-9
        assert abs(payload["alpha_deg"] - (-22.5)) <= 1e-9
        assert payload["roundtrip_error"] <= 1e-9


class TestVerify:
    def test_exit_zero_and_experimental_flags(self):
        code, out, _ = run_cli("verify", "--n-max", "2")
        assert code == 0
        assert "EXPERIMENTAL" in out  # the n=2 closed form disagrees, reported not failed
        assert "all passed" in out

    def test_json_format(self):
        code, out, _ = run_cli("verify", "--n-max", "1", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["pass"] is True
        names = {c["name"] for c in payload["checks"]}
        assert "I3anchor[1]" in names
        statuses = {c["status"] for c in payload["checks"]}
        assert statuses <= {"ok", "EXPERIMENTAL", "report"}

    def test_gaussian_only_case_all_deltas_vanish(self):
        code, out, _ = run_cli("verify", "--n-max", "0", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["pass"] is True
        for check in payload["checks"]:
            if check["normative"]:
                assert check["delta"] <= 1e-12

    def test_rejects_large_n_max(self):
        code, _, err = run_cli("verify", "--n-max", "13")
        assert code == 1


class TestWavefunction:
    def test_grid_and_origin_value(self):
        code, out, _ = run_cli("wavefunction", "--steps", "5", "--u-min", "-2", "--u-max", "2")
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["u_plus", "u_minus", "value"]
        assert len(rows) == 25
        origin = [r for r in rows if r[0] == "0" and r[1] == "0"]
        assert len(origin) == 1
        assert abs(float(origin[0][2]) - 1.0 / math.sqrt(math.pi)) <= 1e-12

    def test_momentum_space(self):
        code, out, _ = run_cli(
            "wavefunction", "--n", "1", "--m", "0", "--eta", "0.4", "--space", "momentum",
            "--steps", "3",
        )
        assert code == 0
        _, rows = parse_csv(out)
        assert len(rows) == 9


class TestUsageErrors:
    def test_unknown_command_exits_one(self):
        code, _, err = run_cli("nonsense")
        assert code == 1
        assert "error" in err

    def test_missing_command_exits_one(self):
        code, _, _ = run_cli()
        assert code == 1

    def test_unwritable_out_path_exits_one(self, tmp_path):
        code, _, err = run_cli(
            "threshold", "--n-max", "0", "--out", str(tmp_path / "missing" / "t.csv")
        )
        assert code == 1
        assert "cannot write output" in err


class TestInProcess:
    def test_verification_failure_maps_to_exit_two(self, monkeypatch, capsys):
        from seec import cli, verification

        failing = verification.Check(
            name="I1[3]", value=1.0, reference=2.0, delta=1.0, tol=1e-10,
            normative=True, status="FAIL",
        )
        monkeypatch.setattr(verification, "collect_checks", lambda n_max: [failing])
        assert cli.main(["verify", "--n-max", "3"]) == 2
        out = capsys.readouterr().out
        assert "FAIL" in out and "FAILURES PRESENT" in out

    def test_domain_error_maps_to_exit_one(self, capsys):
        from seec import cli

        assert cli.main(["criterion", "--n", "40"]) == 1
        assert "error" in capsys.readouterr().err
