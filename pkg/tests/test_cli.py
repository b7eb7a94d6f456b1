"""Command-line interface: subcommands, formats, exit codes, determinism."""
import csv
import io
import json
import math

import numpy as np
import pytest

from qpictures import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestParseAngle:
    @pytest.mark.parametrize(
        "text,value",
        [
            ("0.5", 0.5),
            ("-2", -2.0),
            ("pi", math.pi),
            ("-pi", -math.pi),
            ("pi/4", math.pi / 4),
            ("3pi/4", 3 * math.pi / 4),
            ("2*pi/3", 2 * math.pi / 3),
            ("0.5pi", math.pi / 2),
        ],
    )
    def test_accepted_forms(self, text, value):
        assert cli.parse_angle(text) == pytest.approx(value)

    @pytest.mark.parametrize("text", ["abc", "pi/x", "1.2.3"])
    def test_rejected_forms(self, text):
        import argparse

        with pytest.raises(argparse.ArgumentTypeError):
            cli.parse_angle(text)


class TestVerify:
    def test_passes_on_healthy_build(self, capsys):
        code, out = run_cli(capsys, "verify")
        assert code == 0
        assert "all checks passed" in out
        for name in ("cnot_action", "picture_equivalence", "bell_violation"):
            assert name in out

    def test_json_output(self, capsys):
        code, out = run_cli(capsys, "verify", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["all_passed"] is True
        names = [c["name"] for c in payload["checks"]]
        assert len(names) == 11
        assert all(c["passed"] for c in payload["checks"])

    def test_corrupted_cnot_matrix_fails_named_check(self, capsys, monkeypatch):
        # the identity is unitary, so the fault reaches the physics checks
        monkeypatch.setattr("qpictures.gates.CN_MATRIX", np.eye(4, dtype=complex))
        code, out = run_cli(capsys, "verify")
        assert code == 1
        assert "FAILED:" in out
        assert "cnot_action" in out.split("FAILED:")[1]


class TestEpr:
    def test_equal_angles_json(self, capsys):
        code, out = run_cli(capsys, "epr", "0.3", "0.3", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["p_joint_t2"] == pytest.approx(0.5, abs=1e-9)
        assert data["p_diff_t4"] == pytest.approx(0.0, abs=1e-9)

    def test_opposite_angles(self, capsys):
        code, out = run_cli(capsys, "epr", "pi", "0", "--format", "json")
        data = json.loads(out)
        assert data["p_joint_t2"] == pytest.approx(0.0, abs=1e-9)
        assert data["p_diff_t4"] == pytest.approx(1.0, abs=1e-9)

    def test_show_descriptors_renders_terms(self, capsys):
        code, out = run_cli(capsys, "epr", "pi/3", "0", "--show-descriptors")
        assert code == 0
        assert "+0.866025 * Y2 X3" in out
        assert "-0.500000 * Z2 X3" in out

    def test_degrees_flag(self, capsys):
        _, out = run_cli(capsys, "epr", "90", "0", "--degrees", "--format", "json")
        data = json.loads(out)
        assert data["p_joint_t2"] == pytest.approx(0.25, abs=1e-9)

    def test_unparseable_angle_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["epr", "abc", "0"])
        assert exc.value.code == 2

    def test_csv_format(self, capsys):
        code, out = run_cli(capsys, "epr", "0.3", "0.3", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0][0] == "theta"
        assert len(rows) == 2

    def test_state_dump(self, capsys):
        code, out = run_cli(capsys, "epr", "0", "0", "--dump-state", "1")
        assert code == 0
        assert "index,basis,re,im" in out
        assert "|1,1,1,1>" in out


class TestSweep:
    def test_rows_follow_closed_forms(self, capsys):
        code, out = run_cli(capsys, "sweep", "8")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 8
        for k, row in enumerate(rows):
            diff = k * 2 * math.pi / 8
            assert float(row["p_joint_t2"]) == pytest.approx(
                0.5 * math.cos(diff / 2) ** 2, abs=1e-10
            )
            assert float(row["p_diff_t4"]) == pytest.approx(
                math.sin(diff / 2) ** 2, abs=1e-10
            )

    def test_deterministic_output(self, capsys):
        _, first = run_cli(capsys, "sweep", "5")
        _, second = run_cli(capsys, "sweep", "5")
        assert first == second

    def test_writes_file(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, _ = run_cli(capsys, "sweep", "4", "--out", str(out_path))
        assert code == 0
        text = out_path.read_text()
        assert text.startswith("theta,phi,")
        assert text.count("\n") == 5

    def test_too_few_points_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["sweep", "1"])
        assert exc.value.code == 2

    def test_json_format(self, capsys):
        _, out = run_cli(capsys, "sweep", "3", "--format", "json")
        payload = json.loads(out)
        assert len(payload["rows"]) == 3


class TestChsh:
    def test_canonical_angles(self, capsys):
        code, out = run_cli(
            capsys, "chsh", "0", "pi/2", "pi/4", "3pi/4", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["S"] == pytest.approx(2 * math.sqrt(2), abs=1e-6)
        assert data["violation"] is True

    def test_all_zero_angles(self, capsys):
        _, out = run_cli(capsys, "chsh", "0", "0", "0", "0", "--format", "json")
        data = json.loads(out)
        assert data["S"] == pytest.approx(2.0, abs=1e-9)
        assert data["violation"] is False

    def test_scan(self, capsys):
        code, out = run_cli(capsys, "chsh", "--scan", "pi/4", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["max_abs_s"] == pytest.approx(2 * math.sqrt(2), abs=1e-6)
        assert data["best"]["violation"] is True

    def test_scan_csv_columns(self, capsys):
        _, out = run_cli(capsys, "chsh", "--scan", "pi/2", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["a", "a_prime", "b", "b_prime", "S", "violation"]
        assert len(rows) == 1 + 4**4

    def test_missing_angles_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["chsh"])
        assert exc.value.code == 2

    def test_single_setting_csv(self, capsys):
        _, out = run_cli(capsys, "chsh", "0", "0", "0", "0", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert len(rows) == 2
        assert rows[1][-1] == "0"


class TestPictureCheck:
    def test_default_invocation_passes(self, capsys):
        code, out = run_cli(capsys, "picture-check")
        assert code == 0
        assert "PASS" in out
        assert "qubits=4 depth=8 seed=42" in out

    def test_same_seed_gives_identical_bytes(self, capsys):
        _, first = run_cli(capsys, "picture-check", "--qubits", "3", "--depth", "6", "--seed", "9")
        _, second = run_cli(capsys, "picture-check", "--qubits", "3", "--depth", "6", "--seed", "9")
        assert first == second

    def test_qubits_out_of_range_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["picture-check", "--qubits", "6"])
        assert exc.value.code == 2

    def test_depth_out_of_range_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["picture-check", "--depth", "13"])
        assert exc.value.code == 2
