import csv
import io
import json

import pytest

from fed.cli import main

from conftest import fixture_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCertify:
    def test_k36_qhfm_json(self, capsys):
        code, out, _ = run(capsys, "certify", fixture_path("k36.edges"), "--matching", "qhfm", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["guarantee"] >= 0.934
        assert payload["s_hat"] == "1"
        assert payload["matching"]["kind"] == "qhfm"
        assert payload["graph"]["vertex_count"] == 9

    def test_hub_qhfm_text(self, capsys):
        code, out, _ = run(capsys, "certify", fixture_path("hub_triangles.edges"), "--matching", "qhfm")
        assert code == 0
        assert "guarantee 0.785" in out

    def test_hub_constrained(self, capsys):
        code, out, _ = run(
            capsys, "certify", fixture_path("hub_triangles.edges"),
            "--matching", "constrained:1.25,5", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["matching_value"] == "13/5"
        assert payload["guarantee"] == pytest.approx(0.833, abs=2e-3)

    def test_fixed_kappa(self, capsys):
        code, out, _ = run(
            capsys, "certify", fixture_path("c4.edges"),
            "--matching", "hfm:2", "--kappa", "0.3", "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["kappa"] == 0.3

    def test_oracle_flag(self, capsys):
        code, out, _ = run(
            capsys, "certify", fixture_path("c4.edges"),
            "--matching", "hfm:2", "--oracle", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["oracle"]["lambda_max"] == pytest.approx(6.0)

    def test_bad_strategy_errors(self, capsys):
        code, _, err = run(capsys, "certify", fixture_path("c4.edges"), "--matching", "nope")
        assert code == 1
        assert "error" in err

    def test_json_error_object(self, capsys):
        code, _, err = run(
            capsys, "certify", fixture_path("k36.edges"),
            "--matching", "hfm:2", "--format", "json",
        )
        assert code == 1
        payload = json.loads(err)
        assert payload["error"]["type"] == "MatchingError"

    def test_infeasible_constrained_box(self, capsys):
        code, _, err = run(
            capsys, "certify", fixture_path("k36.edges"),
            "--matching", "constrained:1,2", "--format", "json",
        )
        assert code == 1
        assert "vertex" in json.loads(err)["error"]["message"]

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "certify", "no_such_file.edges")
        assert code == 1
        assert "error" in err

    def test_unbounded_box_sentinel(self, capsys):
        code, out, _ = run(
            capsys, "certify", fixture_path("c4.edges"),
            "--matching", "constrained:1,inf", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["matching_value"] == "2"  # recovers the unconstrained optimum

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "cert.json"
        code, out, _ = run(
            capsys, "certify", fixture_path("c4.edges"),
            "--matching", "mwfm", "--format", "json", "--out", target,
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["matching_kind"] == "mwfm"


class TestTable:
    def test_csv_matches_reference(self, capsys):
        code, out, _ = run(capsys, "table", "--max-degree", "10", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 9
        from test_ratio import REFERENCE_TABLE

        for row in rows:
            d = int(row["d"])
            r_ref, k_ref = REFERENCE_TABLE[d]
            assert float(row["r_d"]) == pytest.approx(r_ref, abs=1e-3)
            assert float(row["kappa_d"]) == pytest.approx(k_ref, abs=1e-3)

    def test_single_row(self, capsys):
        code, out, _ = run(capsys, "table", "--max-degree", "2", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 1
        assert float(rows[0]["r_d"]) == pytest.approx(0.872, abs=1e-3)

    def test_text_mode_rounds(self, capsys):
        code, out, _ = run(capsys, "table", "--max-degree", "3")
        assert code == 0
        # r_2 = 0.87268 rounds up at three decimals
        assert "0.873" in out and "0.894" in out

    def test_monotone_to_fifty(self, capsys):
        code, out, _ = run(capsys, "table", "--max-degree", "50", "--format", "csv")
        assert code == 0
        ratios = [float(r["r_d"]) for r in csv.DictReader(io.StringIO(out))]
        assert len(ratios) == 49
        assert all(b > a for a, b in zip(ratios, ratios[1:]))


class TestOracleCommand:
    def test_k2(self, capsys):
        code, out, _ = run(capsys, "oracle", fixture_path("k2.edges"), "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["lambda_max"] == pytest.approx(2.0)
        assert payload["slack"] == pytest.approx(0.0, abs=1e-9)

    def test_c5_slack_positive(self, capsys):
        code, out, _ = run(capsys, "oracle", fixture_path("c5.edges"), "--format", "json")
        assert code == 0
        assert json.loads(out)["slack"] > 0

    def test_k22_variational(self, capsys):
        code, out, _ = run(
            capsys, "oracle", fixture_path("k22.edges"),
            "--variational", "--restarts", "6", "--seed", "11", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["variational"]["ratio"] == pytest.approx(0.872, abs=2e-3)

    def test_deterministic_given_seed(self, capsys):
        args = (
            "oracle", fixture_path("k22.edges"),
            "--variational", "--restarts", "3", "--seed", "5", "--format", "json",
        )
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_cap_exceeded(self, capsys, monkeypatch):
        monkeypatch.setenv("FED_ORACLE_MAX_QUBITS", "3")
        code, _, err = run(capsys, "oracle", fixture_path("c4.edges"), "--format", "json")
        assert code == 1
        assert "cap" in json.loads(err)["error"]["message"]

    def test_flag_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("FED_ORACLE_MAX_QUBITS", "3")
        code, _, _ = run(
            capsys, "oracle", fixture_path("c4.edges"), "--max-qubits", "12",
        )
        assert code == 0
