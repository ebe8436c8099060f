"""CLI contract: verbs, flags, output formats, exit codes."""

import json
import math

import pytest

from pkspecial.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_gamma_classical(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "gamma", "--p", "1", "--k", "1", "--x", "5")
        assert code == 0
        assert float(out.splitlines()[0].split("=")[1]) == pytest.approx(24.0, rel=1e-12)

    def test_gamma_family_point_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "gamma", "--p", "2", "--k", "3", "--x", "3", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["value"] == pytest.approx(2.0 / 3.0, rel=1e-13)
        assert doc["method"] == "closed"
        assert doc["inputs"]["p"] == 2.0

    def test_pole_is_domain_error(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "gamma", "--k", "1", "--x", "-2", "--format", "json"
        )
        assert code == 2
        doc = json.loads(out)
        assert doc["reason"] == "pole at index 2"

    def test_eval_methods_agree(self, capsys):
        values = {}
        for method in ("closed", "limit", "integral", "euler-product", "weierstrass"):
            code, out, _ = run_cli(
                capsys, "eval", "gamma", "--p", "2", "--k", "0.5", "--x", "1.1",
                "--method", method, "--format", "json",
            )
            assert code == 0
            values[method] = json.loads(out)["value"]
        base = values["closed"]
        for method, v in values.items():
            assert v == pytest.approx(base, rel=1e-6), method

    def test_beta_and_psi(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "beta", "--k", "2", "--x", "2", "--y", "2", "--format", "json"
        )
        assert code == 0 and json.loads(out)["value"] == pytest.approx(0.5, rel=1e-12)
        code, out, _ = run_cli(
            capsys, "eval", "psi", "--p", "1", "--k", "1", "--x", "1", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["value"] == pytest.approx(-0.5772156649015329, rel=1e-12)

    def test_poch_routes(self, capsys):
        for method in ("direct", "symmetric", "reduce", "gamma-ratio"):
            code, out, _ = run_cli(
                capsys, "eval", "poch", "--x", "2", "--n", "3", "--method", method,
                "--format", "json",
            )
            assert code == 0
            assert json.loads(out)["value"] == pytest.approx(24.0, rel=1e-12)

    def test_hyper_triples(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "hyper", "--a", "1,1,1", "--a", "1,1,1", "--b", "2,1,1",
            "--x", "0.5", "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["value"] == pytest.approx(2.0 * math.log(2.0), rel=1e-12)

    def test_hyper_divergent_is_domain_error(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "hyper", "--a", "1,2,1", "--a", "1,3,1", "--b", "2,1,1",
            "--x", "0.5", "--format", "json",
        )
        assert code == 2
        assert "radius" in json.loads(out)["reason"]

    def test_missing_argument(self, capsys):
        code, out, err = run_cli(capsys, "eval", "gamma", "--p", "1", "--k", "1")
        assert code == 2
        assert "--x is required" in err

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            run_cli(capsys, "evaluate", "gamma")
        assert exc_info.value.code == 1


class TestAudit:
    def test_audit_small_suite(self, capsys, tmp_path):
        out_path = tmp_path / "beta.json"
        code, out, _ = run_cli(
            capsys, "audit", "beta", "--grid", "small", "--out", str(out_path)
        )
        assert code == 0
        assert "all corrected forms pass: True" in out
        doc = json.loads(out_path.read_text())
        assert doc["suite"] == "beta"

    def test_audit_deterministic_files(self, capsys, tmp_path):
        p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
        run_cli(capsys, "audit", "psi", "--grid", "small", "--out", str(p1))
        run_cli(capsys, "audit", "psi", "--grid", "small", "--out", str(p2))
        assert p1.read_bytes() == p2.read_bytes()

    def test_audit_json_summary(self, capsys):
        code, out, _ = run_cli(capsys, "audit", "hyper", "--grid", "small", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["all_corrected_pass"] is True
        assert "4.4" in doc["identities"]

    def test_audit_exit_nonzero_when_failing(self, capsys):
        code, out, _ = run_cli(
            capsys, "audit", "beta", "--grid", "small", "--tol", "3.2=1e-30"
        )
        assert code != 0

    def test_audit_io_error(self, capsys):
        code, _, err = run_cli(
            capsys, "audit", "beta", "--grid", "small", "--out", "/nonexistent/dir/x.json"
        )
        assert code == 3
        assert "cannot write" in err


class TestTable:
    def test_gamma_sweep_csv(self, capsys):
        code, out, _ = run_cli(capsys, "table", "gamma", "--p", "1", "--k", "1", "--x", "1:3:1")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x,value,abs_err"
        rows = [line.split(",") for line in lines[1:]]
        assert [float(r[0]) for r in rows] == [1.0, 2.0, 3.0]
        assert float(rows[2][1]) == pytest.approx(2.0, rel=1e-12)

    def test_psi_sweep_values(self, capsys):
        code, out, _ = run_cli(capsys, "table", "psi", "--p", "1", "--k", "1", "--x", "1:2:1")
        rows = [line.split(",") for line in out.strip().splitlines()[1:]]
        assert float(rows[0][1]) == pytest.approx(-0.5772156649015329, rel=1e-10)
        assert float(rows[1][1]) == pytest.approx(0.4227843350984671, rel=1e-10)

    def test_beta_y_sweep(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "beta", "--k", "2", "--x", "2", "--y", "2:2:1"
        )
        assert code == 0
        rows = out.strip().splitlines()[1:]
        assert float(rows[0].split(",")[1]) == pytest.approx(0.5, rel=1e-12)

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "gamma", "--x", "1:2:0.5", "--format", "json"
        )
        rows = json.loads(out)
        assert [r["x"] for r in rows] == [1.0, 1.5, 2.0]

    def test_row_limit(self, capsys):
        code, _, err = run_cli(capsys, "table", "gamma", "--x", "0:100:1e-6")
        assert code == 1
        assert "limit" in err

    def test_missing_sweep(self, capsys):
        code, _, err = run_cli(capsys, "table", "gamma", "--x", "2")
        assert code == 1

    def test_seventeen_digit_rendering(self, capsys):
        code, out, _ = run_cli(capsys, "table", "psi", "--x", "1:1:1")
        value_field = out.strip().splitlines()[1].split(",")[1]
        assert len(value_field.replace("-", "").replace(".", "")) >= 16
