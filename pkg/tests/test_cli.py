import json

import numpy as np
import pytest

from skewfib.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert out.endswith("\n")
    return code, json.loads(out), err


@pytest.fixture
def radial_tsv(tmp_path):
    path = tmp_path / "degenerate.tsv"
    g = np.linspace(-2, 2, 9)
    lines = ["y1\ty2\tB1\tB2"]
    lines += [f"{a}\t{b}\t{a}\t{b}" for a in g for b in g]
    path.write_text("\n".join(lines) + "\n")
    return path


class TestRho:
    def test_values(self, capsys):
        assert run_json(capsys, "rho", "16")[1]["rho"] == 9
        # 240 = 2^4 * 15 gives b = 0, c = 1
        assert run_json(capsys, "rho", "240")[1]["rho"] == 9

    def test_zero(self, capsys):
        code, out, err = run(capsys, "rho", "0")
        assert code == 2 and "error" in err


class TestTable:
    def test_b_row(self, capsys):
        code, data, _ = run_json(capsys, "table", "--max-p", "4")
        assert code == 0
        assert [r["b_p"] for r in data["rows"]] == [2, 24, 24, 2880]
        assert all(r["b_p_matches_reference"] for r in data["rows"])

    def test_c_only(self, capsys):
        _, data, _ = run_json(capsys, "table", "--max-p", "3", "--fields", "c")
        assert [r["c_p"] for r in data["rows"]] == [24, 1440, 362880]
        assert "a_p" not in data["rows"][0]

    def test_first_column(self, capsys):
        _, data, _ = run_json(capsys, "table", "--max-p", "1")
        row = data["rows"][0]
        assert (row["a_p"], row["b_p"], row["c_p"]) == (2, 2, 24)

    def test_budget_skips(self, capsys):
        code, data, _ = run_json(capsys, "table", "--max-p", "2", "--budget-seconds", "0")
        assert code == 0
        assert data["rows"][1]["c_p"] == "skipped"


class TestAdmissible:
    def test_c13(self, capsys):
        code, data, _ = run_json(capsys, "admissible", "C", "1", "3")
        assert code == 0 and data["verdict"] == "possible"

    def test_h14(self, capsys):
        _, data, _ = run_json(capsys, "admissible", "H", "1", "4")
        assert data["verdict"] == "ruled_out"

    def test_r37(self, capsys):
        _, data, _ = run_json(capsys, "admissible", "R", "3", "7")
        assert data["verdict"] == "possible"

    def test_implications(self, capsys):
        _, data, _ = run_json(capsys, "admissible", "C", "2", "26", "--implications")
        assert data["verdict"] == "possible"
        assert [(w["field"], w["p"], w["n"], w["verdict"]) for w in data["implications"]] == [
            ("R", 5, 53, "possible")]

    def test_n_le_p(self, capsys):
        assert run(capsys, "admissible", "C", "3", "3")[0] == 2


class TestVerify:
    def test_hopf(self, capsys):
        code, data, _ = run_json(capsys, "verify", "hopf-neg", "--pairs", "1000", "--seed", "7")
        assert code == 0 and data["status"] == "pass"
        skew = data["checks"][0]
        assert skew["check"] == "skew_pairs" and skew["orientation"] == -1

    def test_scaled(self, capsys):
        code, data, _ = run_json(capsys, "verify", "scaled:2", "--pairs", "100", "--seed", "7")
        assert code == 0 and data["status"] == "pass"

    def test_radial_file(self, capsys, radial_tsv):
        code, data, err = run_json(capsys, "verify", f"file:{radial_tsv}")
        assert code == 1 and data["status"] == "fail"
        kinds = {c["kind"] for c in data["checks"] if c["status"] == "fail"}
        assert "kernel-degeneracy" in kinds
        bad = next(c for c in data["checks"] if c["kind"] == "kernel-degeneracy")
        assert bad["witness"] is not None
        assert "kernel-degeneracy" in err

    def test_deterministic(self, capsys):
        a = run(capsys, "verify", "hopf-pos", "--pairs", "200", "--seed", "3")[1]
        b = run(capsys, "verify", "hopf-pos", "--pairs", "200", "--seed", "3")[1]
        assert a == b

    def test_bad_spec(self, capsys):
        assert run(capsys, "verify", "nonsense")[0] == 2
        assert run(capsys, "verify", "file:/no/such/file.tsv")[0] == 2


class TestProject:
    def test_grid(self, capsys):
        code, data, _ = run_json(capsys, "project", "hopf-neg", "--grid", "3")
        assert code == 0
        assert data["lines"] == 9 and data["pairwise_skew"]
        row = next(r for r in data["lines_data"] if r["y"] == [0.0, 0.0])
        assert row["u"] == [0.0, 0.0, 1.0] and row["v"] == [0.0, 0.0, 0.0]
        for c in data["circles"]:
            assert abs(np.dot(c["e"], c["f"])) <= 1e-12

    def test_files(self, capsys, tmp_path):
        out = tmp_path / "lines.json"
        assert run(capsys, "project", "hopf-neg", "--grid", "2", "--out", str(out))[0] == 0
        assert len(json.loads(out.read_text())["lines"]) == 4
        csv = tmp_path / "lines.csv"
        assert run(capsys, "project", "hopf-neg", "--grid", "2", "--out", str(csv))[0] == 0
        assert len(csv.read_text().splitlines()) == 5
        assert (tmp_path / "lines_circles.csv").exists()

    def test_unwritable(self, capsys):
        assert run(capsys, "project", "hopf-neg", "--out", "/no/such/dir/x.json")[0] == 2
