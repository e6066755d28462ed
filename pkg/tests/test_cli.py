"""CLI behavior: output formats, determinism, and exit codes."""

import json

import pytest

from ccyclic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExtremal:
    def test_tricyclic_text(self, capsys):
        code, out, _ = run(capsys, "extremal", "--n", "8", "--c", "3")
        assert code == 0
        assert out == (
            "n=8 c=3 degree-total=20\n"
            "maximal 1: [7, 4, 2^3, 1^3]\n"
            "maximal 2: [7, 3^3, 1^4]\n"
            "maximals: pairwise incomparable under majorization\n"
            "minimal: [3^4, 2^4]\n"
        )

    def test_triangle(self, capsys):
        code, out, _ = run(capsys, "extremal", "--n", "3", "--c", "1")
        assert code == 0
        assert "maximal 1: [2^3]" in out
        assert "minimal: [2^3]" in out

    def test_hexacyclic_n7(self, capsys):
        code, out, _ = run(capsys, "extremal", "--n", "7", "--c", "6")
        assert code == 0
        assert "maximal 1: [6^2, 3^2, 2^3]" in out
        assert "maximal 2: [6, 5, 4, 3^2, 2, 1]" in out
        assert "maximal 3: [6, 4^4, 1^2]" in out
        assert "minimal: [4^3, 3^4]" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "extremal", "--n", "5", "--c", "4", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["maximals"] == [[4, 4, 3, 3, 2]]
        assert doc["minimal"] == [4, 3, 3, 3, 3]

    def test_below_min_order_fails(self, capsys):
        code, _, err = run(capsys, "extremal", "--n", "3", "--c", "3")
        assert code == 1
        assert "error" in err


class TestBounds:
    def test_unicyclic_inverse_degree(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "--n", "10", "--c", "1", "--index", "inverse-degree"
        )
        assert code == 0
        assert "lower: 5 (5) at [2^10]" in out
        assert "upper: 73/9 (8.11111111111) at [9, 2^2, 1^7]" in out

    def test_csv_range(self, capsys):
        code, out, _ = run(
            capsys,
            "bounds", "--n", "10", "--alpha", "2", "--c", "1..6", "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 7  # header + six rows
        assert lines[1].startswith("10,1,general-zagreb,2,40,40,96,96,")

    def test_refined(self, capsys):
        code, out, _ = run(
            capsys,
            "bounds", "--n", "8", "--c", "3", "--index", "inverse-degree", "--refined",
        )
        assert code == 0
        assert "refined upper" in out
        assert "137/28 (4.89285714286)" in out

    def test_verify_appends_verdict(self, capsys):
        code, out, _ = run(
            capsys,
            "bounds", "--n", "8", "--c", "3", "--index", "inverse-degree", "--verify",
        )
        assert code == 0
        assert "verified: exact-match" in out

    def test_verify_cap_exit(self, capsys):
        code, out, _ = run(
            capsys,
            "bounds", "--n", "14", "--c", "1", "--index", "inverse-degree",
            "--verify", "--cap", "12",
        )
        assert code == 3
        assert "verified: skipped" in out

    def test_alpha_required_for_general_zagreb(self, capsys):
        code, _, err = run(capsys, "bounds", "--n", "8", "--c", "2")
        assert code == 1
        assert "--alpha" in err

    def test_excluded_alpha(self, capsys):
        code, _, err = run(capsys, "bounds", "--n", "8", "--c", "2", "--alpha", "1")
        assert code == 1

    def test_mult_zagreb_log(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "--n", "8", "--c", "2", "--index", "mult-zagreb-log"
        )
        assert code == 0
        assert "lower:" in out and "upper:" in out

    def test_json_format(self, capsys):
        code, out, _ = run(
            capsys,
            "bounds", "--n", "10", "--c", "1..2", "--alpha", "2", "--format", "json",
        )
        assert code == 0
        docs = json.loads(out)
        assert [d["c"] for d in docs] == [1, 2]
        assert docs[0]["lower_exact"] == "40"


class TestVerify:
    def test_small_grid_all_match(self, capsys):
        code, out, _ = run(capsys, "verify", "--n-max", "6", "--c", "0..6")
        assert code == 0
        assert "0 mismatched" in out
        assert "skipped=no" in out

    def test_equivalence_only(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--n-max", "9", "--c", "0..6", "--equivalence-only"
        )
        assert code == 0
        assert "equivalence" in out
        assert "bounds" not in out

    def test_conjecture_c7(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--n", "10", "--c", "7", "--conjecture"
        )
        assert code == 0
        assert "CONJECTURE c=7 n=10" in out
        assert "holds" in out

    def test_c7_without_conjecture_flag_fails(self, capsys):
        code, _, err = run(capsys, "verify", "--n", "10", "--c", "7")
        assert code == 1
        assert "--conjecture" in err

    def test_cap_exit_code(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--n", "13", "--c", "1", "--cap", "12"
        )
        assert code == 3
        assert "skipped" in out

    def test_needs_an_order(self, capsys):
        code, _, err = run(capsys, "verify")
        assert code == 1


class TestRealize:
    def test_check_c_success(self, capsys):
        code, out, _ = run(
            capsys, "realize", "--seq", "7,3,3,3,1,1,1,1", "--check-c", "3"
        )
        assert code == 0
        assert out.startswith("graph G {")

    def test_triangle_document(self, capsys):
        code, out, _ = run(capsys, "realize", "--seq", "2,2,2", "--label", "")
        assert code == 0
        assert out == "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n"

    def test_non_graphical_exit(self, capsys):
        code, _, err = run(capsys, "realize", "--seq", "3,1,1")
        assert code == 1
        assert "not graphical" in err

    def test_check_c_mismatch_exit(self, capsys):
        code, _, err = run(
            capsys, "realize", "--seq", "2,2,2", "--check-c", "2"
        )
        assert code == 2


class TestDeterminismAndOutput:
    def test_byte_identical_reruns(self, capsys):
        _, first, _ = run(capsys, "bounds", "--n", "9", "--c", "1..6", "--alpha", "-1")
        _, second, _ = run(capsys, "bounds", "--n", "9", "--c", "1..6", "--alpha", "-1")
        assert first == second

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "report.csv"
        code, out, _ = run(
            capsys,
            "bounds", "--n", "8", "--c", "2", "--alpha", "2",
            "--format", "csv", "--output", str(target),
        )
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("n,c,index,alpha,")

    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 1
