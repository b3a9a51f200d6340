import json

from chainex.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStats:
    def test_text(self, capsys):
        code, out, _ = call(capsys, "stats", "[5,3,2,2,1]", "--r", "2")
        assert code == 0
        assert "mex=6" in out
        assert "class=P0" in out

    def test_json(self, capsys):
        code, out, _ = call(capsys, "stats", "[7]", "--r", "2", "--format", "json")
        assert code == 0
        record = json.loads(out)
        assert record["schema"] == 1
        assert record["maex"] == 6
        assert record["class"] == "P+"
        assert record["Omega"] == 2

    def test_empty_partition(self, capsys):
        code, out, _ = call(capsys, "stats", "[]", "--r", "3")
        assert code == 0
        assert "mex=1" in out
        assert "maex=0" in out

    def test_unsorted_literal_needs_flag(self, capsys):
        code, _, err = call(capsys, "stats", "[1,3]", "--r", "2")
        assert code == 2
        assert "error:" in err
        code, out, _ = call(capsys, "stats", "[1,3]", "--r", "2", "--sort")
        assert code == 0


class TestEnumerate:
    def test_count_line(self, capsys):
        code, out, _ = call(capsys, "enumerate", "--n", "5")
        assert code == 0
        assert out.strip().splitlines()[-1] == "count=7"

    def test_filters(self, capsys):
        code, out, _ = call(capsys, "enumerate", "--n", "6", "--strict", "2",
                            "--format", "json")
        assert code == 0
        blob = json.loads(out)
        assert blob["count"] == 4
        assert "[3,2,1]" in blob["partitions"]

    def test_gap_class_requires_r(self, capsys):
        code, _, err = call(capsys, "enumerate", "--n", "4", "--gap-class", "bounded")
        assert code == 2
        code, out, _ = call(capsys, "enumerate", "--n", "4", "--gap-class",
                            "bounded", "--r", "1", "--format", "json")
        assert code == 0
        assert json.loads(out)["partitions"] == ["[2,1,1]", "[1,1,1,1]"]


class TestSeries:
    def test_named_builder(self, capsys):
        code, out, _ = call(capsys, "series", "sigma-mex", "--order", "5",
                            "--format", "csv")
        assert code == 0
        assert out.strip().splitlines()[:3] == ["n,coeff", "0,1", "1,2"]

    def test_j_parts_worked_example(self, capsys):
        code, out, _ = call(capsys, "series", "j-parts", "--r", "3", "--j", "1",
                            "--order", "7", "--format", "json")
        assert code == 0
        blob = json.loads(out)
        assert blob["coeffs"][7] == "5"

    def test_missing_required_flags(self, capsys):
        code, _, err = call(capsys, "series", "chain-mex")
        assert code == 2
        assert "requires --r" in err
        code, _, err = call(capsys, "series", "j-parts", "--r", "2")
        assert code == 2
        assert "requires --j" in err

    def test_unknown_name(self, capsys):
        code, _, err = call(capsys, "series", "zeta")
        assert code == 2
        assert "unknown series" in err


class TestBijection:
    def test_glaisher(self, capsys):
        code, out, _ = call(capsys, "bijection", "glaisher",
                            "--lambda", "[2,2,2,1]", "--r", "3")
        assert code == 0
        assert json.loads(out)["output"] == "[6,1]"

    def test_gamma_trace(self, capsys):
        code, out, _ = call(capsys, "bijection", "gamma", "--lambda", "[5,3,1]",
                            "--i", "2", "--r", "2", "--trace")
        assert code == 0
        blob = json.loads(out)
        assert blob["case"] == "case1"
        assert blob["output"] == {"alpha": "[3,1,1]", "beta": "[2,2]"}
        assert blob["intermediate"]["conjugate"] == "[3,2,2,1,1]"

    def test_gamma_without_trace_is_compact(self, capsys):
        code, out, _ = call(capsys, "bijection", "gamma", "--lambda", "[5,3,1]",
                            "--i", "2", "--r", "2")
        assert code == 0
        assert set(json.loads(out)) == {"input", "output"}

    def test_gamma_star_colored_output(self, capsys):
        code, out, _ = call(capsys, "bijection", "gamma-star",
                            "--lambda", "[2,1]", "--i", "4", "--r", "3")
        assert code == 0
        assert json.loads(out)["output"]["beta"] == {"empty_color": 2}

    def test_delta(self, capsys):
        code, out, _ = call(capsys, "bijection", "delta", "--lambda", "[6,1]",
                            "--i", "1", "--r", "2")
        assert code == 0
        assert "output" in json.loads(out)

    def test_domain_violation_exits_2(self, capsys):
        code, _, err = call(capsys, "bijection", "glaisher",
                            "--lambda", "[3,1]", "--r", "3")
        assert code == 2
        assert "error:" in err
        code, _, err = call(capsys, "bijection", "gamma", "--lambda", "[1]",
                            "--i", "99", "--r", "2")
        assert code == 2

    def test_missing_i(self, capsys):
        code, _, err = call(capsys, "bijection", "gamma", "--lambda", "[1]",
                            "--r", "2")
        assert code == 2
        assert "requires --i" in err


class TestVerify:
    def test_theorem_pass(self, capsys):
        code, out, _ = call(capsys, "verify", "thm-1.4", "--n", "10")
        assert code == 0
        assert "PASS" in out

    def test_theorem_with_ranges_json(self, capsys):
        code, out, _ = call(capsys, "verify", "thm-1.6", "--r", "1..2",
                            "--n", "8", "--format", "json")
        assert code == 0
        blob = json.loads(out)
        assert blob["passed"] is True
        assert {row["r"] for row in blob["rows"]} == {1, 2}

    def test_family_theorem_with_j(self, capsys):
        code, out, _ = call(capsys, "verify", "thm-1.10", "--r", "3", "--j", "1",
                            "--n", "7")
        assert code == 0
        assert "PASS" in out

    def test_bijection_verify(self, capsys):
        code, out, _ = call(capsys, "verify", "gamma", "--r", "2", "--n", "6")
        assert code == 0
        assert "PASS" in out

    def test_bijection_requires_r(self, capsys):
        code, _, err = call(capsys, "verify", "gamma", "--n", "6")
        assert code == 2
        assert "requires --r" in err

    def test_unknown_id(self, capsys):
        code, _, err = call(capsys, "verify", "thm-42")
        assert code == 2
        assert "unknown verification id" in err

    def test_csv_output_file(self, capsys, tmp_path):
        target = tmp_path / "report.csv"
        code, out, _ = call(capsys, "verify", "thm-1.8", "--n", "6",
                            "--format", "csv", "--out", str(target))
        assert code == 0
        assert out == ""
        lines = target.read_text().strip().splitlines()
        assert lines[0] == "theorem,r,j,n,lhs,rhs,match"
        assert len(lines) == 8


class TestParser:
    def test_missing_subcommand(self, capsys):
        assert call(capsys, )[0] == 2

    def test_bad_flag(self, capsys):
        assert call(capsys, "stats", "[1]", "--r", "x")[0] == 2
