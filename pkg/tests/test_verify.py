import json

import pytest

from chainex.partition import chain_mex, partitions
from chainex.verify import (
    BIJECTIONS,
    FAMILIES,
    STATISTICS,
    THEOREMS,
    VerificationReport,
    certify_bijection,
    check_theorem,
    count_family,
    report_to_format,
    sigma_stat,
)


class TestBruteForceAccumulators:
    def test_sigma_mex_small_values(self):
        # n = 3: partitions (3), (2,1), (1,1,1) have classic mex 1, 3, 2
        assert sigma_stat(3, 1, "mex") == 6
        assert sigma_stat(0, 1, "mex") == 1

    def test_sigma_consistency(self):
        for n in range(10):
            for r in (1, 2):
                assert sigma_stat(n, r, "mex+r-1") == \
                    sigma_stat(n, r, "mex") + (r - 1) * sum(1 for _ in partitions(n))

    def test_sigma_rejects_unknown(self):
        with pytest.raises(ValueError):
            sigma_stat(3, 1, "median")

    def test_count_family_worked_example(self):
        # five partitions of 7 sit off the gap class with one part above
        # the 2-chain maex
        assert count_family(7, 3, 1, "above-maex") == 5
        assert count_family(7, 3, 1, "top-multiple") == 5
        assert count_family(7, 3, 1, "smallest-repeating") == 5

    def test_count_family_validation(self):
        with pytest.raises(ValueError):
            count_family(5, 2, 1, "largest-part")
        with pytest.raises(ValueError):
            count_family(5, 1, 1, "multiples")
        with pytest.raises(ValueError):
            count_family(5, 2, 0, "top-multiple")

    def test_registries(self):
        assert len(STATISTICS) == 6
        assert len(FAMILIES) == 6
        assert len(THEOREMS) == 9
        assert len(BIJECTIONS) == 6


class TestReport:
    def test_pass_fail(self):
        rep = VerificationReport("demo")
        rep.add(2, None, 5, 7, 7)
        assert rep.passed
        rep.add(2, None, 6, 7, 8, "bad")
        assert not rep.passed

    def test_to_text_lists_mismatches(self):
        rep = VerificationReport("demo")
        rep.add(2, 1, 6, 7, 8, "bad")
        text = rep.to_text()
        assert "FAIL" in text
        assert "lhs=7 rhs=8" in text

    def test_json_round_trips_and_uses_string_ints(self):
        rep = VerificationReport("demo")
        rep.add(2, None, 5, 10 ** 30, 10 ** 30)
        blob = json.loads(report_to_format(rep, "json"))
        assert blob["schema"] == 1
        assert blob["passed"] is True
        assert blob["rows"][0]["lhs"] == str(10 ** 30)

    def test_csv_header(self):
        rep = VerificationReport("demo")
        rep.add(2, None, 5, 1, 1, "extra")
        csv_text = report_to_format(rep, "csv")
        lines = csv_text.strip().splitlines()
        assert lines[0] == "theorem,r,j,n,lhs,rhs,match"
        assert lines[1].startswith("demo/extra,2,,5,1,1,True")


class TestTheoremHarness:
    def test_unknown_theorem(self):
        with pytest.raises(ValueError):
            check_theorem("thm-9.9")

    def test_small_runs_pass(self):
        assert check_theorem("thm-1.4", n_max=12).passed
        assert check_theorem("thm-1.6", r_values=[1, 2], n_max=10).passed
        assert check_theorem("thm-1.7", r_values=[1, 2], n_max=10).passed
        assert check_theorem("thm-1.8", n_max=12).passed
        assert check_theorem("thm-1.11", r_values=[2], n_max=10, order=20).passed
        assert check_theorem("thm-1.5", r_values=[2], n_max=10, j_values=[0, 1]).passed
        assert check_theorem("thm-1.10", r_values=[2], n_max=10, j_values=[1, 2]).passed
        assert check_theorem("q-binomial", order=25).passed
        assert check_theorem("maex-distribution", r_values=[1], n_max=10).passed

    def test_rows_carry_exact_values(self):
        rep = check_theorem("thm-1.4", n_max=6)
        by_n = {row.n: row for row in rep.rows}
        assert by_n[3].lhs == 6
        assert by_n[3].rhs == 6

    def test_wall_time_recorded(self):
        rep = check_theorem("thm-1.4", n_max=5)
        assert rep.wall_time >= 0.0


class TestBijectionCertification:
    def test_unknown_bijection(self):
        with pytest.raises(ValueError):
            certify_bijection("identity", 2, 4)

    def test_small_certifications_pass(self):
        assert certify_bijection("glaisher", 2, 10).passed
        assert certify_bijection("multiples-repeats", 3, 10).passed
        assert certify_bijection("top-multiple", 2, 10).passed
        assert certify_bijection("gamma", 2, 8).passed
        assert certify_bijection("gamma-star", 2, 8).passed
        assert certify_bijection("delta", 2, 8).passed

    def test_cardinality_rows_match_known_counts(self):
        # weight-6 domain of the colored map: sum over partitions of
        # chain_mex + r - 1
        rep = certify_bijection("gamma-star", 2, 6)
        card = [row for row in rep.rows if row.label == "cardinality" and row.n == 6]
        expected = sum(chain_mex(lam, 2) + 1 for lam in partitions(6))
        assert card[0].lhs == expected == card[0].rhs
