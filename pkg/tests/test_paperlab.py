from fractions import Fraction

import pytest

from semifactor.errors import DomainError, UsageError
from semifactor.paperlab import (
    ANCHORS,
    SuiteConfig,
    elasticity_sweep,
    expand_family,
    family_int,
    quad_explore,
    report_json,
    run_paper_suite,
    sweep_csv,
    sweep_jsonable,
)


class TestSuite:
    def test_default_all_pass_no_skips(self):
        results = run_paper_suite()
        assert len(results) == 9
        assert all(r.status == "pass" for r in results)

    def test_byte_deterministic(self):
        cfg = SuiteConfig()
        a = report_json(run_paper_suite(cfg), cfg)
        b = report_json(run_paper_suite(cfg), cfg)
        assert a == b
        assert a.encode() == b.encode()

    def test_only_filter(self):
        results = run_paper_suite(SuiteConfig(only=("lfs-witness",)))
        assert len(results) == 1
        assert results[0].check_id == "lfs-witness"
        assert results[0].status == "pass"

    def test_unknown_check_id(self):
        with pytest.raises(UsageError):
            run_paper_suite(SuiteConfig(only=("no-such-check",)))

    def test_degree_budget_skips_heavy_checks(self):
        results = {r.check_id: r for r in run_paper_suite(SuiteConfig(degree_limit=2))}
        assert results["hfs-witness"].status == "skipped"
        assert results["irreducible-family"].status == "skipped"
        assert results["hfs-witness"].details["reason"]
        # checks that never factor keep running
        assert results["membership-family"].status == "pass"
        assert results["quad-sqrt6-suite"].status == "pass"
        assert results["puiseux-demo"].status == "pass"

    def test_anchors_registered_and_nonempty(self):
        for r in run_paper_suite():
            assert r.paper_anchor
            assert r.paper_anchor == ANCHORS[r.check_id]

    def test_results_sorted_by_check_id(self):
        ids = [r.check_id for r in run_paper_suite()]
        assert ids == sorted(ids)


class TestFamily:
    def test_membership_boundary(self):
        assert family_int(3, 3).is_nonnegative
        assert not family_int(3, 2).is_nonnegative

    def test_expand_family_known_value(self):
        assert str(expand_family(2, 2)) == "x^4+3x^3+x^2+4"

    def test_expand_family_rejects_negative_cases(self):
        with pytest.raises(DomainError):
            expand_family(2, 1)

    def test_bad_parameters(self):
        with pytest.raises(UsageError):
            family_int(0, 1)


class TestSweep:
    def test_rows(self):
        rows = elasticity_sweep([2, 3], [1, 2, 3])
        assert len(rows) == 6
        by_nk = {(r["n"], r["k"]): r for r in rows}
        assert by_nk[(2, 1)]["elasticity"] == Fraction(3, 2)
        assert by_nk[(2, 2)]["elasticity"] == Fraction(4, 3)
        for (n, k), r in by_nk.items():
            assert r["elasticity"] == Fraction(n + k, k + 1)
            assert (r["min_len"], r["max_len"]) == (k + 1, k + n)

    def test_elasticity_climbs_toward_two_on_diagonal(self):
        values = [
            elasticity_sweep([n], [n])[0]["elasticity"] for n in (2, 3, 4)
        ]
        assert values == [Fraction(2 * n, n + 1) for n in (2, 3, 4)]
        assert values == sorted(values) and all(v < 2 for v in values)

    def test_csv_shape(self):
        text = sweep_csv(elasticity_sweep([2], [1, 2]))
        lines = text.strip().splitlines()
        assert lines[0] == "n,k,min_len,max_len,elasticity_num,elasticity_den"
        assert lines[1] == "2,1,2,3,3,2"
        assert lines[2] == "2,2,3,4,4,3"

    def test_jsonable(self):
        rows = sweep_jsonable(elasticity_sweep([2], [1]))
        assert rows == [
            {
                "n": 2,
                "k": 1,
                "min_len": 2,
                "max_len": 3,
                "elasticity": "3/2",
                "status": "ok",
            }
        ]

    def test_parameter_validation(self):
        with pytest.raises(UsageError):
            elasticity_sweep([1], [1])
        with pytest.raises(UsageError):
            elasticity_sweep([2], [0])

    def test_budget_marks_rows_skipped(self):
        rows = elasticity_sweep([2], [1], SuiteConfig(degree_limit=2))
        assert rows[0]["status"] == "skipped"
        assert "reason" in rows[0]


class TestQuadExplore:
    def test_six_at_bound_six(self):
        out = quad_explore(6, 6)
        assert {"value": "6", "Z": [["2", "3"], ["r", "r"]]} in out["multi_factorization"]

    def test_no_multi_factorizations_below_three(self):
        out = quad_explore(6, 2)
        assert out["multi_factorization"] == []

    def test_five(self):
        out = quad_explore(5, 5)
        assert "2" in out["atoms"]
        assert "r" in out["atoms"]

    def test_bound_validation(self):
        with pytest.raises(UsageError):
            quad_explore(6, 31)
        with pytest.raises(UsageError):
            quad_explore(6, 0)

    def test_square_radicand_rejected(self):
        with pytest.raises(UsageError):
            quad_explore(4, 5)
