"""CLI surface: parsing, exit codes, JSON schema, SVG and selftest determinism."""

import json
import math
from fractions import Fraction

import pytest

from polyclass.cli import main, parse_argv
from polyclass.report import SCHEMA, Report


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParsing:
    def test_negative_numbers_and_fractions(self):
        cmd, opts = parse_argv(
            ["classify", "--quartic", "3", "2", "-1", "-19/20", "--exact"])
        assert cmd == "classify"
        assert opts["quartic"] == ["3", "2", "-1", "-19/20"]
        assert opts["exact"] is True

    def test_unknown_flag_rejected(self, capsys):
        code, _, err = run(capsys, "classify", "--quintic", "1")
        assert code == 1 and "unknown argument" in err

    def test_missing_values(self, capsys):
        code, _, err = run(capsys, "classify", "--quartic", "1", "2")
        assert code == 1

    def test_help(self, capsys):
        code, _, err = run(capsys, "--help")
        assert code == 1 and "usage" in err


class TestClassifyCommand:
    def test_worked_example_json(self, capsys):
        code, out, _ = run(capsys, "classify", "--quartic", "3", "2", "-1", "-0.95",
                           "--json")
        assert code == 0
        data = json.loads(out)
        assert data["schema"] == SCHEMA
        assert data["classification"]["case"] == "xvii"
        assert data["classification"]["nature"] == "four_distinct_real"
        values = sorted(r["value"] for r in data["roots"])
        assert values == pytest.approx([-1.5379, -1.2787, -0.7928, 0.6094], abs=5e-5)
        assert data["roots_source"] == "oracle"

    def test_exact_boundary_exit_code(self, capsys):
        code, out, _ = run(capsys, "classify", "--quartic", "4", "6", "4", "1",
                           "--exact", "--json")
        assert code == 2
        data = json.loads(out)
        assert data["classification"]["nature"] == "quadruple_root"
        assert data["fragile"] is True
        assert data["arithmetic"] == "rational"
        assert data["roots"][0]["value"] == pytest.approx(-1.0)

    def test_exact_rejects_decimals(self, capsys):
        code, _, err = run(capsys, "classify", "--quartic", "1", "0", "0", "0.5",
                           "--exact")
        assert code == 1 and "exact mode" in err

    def test_cubic_text(self, capsys):
        code, out, _ = run(capsys, "classify", "--cubic", "0", "-1", "0")
        assert code == 0
        assert "three_distinct_real" in out
        assert f"{math.pi / 6:.6g}" in out

    def test_oracle_check_appends_agreement(self, capsys):
        code, out, _ = run(capsys, "classify", "--quartic", "3", "2", "-1", "-0.95",
                           "--json", "--oracle-check")
        data = json.loads(out)
        assert data["oracle"]["real_count_agrees"] is True
        assert data["oracle"]["multiplicities_agree"] is True
        assert data["classification"]["case"] == "xvii"

    def test_tolerance_flag(self, capsys):
        code, out, _ = run(capsys, "classify", "--quartic", "3", "2", "-1", "-0.9288",
                           "--tol", "1e-6", "--json")
        assert code == 2
        assert json.loads(out)["eps"] == 1e-6


class TestLocalizeCommand:
    def test_high_branch_example(self, capsys):
        code, out, _ = run(capsys, "localize", "--quartic", "-4", "5", "-1.75",
                           "-0.2", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["branch"] == "high_c"
        assert data["intervals"][2][1] == pytest.approx(1.7071, abs=5e-5)
        assert all(data["contained"])

    def test_two_real_is_an_error(self, capsys):
        code, out, err = run(capsys, "localize", "--quartic", "0", "0", "0", "-1",
                             "--json")
        assert code == 1
        assert json.loads(out)["error"]["type"] == "NotFourReal"


class TestSynthesizeCommand:
    def test_quadruple(self, capsys):
        code, out, _ = run(capsys, "synthesize", "--nature", "quadruple", "--a", "4",
                           "--json")
        assert code == 0
        data = json.loads(out)
        assert data["quartic"] == {"a": 4.0, "b": 6.0, "c": 4.0, "d": 1.0}
        assert data["round_trip_ok"] is True

    def test_chain_is_reported(self, capsys):
        code, out, _ = run(capsys, "synthesize", "--nature", "four-distinct",
                           "--a", "5", "--json", "--seed", "3",
                           "--strategy", "random")
        data = json.loads(out)
        assert data["admissible"]["b"]["intervals"] == [[None, 9.375]]
        assert data["classified"]["nature"] == "four_distinct_real"

    def test_bad_nature_name(self, capsys):
        code, _, err = run(capsys, "synthesize", "--nature", "bogus", "--a", "1")
        assert code == 1

    def test_unachievable_maps_to_error_object(self, capsys):
        code, out, _ = run(capsys, "synthesize", "--nature", "quadruple", "--a", "4",
                           "--b", "5", "--json")
        assert code == 1
        assert json.loads(out)["error"]["type"] == "Unachievable"


class TestQuinticCommand:
    def test_monotone_example(self, capsys):
        code, out, _ = run(capsys, "quintic", "--coeffs", "0", "0", "0", "1", "0",
                           "--json")
        assert code == 0
        data = json.loads(out)
        assert data["delta_tilde_r"] == 0
        assert data["sign_changes"] == 0
        assert data["delta5_at_t"] == 256

    def test_degenerate_pure_power(self, capsys):
        code, out, _ = run(capsys, "quintic", "--coeffs", "0", "0", "0", "0", "0",
                           "--json")
        assert code == 0
        assert json.loads(out)["degenerate_at_boundary"] is True


class TestRenderCommand:
    def test_cubic_svg(self, capsys, tmp_path):
        out_path = tmp_path / "tri.svg"
        code, out, _ = run(capsys, "render", "--cubic", "0", "-1", "0",
                           "--out", str(out_path))
        assert code == 0
        svg = out_path.read_text()
        assert svg.startswith("<svg")
        assert 'viewBox="0 0 800 600"' in svg
        assert svg.count("<polygon") == 1

    def test_quartic_svg_contains_root_ticks(self, capsys, tmp_path):
        out_path = tmp_path / "quart.svg"
        code, _, _ = run(capsys, "render", "--quartic", "3", "2", "-1", "-0.95",
                         "--out", str(out_path))
        assert code == 0
        svg = out_path.read_text()
        for label in ("lam_min", "lam_max", "x1", "x2", "x3", "x4"):
            assert label in svg

    def test_byte_identical_across_runs(self, capsys, tmp_path):
        p1, p2 = tmp_path / "a.svg", tmp_path / "b.svg"
        run(capsys, "render", "--quartic", "3", "2", "-1", "-0.95", "--out", str(p1))
        run(capsys, "render", "--quartic", "3", "2", "-1", "-0.95", "--out", str(p2))
        assert p1.read_bytes() == p2.read_bytes()

    def test_no_triangle_is_an_error(self, capsys, tmp_path):
        code, _, err = run(capsys, "render", "--cubic", "1", "1", "1",
                           "--out", str(tmp_path / "x.svg"))
        assert code == 1 and "NoTriangle" in err


class TestSelftest:
    def test_passes_and_is_deterministic(self, capsys):
        code1, out1, _ = run(capsys, "selftest")
        code2, out2, _ = run(capsys, "selftest")
        assert code1 == code2 == 0
        assert out1 == out2
        assert "PASS selftest" in out1

    def test_seed_changes_inputs_not_outcome(self, capsys):
        code, out, _ = run(capsys, "selftest", "--seed", "5")
        assert code == 0 and "PASS selftest" in out


class TestReportRoundTrip:
    def test_float_report(self, capsys):
        _, out, _ = run(capsys, "classify", "--quartic", "3", "2", "-1", "-0.95",
                        "--json")
        report = Report.from_json(out)
        assert Report.from_json(report.to_json()) == report

    def test_rational_report_preserves_fractions(self, capsys):
        _, out, _ = run(capsys, "classify", "--quartic", "3", "2", "-1", "-19/20",
                        "--exact", "--json")
        report = Report.from_json(out)
        assert report.data["input"]["coefficients"]["d"] == Fraction(-19, 20)
        assert Report.from_json(report.to_json()) == report

    def test_nested_structures_survive(self):
        report = Report(data={
            "schema": SCHEMA,
            "values": [Fraction(1, 3), 0.25, None, True, "text"],
            "nested": {"x": Fraction(-7, 2), "y": [1.5, Fraction(2, 5)]},
        })
        assert Report.from_json(report.to_json()) == report


class TestOracleCheckInvariance:
    def test_flag_only_appends_information(self, capsys):
        _, plain, _ = run(capsys, "classify", "--quartic", "1.3", "-2.1", "0.7",
                          "-0.4", "--json")
        _, checked, _ = run(capsys, "classify", "--quartic", "1.3", "-2.1", "0.7",
                            "-0.4", "--json", "--oracle-check")
        a, b = json.loads(plain), json.loads(checked)
        oracle = b.pop("oracle")
        assert a == b  # verdict and every other field unchanged
        assert oracle["real_count_agrees"] is True
