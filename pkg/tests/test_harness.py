import json
from fractions import Fraction

import pytest

from posetdyn.families import make, rectangle, root_poset, trapezoid
from posetdyn.harness import (check_csp, check_ddeg_gf_pair,
                              check_doppelganger, check_mcde_pair,
                              check_orbit_matching, check_setvalued_pair,
                              check_tcde, frac_str, match_orbits, parse_frac,
                              run_campaign, verify_report)
from posetdyn.poset import Poset


class TestFractions:
    def test_roundtrip(self):
        for f in [Fraction(3, 7), Fraction(-2, 5), Fraction(4)]:
            assert parse_frac(frac_str(f)) == f


class TestPairChecks:
    def test_doppelganger_positive(self):
        rec = check_doppelganger(rectangle(2, 3), trapezoid(2, 5))
        assert rec["pass"]

    def test_doppelganger_negative(self):
        rec = check_doppelganger(rectangle(2, 2), rectangle(1, 4))
        assert not rec["pass"]

    def test_mcde_pair(self):
        rec = check_mcde_pair(rectangle(2, 3), trapezoid(2, 5))
        assert rec["pass"]
        assert rec["values"]["edge_density_P"] == "6/5"

    def test_ddeg_gf_pair(self):
        rec = check_ddeg_gf_pair(rectangle(2, 3), trapezoid(2, 5), 3)
        assert rec["pass"]
        bad = check_ddeg_gf_pair(
            Poset(range(6), [(0, 1), (1, 2), (3, 4), (4, 5)]),
            Poset(range(6), [(0, 1), (0, 2), (1, 3), (2, 4), (2, 5)]), 1)
        assert not bad["pass"]

    def test_setvalued_pair(self):
        rec = check_setvalued_pair(rectangle(2, 2), trapezoid(2, 4), 2)
        assert rec["pass"]

    def test_orbit_matching_levels(self):
        rec = check_orbit_matching(rectangle(2, 3), trapezoid(2, 5), "comb")
        assert rec["pass"] and rec["values"]["matching"]
        rec = check_orbit_matching(rectangle(2, 2), trapezoid(2, 4), "pp:2")
        assert rec["pass"]

    def test_orbit_matching_failure(self):
        rec = check_orbit_matching(rectangle(2, 2), rectangle(1, 4), "comb")
        assert not rec["pass"]


class TestMatcher:
    def test_exact_cover(self):
        m = match_orbits([(2, 1), (3, 5), (2, 1)], [(2, 1), (2, 1), (3, 5)])
        assert m is not None and len(m) == 3

    def test_no_match(self):
        assert match_orbits([(2, 1)], [(2, 2)]) is None
        assert match_orbits([(2, 1), (2, 1)], [(2, 1), (3, 1)]) is None

    def test_size_mismatch(self):
        assert match_orbits([(2, 1)], []) is None


class TestCSPCheck:
    def test_minuscule(self):
        rec = check_csp("rect:2x3")
        assert rec["pass"] and rec["values"]["N"] == 5

    def test_root(self):
        rec = check_csp("root:B2", "pp:2")
        assert rec["pass"] and rec["values"]["N"] == 8


class TestTcdeCheck:
    def test_positive(self):
        rec = check_tcde("root:I2(5)")
        assert rec["pass"] and rec["values"]["delta"] == "1/1"

    def test_expected_negative(self):
        rec = check_tcde("trap:2,5", expect_certificate=False)
        assert rec["pass"] and not rec["values"]["found"]


class TestCampaign:
    def test_smoke_suite_passes(self, tmp_path):
        out = tmp_path / "report.jsonl"
        rep = run_campaign("smoke", seed=5, out=str(out))
        assert rep.passed()
        assert out.exists()
        lines = out.read_text().strip().split("\n")
        assert len(lines) == len(rep.records) + 1  # summary line
        assert json.loads(lines[-1])["summary"]

    def test_verify_accepts_good_report(self, tmp_path):
        out = tmp_path / "report.jsonl"
        run_campaign("smoke", seed=5, out=str(out))
        assert verify_report(str(out)) == []

    def test_verify_catches_tampering(self, tmp_path):
        out = tmp_path / "report.jsonl"
        run_campaign("smoke", seed=5, out=str(out))
        lines = out.read_text().strip().split("\n")
        doctored = []
        for line in lines:
            rec = json.loads(line)
            if rec.get("check") == "ddeg_gf_pair" and rec["pass"]:
                key = next(iter(rec["values"]))
                rec["values"][key]["P"] = list(rec["values"][key]["P"]) + [1]
            doctored.append(json.dumps(rec, sort_keys=True))
        out.write_text("\n".join(doctored) + "\n")
        assert verify_report(str(out)) != []

    def test_reports_reproducible(self, tmp_path):
        a = run_campaign("smoke", seed=9)
        b = run_campaign("smoke", seed=9)
        strip = lambda rep: [json.loads(l) for l in rep.to_jsonl().splitlines()
                             if not json.loads(l).get("summary")]
        assert strip(a) == strip(b)

    def test_errors_recorded_not_raised(self):
        from posetdyn.harness import build_suite
        steps = [("boom", lambda: 1 / 0)]
        import posetdyn.harness as H
        orig = H.build_suite
        H.build_suite = lambda name, bounds=None: steps
        try:
            rep = run_campaign("whatever")
        finally:
            H.build_suite = orig
        assert not rep.passed()
        assert rep.records[0]["check"] == "error"

    def test_empty_campaign(self):
        import posetdyn.harness as H
        orig = H.build_suite
        H.build_suite = lambda name, bounds=None: []
        try:
            rep = run_campaign("empty")
        finally:
            H.build_suite = orig
        assert rep.passed() and rep.records == []

    def test_unknown_suite(self):
        from posetdyn.harness import build_suite
        with pytest.raises(ValueError):
            build_suite("nope")
