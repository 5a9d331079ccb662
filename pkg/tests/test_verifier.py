"""Case-analysis verifier: published tables, tail certificates, sweeps,
Catlin comparison, report rendering."""

import json
from fractions import Fraction

import pytest

from albertson import (
    REFERENCE_TABLES,
    TAIL_ANCHORS,
    CriticalParams,
    ReportFormat,
    RuleId,
    Verdict,
    catlin_check,
    compare_with_reference,
    cr_nmp,
    ks_edges,
    lemma357_check,
    parse_report,
    remark2_check,
    render_report,
    small_n_note,
    table_rule_id,
    tail_certificate,
    verify_albertson,
    zarankiewicz,
)

# frozen expected case rows: r -> [(n, e, linear, p, prob)]
EXPECTED_ROWS = {
    13: [
        (18, 128, 238, Fraction(719, 1000), 288),
        (19, 135, 249, Fraction(732, 1000), 296),
        (20, 141, 255, Fraction(751, 1000), 298),
        (21, 146, 258, Fraction(774, 1000), 294),
    ],
    14: [
        (19, 146, 293, Fraction(659, 1000), 388),
        (20, 154, 307, Fraction(670, 1000), 402),
        (21, 161, 318, Fraction(684, 1000), 407),
        (22, 167, 325, Fraction(702, 1000), 406),
        (23, 172, 328, Fraction(723, 1000), 398),
        (24, 176, 327, Fraction(747, 1000), 384),
        (25, 179, 322, Fraction(775, 1000), 366),
        (26, 181, 312, Fraction(807, 1000), 344),
    ],
    15: [
        (20, 165, 351, Fraction(610, 1000), 510),
        (21, 174, 370, Fraction(617, 1000), 531),
        (22, 182, 385, Fraction(628, 1000), 542),
        (23, 189, 396, Fraction(642, 1000), 545),
        (24, 195, 403, Fraction(659, 1000), 539),
        (25, 200, 406, Fraction(678, 1000), 526),
        (26, 204, 404, Fraction(700, 1000), 508),
        (27, 207, 399, Fraction(725, 1000), 484),
    ],
    16: [
        (21, 185, 450, Fraction(567, 1000), 657),
        (22, 195, 475, Fraction(573, 1000), 687),
        (23, 204, 495, Fraction(581, 1000), 706),
        (24, 212, 510, Fraction(592, 1000), 714),
        (25, 219, 520, Fraction(605, 1000), 712),
        (26, 225, 525, Fraction(621, 1000), 701),
        (27, 230, 525, Fraction(639, 1000), 683),
        (28, 234, 520, Fraction(659, 1000), 658),
        (29, 237, 510, Fraction(681, 1000), 628),
        (30, 239, 495, Fraction(706, 1000), 593),
        (31, 246, 505, Fraction(713, 1000), 601),
    ],
    17: [
        (22, 206, 530, Fraction(530, 1000), 832),
        (23, 217, 560, Fraction(534, 1000), 874),
        (24, 227, 585, Fraction(541, 1000), 902),
        (25, 236, 605, Fraction(550, 1000), 917),
        (26, 244, 620, Fraction(560, 1000), 920),
        (27, 251, 630, Fraction(573, 1000), 913),
        (28, 257, 635, Fraction(588, 1000), 897),
        (29, 262, 635, Fraction(604, 1000), 872),
        (30, 266, 630, Fraction(622, 1000), 840),
        (31, 269, 620, Fraction(643, 1000), 802),
        (32, 271, 605, Fraction(665, 1000), 759),
        (33, 278, 615, Fraction(672, 1000), 765),
        (34, 286, 630, Fraction(677, 1000), 779),
    ],
}


class TestCaseRows:
    @pytest.mark.parametrize("r", [13, 14, 15, 16, 17])
    def test_rows_match_frozen_values(self, r):
        rep = verify_albertson(r)
        got = [(c.n, c.m_min, c.linear_bound, c.p, c.prob_bound)
               for c in rep.rows]
        assert got == EXPECTED_ROWS[r]

    @pytest.mark.parametrize("r", [13, 14, 15, 16, 17])
    def test_targets_and_satisfied(self, r):
        rep = verify_albertson(r)
        z = zarankiewicz(r)
        for row in rep.rows:
            assert row.target == z
            assert row.satisfied == (max(row.linear_bound, row.prob_bound) >= z)

    @pytest.mark.parametrize("r", [13, 14, 15, 16, 17])
    def test_prob_never_much_below_plain_eq4(self, r):
        # optimizing p and snapping to the grid never costs more than one
        # crossing relative to taking p = 1 (which is plain Eq4)
        for row in verify_albertson(r).rows:
            plain = cr_nmp(row.n, row.m_min, Fraction(1)).value
            assert row.prob_bound >= plain - 1

    def test_reference_reproduction_single_flag(self):
        """Published tables are reproduced exactly except one p entry whose
        source value came from a float optimizer."""
        all_flags = []
        for r in (13, 14, 15, 16, 17):
            all_flags += [(r, f) for f in
                          compare_with_reference(verify_albertson(r))]
        assert len(all_flags) == 1
        r, flag = all_flags[0]
        assert r == 15
        assert "n=22" in flag and "0.628" in flag and "0.623" in flag

    def test_reference_table_shape(self):
        assert sorted(REFERENCE_TABLES) == [13, 14, 15, 16, 17]
        assert [len(REFERENCE_TABLES[r]) for r in (13, 14, 15, 16, 17)] == \
            [4, 8, 8, 11, 13]


class TestVerdicts:
    @pytest.mark.parametrize("r", [13, 14, 15, 16])
    def test_verified(self, r):
        rep = verify_albertson(r)
        assert rep.verdict is Verdict.VERIFIED
        assert rep.gaps == ()

    def test_r17_gaps(self):
        rep = verify_albertson(17)
        assert rep.verdict is Verdict.GAPS_REMAIN
        assert rep.gaps == (33, 34)

    def test_r17_join_refinement(self):
        rep = verify_albertson(17)
        assert len(rep.refined_rows) == 1
        ref = rep.refined_rows[0]
        assert (ref.n, ref.m_min) == (32, 279)
        assert ref.prob_bound == 834
        assert ref.satisfied
        # refinement rescues n=32, so 32 is not a gap
        assert 32 not in rep.gaps

    def test_refinement_only_when_needed(self):
        # r=14: n = 2r-2 = 26 is already satisfied, so no refined row
        assert verify_albertson(14).refined_rows == ()

    @pytest.mark.parametrize("r", [10, 11, 12])
    def test_small_r_verified_without_rows(self, r):
        rep = verify_albertson(r)
        assert rep.verdict is Verdict.VERIFIED
        assert rep.rows == ()
        assert rep.tail.valid and rep.tail.n0 == r + 5

    @pytest.mark.parametrize("r", [5, 6, 7, 8, 9])
    def test_tiny_r_has_no_certificate(self, r):
        rep = verify_albertson(r)
        assert rep.verdict is Verdict.GAPS_REMAIN
        assert not rep.tail.valid
        assert rep.rows[0].n == r + 5
        assert rep.rows[-1].n == 4 * r - 1

    @pytest.mark.parametrize("r", list(range(18, 31)))
    def test_large_r_tail_is_valid(self, r):
        assert verify_albertson(r).tail.valid

    @pytest.mark.parametrize("r", [4, 31])
    def test_range_errors(self, r):
        with pytest.raises(ValueError):
            verify_albertson(r)

    def test_verdict_matches_gap_and_tail(self):
        for r in range(5, 31):
            rep = verify_albertson(r)
            verified = not rep.gaps and rep.tail.valid
            assert (rep.verdict is Verdict.VERIFIED) == verified


class TestTableRule:
    def test_switch_at_16(self):
        assert table_rule_id(13) is RuleId.EQ4
        assert table_rule_id(15) is RuleId.EQ4
        assert table_rule_id(16) is RuleId.EQ5
        assert table_rule_id(17) is RuleId.EQ5


class TestTailCertificates:
    def test_published_anchors(self):
        assert TAIL_ANCHORS == {
            13: (Fraction(1), 22),
            14: (Fraction(1), 27),
            15: (Fraction(764, 1000), 28),
            16: (Fraction(72, 100), 32),
            17: (Fraction(681, 1000), 35),
        }

    @pytest.mark.parametrize("r", [13, 14, 15, 16, 17])
    def test_anchor_certificates_valid(self, r):
        p, n0 = TAIL_ANCHORS[r]
        cert = tail_certificate(r, p, n0)
        assert cert.valid
        assert cert.anchor_value >= zarankiewicz(r) or \
            cert.anchor_value > zarankiewicz(r) - 1  # ceil covers the target

    def test_r13_anchor_value(self):
        cert = tail_certificate(13, Fraction(1), 22)
        assert cert.slope == Fraction(41, 6)
        assert cert.anchor_value == Fraction(674, 3)  # 224.67 vs target 225

    def test_r17_slope_intercept(self):
        cert = tail_certificate(17, Fraction(681, 1000), 35)
        assert abs(cert.slope - Fraction(1464, 100)) < Fraction(1, 100)
        assert abs(cert.intercept - Fraction(28038, 100)) < Fraction(1, 100)

    def test_bad_p_fails_validation(self):
        assert not tail_certificate(13, Fraction(999, 1000), 18).valid

    def test_rejects_small_n0(self):
        with pytest.raises(ValueError):
            tail_certificate(13, Fraction(1), 17)

    def test_rejects_float_p(self):
        with pytest.raises(TypeError):
            tail_certificate(13, 0.75, 22)

    @pytest.mark.parametrize("p", [Fraction(0), Fraction(11, 10)])
    def test_rejects_out_of_range_p(self, p):
        with pytest.raises(ValueError):
            tail_certificate(13, p, 22)

    @pytest.mark.parametrize("r", [13, 14, 15, 16, 17])
    @pytest.mark.parametrize("offset", [1, 7, 50])
    def test_soundness_beyond_anchor(self, r, offset):
        """A valid certificate really does cover every larger order: spot-check
        that the probabilistic bound at the KS edge count clears the target."""
        p, n0 = TAIL_ANCHORS[r]
        n = n0 + offset
        m = ks_edges(CriticalParams(r, n)).m_min
        assert cr_nmp(n, m, p).value >= zarankiewicz(r)


class TestSmallNNote:
    def test_mentions_threshold(self):
        note = small_n_note(13)
        assert "17" in note  # r + 4
        assert "topological" in note


class TestLemma357:
    def test_r17(self):
        s = lemma357_check(17)
        assert s.ok and bool(s)
        assert (s.n_lo, s.n_hi) == (61, 68)
        assert s.min_margin == Fraction(291384647, 1624350)
        assert s.argmin_n == 61

    def test_r20(self):
        s = lemma357_check(20)
        assert s.ok
        assert (s.n_lo, s.n_hi) == (72, 80)
        assert s.min_margin == Fraction(19503087, 61880)

    def test_r40(self):
        s = lemma357_check(40)
        assert s.ok
        assert (s.n_lo, s.n_hi) == (143, 160)

    def test_rejects_small_r(self):
        with pytest.raises(ValueError):
            lemma357_check(16)


class TestRemark2:
    @pytest.mark.parametrize("r,lo,hi", [(14, 14, 50), (16, 16, 58), (20, 20, 72)])
    def test_holds(self, r, lo, hi):
        s = remark2_check(r)
        assert s.ok
        assert (s.n_lo, s.n_hi) == (lo, hi)
        assert s.min_margin > 0
        assert s.argmin_n == r

    def test_rejects_small_r(self):
        with pytest.raises(ValueError):
            remark2_check(13)


class TestCatlin:
    def test_asymptotic_coefficients(self):
        rep = catlin_check(50)
        assert rep.lower_coefficient == Fraction(45, 64)
        assert rep.upper_coefficient == Fraction(625, 1024)

    def test_first_hold_and_failures(self):
        rep = catlin_check(50)
        assert rep.first_hold == 8
        assert rep.failures == (1, 2, 3, 4, 5, 6, 7, 9, 11)

    def test_k13_margin(self):
        row = next(r for r in catlin_check(13).rows if r.k == 13)
        assert (row.lower, row.upper) == (14409, 14400)
        assert row.holds

    def test_k2_exact_values(self):
        # Z(4) = Z(2) = 0 and the bipartite Z(2,2) = 0, so the lower side
        # vanishes entirely while Z(5) = 1
        row = next(r for r in catlin_check(2).rows if r.k == 2)
        assert (row.lower, row.upper, row.holds) == (0, 1, False)

    def test_holds_from_12_on(self):
        rep = catlin_check(200)
        assert all(row.holds for row in rep.rows if row.k >= 12)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            catlin_check(0)


class TestRendering:
    def test_markdown_header_r13(self):
        md = render_report(verify_albertson(13), ReportFormat.MARKDOWN)
        assert "## Albertson case analysis, r = 13" in md
        assert "| n | e | bound (4) | p | ⌈cr(n,m,p)⌉ |" in md
        assert "| 18 | 128 | 238 | 0.719 | 288 |" in md
        assert "Verdict: Verified." in md
        assert "Gaps: none." in md

    def test_markdown_r17_specifics(self):
        md = render_report(verify_albertson(17), ReportFormat.MARKDOWN)
        assert "bound (5)" in md
        assert "Join refinement at n = 32: e = 279" in md
        assert "834" in md
        assert "Gaps: 33, 34." in md
        assert "Verdict: GapsRemain." in md

    def test_csv_layout(self):
        csv = render_report(verify_albertson(13), ReportFormat.CSV)
        lines = csv.strip().splitlines()
        assert lines[0] == "n,e,linear_bound,p,prob_bound,target,satisfied"
        assert lines[1] == "18,128,238,719/1000,288,225,true"
        assert len(lines) == 5

    def test_csv_p_in_lowest_terms(self):
        csv = render_report(verify_albertson(13), ReportFormat.CSV)
        assert "183/250" in csv  # 732/1000 reduced

    @pytest.mark.parametrize("r", [13, 16, 17])
    def test_structured_round_trip(self, r):
        rep = verify_albertson(r)
        blob = render_report(rep, ReportFormat.STRUCTURED)
        assert parse_report(blob) == rep

    def test_structured_is_json_with_sorted_keys(self):
        blob = render_report(verify_albertson(13), ReportFormat.STRUCTURED)
        doc = json.loads(blob)
        assert list(doc) == sorted(doc)
        assert doc["r"] == 13
        assert doc["verdict"] == "Verified"

    def test_render_accepts_format_names(self):
        rep = verify_albertson(13)
        assert render_report(rep, "markdown") == \
            render_report(rep, ReportFormat.MARKDOWN)

    @pytest.mark.parametrize("fmt", list(ReportFormat))
    def test_rendering_is_deterministic(self, fmt):
        rep = verify_albertson(17)
        assert render_report(rep, fmt) == render_report(rep, fmt)
