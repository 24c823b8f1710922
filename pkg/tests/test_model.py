from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from microresil.model import (
    RATING_BREAKPOINTS,
    BoundedRange,
    Dimension,
    RatingLevel,
    Scenario,
    ThreatSpec,
    VulnerabilitySpec,
    canonical_label,
    classify_value,
    parse_rating_label,
    rating_to_range,
    validate_scenario,
)

LEVELS = list(RatingLevel)


def _vuln(name: str = "v", **kw) -> VulnerabilitySpec:
    base = dict(
        probability=BoundedRange(0.1, 0.2),
        operational_impact=BoundedRange(0.0, 0.5),
        infrastructural_impact=BoundedRange(0.0, 0.5),
    )
    base.update(kw)
    return VulnerabilitySpec(name=name, **base)


def _threat(name: str = "t", importance: float = 1.0, vulns=None) -> ThreatSpec:
    return ThreatSpec(
        name=name,
        probability=BoundedRange(0.2, 0.7),
        importance=importance,
        vulnerabilities=tuple(vulns if vulns is not None else [_vuln()]),
    )


class TestRatingTable:
    def test_breakpoints(self):
        assert RATING_BREAKPOINTS == (0.0, 0.01, 0.05, 0.2, 0.5, 0.7, 0.9, 1.0)

    @pytest.mark.parametrize(
        "level,lo,hi",
        [
            (RatingLevel.NEGLIGIBLE, 0.0, 0.01),
            (RatingLevel.VERY_LOW, 0.01, 0.05),
            (RatingLevel.LOW, 0.05, 0.2),
            (RatingLevel.MODERATE, 0.2, 0.5),
            (RatingLevel.CONSIDERABLE, 0.5, 0.7),
            (RatingLevel.HIGH, 0.7, 0.9),
            (RatingLevel.VERY_HIGH, 0.9, 1.0),
        ],
    )
    def test_canonical_ranges(self, level, lo, hi):
        r = rating_to_range(level)
        assert (r.lo, r.hi) == (lo, hi)

    def test_levels_are_ordered_and_contiguous(self):
        for a, b in zip(LEVELS, LEVELS[1:]):
            assert a.order < b.order
            assert rating_to_range(a).hi == rating_to_range(b).lo

    def test_every_level_has_positive_width(self):
        for lv in LEVELS:
            r = rating_to_range(lv)
            assert r.lo < r.hi


class TestParseRatingLabel:
    def test_single_level(self):
        assert parse_rating_label("Low") == BoundedRange(0.05, 0.2)

    def test_span(self):
        assert parse_rating_label("Negligible to Moderate") == BoundedRange(0.0, 0.5)
        assert parse_rating_label("Moderate to Considerable") == BoundedRange(0.2, 0.7)

    def test_degenerate_span_equals_single_level(self):
        assert parse_rating_label("negligible to negligible") == rating_to_range(
            RatingLevel.NEGLIGIBLE
        )

    def test_case_and_whitespace_insensitive(self):
        assert parse_rating_label("  very HIGH ") == BoundedRange(0.9, 1.0)
        assert parse_rating_label("very low TO high") == BoundedRange(0.01, 0.9)

    def test_unknown_level_rejected(self):
        with pytest.raises(ValueError, match="unknown rating label"):
            parse_rating_label("Enormous")
        with pytest.raises(ValueError, match="unknown rating label"):
            parse_rating_label("Low to Enormous")

    def test_reversed_span_rejected(self):
        with pytest.raises(ValueError, match="out of order"):
            parse_rating_label("High to Low")

    @pytest.mark.parametrize("level", LEVELS)
    def test_single_name_matches_rating_to_range(self, level):
        assert parse_rating_label(level.value) == rating_to_range(level)

    @pytest.mark.parametrize("x", LEVELS)
    @pytest.mark.parametrize("y", LEVELS)
    def test_span_endpoints(self, x, y):
        label = f"{x.value} to {y.value}"
        if x.order > y.order:
            with pytest.raises(ValueError):
                parse_rating_label(label)
        else:
            r = parse_rating_label(label)
            assert r.lo == rating_to_range(x).lo
            assert r.hi == rating_to_range(y).hi


class TestClassifyValue:
    def test_operational_risk_cube_root_is_low(self):
        # 0.0066 ** (1/3) = 0.1876... sits inside [0.05, 0.2)
        x = 0.0066 ** (1 / 3)
        assert 0.05 <= x < 0.2
        assert classify_value(x) is RatingLevel.LOW

    def test_lower_boundary(self):
        assert classify_value(0.0) is RatingLevel.NEGLIGIBLE

    def test_breakpoints_resolve_to_higher_level(self):
        assert classify_value(0.01) is RatingLevel.VERY_LOW
        assert classify_value(0.05) is RatingLevel.LOW
        assert classify_value(0.2) is RatingLevel.MODERATE
        assert classify_value(0.5) is RatingLevel.CONSIDERABLE
        assert classify_value(0.7) is RatingLevel.HIGH
        assert classify_value(0.9) is RatingLevel.VERY_HIGH

    def test_one_is_very_high(self):
        assert classify_value(1.0) is RatingLevel.VERY_HIGH

    def test_out_of_domain_rejected(self):
        with pytest.raises(ValueError):
            classify_value(-1e-9)
        with pytest.raises(ValueError):
            classify_value(1.0 + 1e-9)

    @given(st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
    def test_classified_range_contains_value(self, x):
        r = rating_to_range(classify_value(x))
        if x == 1.0:
            assert r.lo <= x <= r.hi
        else:
            assert r.lo <= x < r.hi


class TestCanonicalLabel:
    def test_exact_canonical_range(self):
        assert canonical_label(BoundedRange(0.05, 0.2)) == "Low"
        assert canonical_label(BoundedRange(0.0, 0.5)) == "Negligible to Moderate"

    def test_non_canonical_range(self):
        assert canonical_label(BoundedRange(0.05, 0.21)) is None
        assert canonical_label(BoundedRange(0.3, 0.3)) is None

    @pytest.mark.parametrize("level", LEVELS)
    def test_round_trip_through_parse(self, level):
        label = canonical_label(rating_to_range(level))
        assert label is not None
        assert parse_rating_label(label) == rating_to_range(level)


class TestValidateScenario:
    def test_builtin_is_clean(self, builtin):
        assert validate_scenario(builtin) == []

    def test_importance_out_of_range(self):
        s = Scenario(name="s", description="", threats=(_threat(importance=1.5),))
        issues = validate_scenario(s)
        assert len(issues) == 1
        assert "importance" in issues[0].path
        assert "t" in issues[0].path

    def test_duplicate_threat_names(self):
        s = Scenario(name="s", description="", threats=(_threat("dup"), _threat("dup")))
        issues = validate_scenario(s)
        assert any("dup" in i.message or "dup" in i.path for i in issues)

    def test_duplicate_vulnerability_names(self):
        t = _threat(vulns=[_vuln("x"), _vuln("x")])
        s = Scenario(name="s", description="", threats=(t,))
        issues = validate_scenario(s)
        assert len(issues) == 1
        assert "x" in issues[0].path or "x" in issues[0].message

    def test_no_threats(self):
        s = Scenario(name="s", description="", threats=())
        assert validate_scenario(s) != []

    def test_empty_name(self):
        s = Scenario(name="", description="", threats=(_threat(),))
        assert validate_scenario(s) != []

    def test_inverted_range(self):
        bad = _vuln(probability=BoundedRange(0.7, 0.2))
        s = Scenario(name="s", description="", threats=(_threat(vulns=[bad]),))
        issues = validate_scenario(s)
        assert len(issues) == 1
        assert "probability" in issues[0].path

    def test_range_outside_unit_interval(self):
        bad = _vuln(operational_impact=BoundedRange(0.0, 1.5))
        s = Scenario(name="s", description="", threats=(_threat(vulns=[bad]),))
        issues = validate_scenario(s)
        assert len(issues) == 1
        assert "operational_impact" in issues[0].path

    def test_issue_paths_locate_the_field(self):
        bad = _vuln("PV Damage", probability=BoundedRange(-0.1, 0.2))
        t = ThreatSpec(
            name="Hurricane",
            probability=BoundedRange(0.2, 0.7),
            importance=1.0,
            vulnerabilities=(bad,),
        )
        s = Scenario(name="s", description="", threats=(t,))
        (issue,) = validate_scenario(s)
        assert "Hurricane" in issue.path
        assert "PV Damage" in issue.path
        assert "probability" in issue.path


class TestDimension:
    def test_exactly_two(self):
        assert {d.value for d in Dimension} == {"operational", "infrastructural"}

    def test_vulnerability_impact_lookup(self):
        v = _vuln(
            operational_impact=BoundedRange(0.1, 0.2),
            infrastructural_impact=BoundedRange(0.3, 0.4),
        )
        assert v.impact(Dimension.OPERATIONAL) == BoundedRange(0.1, 0.2)
        assert v.impact(Dimension.INFRASTRUCTURAL) == BoundedRange(0.3, 0.4)
