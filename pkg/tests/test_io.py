from __future__ import annotations

import json
import random
import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from microresil.interventions import (
    AddVulnerability,
    CapVulnerabilityProbability,
    InterventionPatch,
    RemoveVulnerability,
    SetImportance,
    builtin_patches,
    validate_patch,
)
from microresil.model import (
    BoundedRange,
    Scenario,
    ScenarioValidationError,
    ThreatSpec,
    VulnerabilitySpec,
)
from microresil.scenario_io import (
    MalformedDocumentError,
    canonical_json,
    parse_patch,
    parse_scenario,
    patch_from_document,
    patch_to_document,
    scenario_from_document,
    scenario_to_document,
    serialize_patch,
    serialize_scenario,
)

from conftest import random_scenario

# ------------------------------------------------------------------- parsing


class TestParseScenario:
    def test_builtin_round_trip(self, builtin):
        assert parse_scenario(serialize_scenario(builtin)) == builtin

    def test_builtin_threat_count(self, builtin):
        doc = json.loads(serialize_scenario(builtin))
        assert len(doc["threats"]) == 15

    def test_rating_encoded_range(self):
        doc = {
            "name": "r",
            "description": "",
            "threats": [
                {
                    "name": "T",
                    "probability": {"rating": "Low"},
                    "importance": 1,
                    "vulnerabilities": [
                        {
                            "name": "V",
                            "probability": {"rating": "Moderate to Considerable"},
                            "operational_impact": {"lo": 0, "hi": 0.5},
                            "infrastructural_impact": {"rating": "negligible"},
                        }
                    ],
                }
            ],
        }
        s = parse_scenario(json.dumps(doc).encode())
        assert s.threats[0].probability == BoundedRange(0.05, 0.2)
        v = s.threats[0].vulnerabilities[0]
        assert v.probability == BoundedRange(0.2, 0.7)
        assert v.infrastructural_impact == BoundedRange(0.0, 0.01)

    def test_empty_bytes_rejected(self):
        with pytest.raises(MalformedDocumentError):
            parse_scenario(b"")

    def test_invalid_json_has_location(self):
        with pytest.raises(MalformedDocumentError, match="line"):
            parse_scenario(b'{"name": ')

    def test_non_utf8_rejected(self):
        with pytest.raises(MalformedDocumentError):
            parse_scenario(b"\xff\xfe{}")

    def test_unknown_key_rejected_in_strict_mode(self):
        doc = json.loads(serialize_scenario_builtin())
        doc["bogus"] = 1
        with pytest.raises(MalformedDocumentError, match="bogus"):
            parse_scenario(json.dumps(doc).encode())

    def test_unknown_key_tolerated_in_lenient_mode(self):
        doc = json.loads(serialize_scenario_builtin())
        doc["bogus"] = 1
        doc["threats"][0]["extra"] = {"nested": True}
        s = parse_scenario(json.dumps(doc).encode(), lenient=True)
        assert len(s.threats) == 15

    def test_missing_key_rejected(self):
        with pytest.raises(MalformedDocumentError, match="threats"):
            parse_scenario(b'{"name": "x", "description": ""}')

    def test_bad_number_type_rejected(self):
        doc = json.loads(serialize_scenario_builtin())
        doc["threats"][0]["importance"] = "high"
        with pytest.raises(MalformedDocumentError, match="importance"):
            parse_scenario(json.dumps(doc).encode())

    def test_boolean_is_not_a_number(self):
        doc = json.loads(serialize_scenario_builtin())
        doc["threats"][0]["importance"] = True
        with pytest.raises(MalformedDocumentError):
            parse_scenario(json.dumps(doc).encode())

    def test_validation_failure_forwarded(self):
        doc = json.loads(serialize_scenario_builtin())
        doc["threats"][0]["importance"] = 1.5
        with pytest.raises(ScenarioValidationError) as exc_info:
            parse_scenario(json.dumps(doc).encode())
        assert any("importance" in i.path for i in exc_info.value.issues)

    def test_error_paths_are_located(self):
        doc = json.loads(serialize_scenario_builtin())
        del doc["threats"][2]["vulnerabilities"][0]["probability"]
        with pytest.raises(MalformedDocumentError) as exc_info:
            parse_scenario(json.dumps(doc).encode())
        assert "threats[2]" in exc_info.value.path

    def test_numeric_wins_when_rating_also_present(self):
        # Serialized output annotates canonical ranges with a label; parsing
        # must trust the numbers so our own output round-trips.
        doc = {
            "name": "r",
            "description": "",
            "threats": [
                {
                    "name": "T",
                    "probability": {"lo": 0.3, "hi": 0.4, "rating": "Low"},
                    "importance": 1,
                    "vulnerabilities": [
                        {
                            "name": "V",
                            "probability": {"lo": 0, "hi": 1},
                            "operational_impact": {"lo": 0, "hi": 1},
                            "infrastructural_impact": {"lo": 0, "hi": 1},
                        }
                    ],
                }
            ],
        }
        s = parse_scenario(json.dumps(doc).encode())
        assert s.threats[0].probability == BoundedRange(0.3, 0.4)


def serialize_scenario_builtin() -> bytes:
    from microresil.datasets import builtin_new_england

    return serialize_scenario(builtin_new_england())


class TestSerializeScenario:
    def test_deterministic_bytes(self, builtin):
        assert serialize_scenario(builtin) == serialize_scenario(builtin)

    def test_equal_scenarios_byte_identical(self, builtin):
        from microresil.datasets import builtin_new_england

        assert serialize_scenario(builtin) == serialize_scenario(builtin_new_england())

    def test_keys_sorted(self, builtin):
        raw = serialize_scenario(builtin).decode()
        assert raw.index('"description"') < raw.index('"name"') < raw.index('"threats"')

    def test_trailing_newline(self, builtin):
        assert serialize_scenario(builtin).endswith(b"\n")

    def test_rating_sourced_range_emits_numbers(self):
        s = parse_scenario(
            json.dumps(
                {
                    "name": "r",
                    "description": "",
                    "threats": [
                        {
                            "name": "T",
                            "probability": {"rating": "Low"},
                            "importance": 1,
                            "vulnerabilities": [],
                        }
                    ],
                }
            ).encode()
        )
        doc = json.loads(serialize_scenario(s))
        prob = doc["threats"][0]["probability"]
        assert prob["lo"] == 0.05
        assert prob["hi"] == 0.2

    def test_canonical_ranges_carry_label_annotation(self, builtin):
        doc = json.loads(serialize_scenario(builtin))
        hurricane = next(t for t in doc["threats"] if t["name"] == "Hurricane")
        assert hurricane["probability"]["rating"] == "Moderate to Considerable"

    def test_non_canonical_ranges_carry_no_label(self, builtin):
        # Drought probability [0.3, 0.5] starts between breakpoints.
        doc = json.loads(serialize_scenario(builtin))
        drought = next(t for t in doc["threats"] if t["name"] == "Drought")
        assert "rating" not in drought["probability"]

    def test_round_trip_200_random_scenarios(self):
        rng = random.Random(20260815)
        for _ in range(200):
            s = random_scenario(rng)
            assert parse_scenario(serialize_scenario(s)) == s

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_round_trip_property(self, data):
        names = st.text(
            alphabet=string.ascii_letters + string.digits + " _-'.",
            min_size=1,
            max_size=20,
        )
        unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)

        def rng_strategy():
            return st.tuples(unit, unit).map(lambda ab: BoundedRange(min(ab), max(ab)))

        vulns = st.lists(
            st.builds(
                VulnerabilitySpec,
                name=names,
                probability=rng_strategy(),
                operational_impact=rng_strategy(),
                infrastructural_impact=rng_strategy(),
            ),
            max_size=4,
            unique_by=lambda v: v.name,
        )
        threats = st.lists(
            st.builds(
                ThreatSpec,
                name=names,
                probability=rng_strategy(),
                importance=unit,
                vulnerabilities=vulns.map(tuple),
            ),
            min_size=1,
            max_size=4,
            unique_by=lambda t: t.name,
        )
        s = data.draw(
            st.builds(
                Scenario, name=names, description=st.text(max_size=30), threats=threats.map(tuple)
            )
        )
        assert parse_scenario(serialize_scenario(s)) == s


class TestCanonicalJson:
    def test_sorted_and_indented(self):
        raw = canonical_json({"b": 1, "a": [1, 2]}).decode()
        assert raw == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'

    def test_non_ascii_preserved(self):
        assert "é" in canonical_json({"k": "é"}).decode("utf-8")


class TestPatchDocuments:
    def test_builtin_patches_round_trip(self):
        for patch in builtin_patches():
            assert parse_patch(serialize_patch(patch)) == patch

    def test_unknown_op_kind_rejected(self):
        doc = {
            "name": "p",
            "description": "",
            "ops": [{"kind": "frobnicate", "threat": "Hurricane"}],
        }
        with pytest.raises(MalformedDocumentError, match="frobnicate"):
            parse_patch(json.dumps(doc).encode())

    def test_missing_op_field_rejected(self):
        doc = {
            "name": "p",
            "description": "",
            "ops": [{"kind": "set_importance", "threat": "Hurricane"}],
        }
        with pytest.raises(MalformedDocumentError, match="importance"):
            parse_patch(json.dumps(doc).encode())

    def test_patch_referencing_missing_threat_fails_validation(self, builtin):
        patch = InterventionPatch(
            name="ghost",
            description="",
            ops=(SetImportance(threat="No Such Threat", importance=0.5),),
        )
        issues = validate_patch(patch, builtin)
        assert issues
        assert any("No Such Threat" in (i.path + i.message) for i in issues)

    def test_valid_patch_passes_validation(self, builtin):
        for patch in builtin_patches():
            assert validate_patch(patch, builtin) == []

    def test_all_op_kinds_round_trip(self, builtin):
        patch = InterventionPatch(
            name="all-ops",
            description="exercises every op kind",
            ops=(
                SetImportance(threat="Hurricane", importance=0.5),
                CapVulnerabilityProbability(
                    threat="Terrorism", vulnerability="Distribution Damage", max_hi=0.2
                ),
                RemoveVulnerability(threat="Hail", vulnerability="Infrastructure Damage to PV"),
                AddVulnerability(
                    threat="Drought",
                    vulnerability=VulnerabilitySpec(
                        name="Reservoir Depletion",
                        probability=BoundedRange(0.1, 0.3),
                        operational_impact=BoundedRange(0.0, 0.2),
                        infrastructural_impact=BoundedRange(0.0, 0.1),
                    ),
                ),
            ),
        )
        assert parse_patch(serialize_patch(patch)) == patch
        assert validate_patch(patch, builtin) == []

    def test_patch_document_shape(self):
        doc = patch_to_document(builtin_patches()[0])
        assert set(doc.keys()) == {"name", "description", "ops"}
        assert all("kind" in op for op in doc["ops"])
        assert patch_from_document(doc) == builtin_patches()[0]

    def test_scenario_document_dict_round_trip(self, builtin):
        assert scenario_from_document(scenario_to_document(builtin)) == builtin
