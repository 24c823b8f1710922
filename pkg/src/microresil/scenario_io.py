"""JSON interchange for scenarios and patches.

Documents are UTF-8 JSON. Ranges accept either numeric bounds
``{"lo": .., "hi": ..}`` or a qualitative label ``{"rating": "Low"}``;
serialization always emits numeric bounds and re-attaches a ``rating``
annotation when the range exactly matches canonical level boundaries (the
numeric bounds stay authoritative on re-parse). Serialization is canonical:
key-sorted, fixed layout, byte-identical for structurally equal inputs.

Strict parsing rejects unknown keys; pass ``lenient=True`` to ignore them.
"""

from __future__ import annotations

import json
from typing import Any

from .interventions import (
    AddVulnerability,
    CapImpact,
    CapVulnerabilityProbability,
    InterventionPatch,
    PatchOp,
    RemoveVulnerability,
    SetImpact,
    SetImportance,
    SetVulnerabilityProbability,
)
from .model import (
    BoundedRange,
    Dimension,
    Scenario,
    ScenarioValidationError,
    ThreatSpec,
    VulnerabilitySpec,
    canonical_label,
    parse_rating_label,
    validate_scenario,
)


class MalformedDocumentError(ValueError):
    """Structural problem in a document, with a path or line diagnostic."""

    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


def _decode_json(data: bytes | str) -> Any:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedDocumentError(f"document is not valid UTF-8: {exc}") from exc
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedDocumentError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc


def _require_object(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise MalformedDocumentError(f"expected an object, got {type(value).__name__}", path)
    return value


def _check_keys(obj: dict, allowed: set[str], required: set[str], path: str, lenient: bool) -> None:
    missing = required - obj.keys()
    if missing:
        raise MalformedDocumentError(f"missing required keys: {sorted(missing)}", path)
    if not lenient:
        unknown = obj.keys() - allowed
        if unknown:
            raise MalformedDocumentError(f"unknown keys: {sorted(unknown)}", path)


def _number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MalformedDocumentError(f"expected a number, got {value!r}", path)
    return float(value)


def _text(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise MalformedDocumentError(f"expected a string, got {value!r}", path)
    return value


def _range_from_document(value: Any, path: str, lenient: bool) -> BoundedRange:
    obj = _require_object(value, path)
    if "lo" in obj or "hi" in obj:
        _check_keys(obj, {"lo", "hi", "rating"}, {"lo", "hi"}, path, lenient)
        return BoundedRange(_number(obj["lo"], f"{path}.lo"), _number(obj["hi"], f"{path}.hi"))
    _check_keys(obj, {"rating"}, {"rating"}, path, lenient)
    try:
        return parse_rating_label(_text(obj["rating"], f"{path}.rating"))
    except ValueError as exc:
        raise MalformedDocumentError(str(exc), f"{path}.rating") from exc


def _range_to_document(r: BoundedRange) -> dict:
    doc: dict[str, Any] = {"lo": r.lo, "hi": r.hi}
    label = canonical_label(r)
    if label is not None:
        doc["rating"] = label
    return doc


def _vulnerability_from_document(value: Any, path: str, lenient: bool) -> VulnerabilitySpec:
    obj = _require_object(value, path)
    _check_keys(
        obj,
        {"name", "probability", "operational_impact", "infrastructural_impact"},
        {"name", "probability", "operational_impact", "infrastructural_impact"},
        path,
        lenient,
    )
    return VulnerabilitySpec(
        name=_text(obj["name"], f"{path}.name"),
        probability=_range_from_document(obj["probability"], f"{path}.probability", lenient),
        operational_impact=_range_from_document(
            obj["operational_impact"], f"{path}.operational_impact", lenient
        ),
        infrastructural_impact=_range_from_document(
            obj["infrastructural_impact"], f"{path}.infrastructural_impact", lenient
        ),
    )


def _vulnerability_to_document(v: VulnerabilitySpec) -> dict:
    return {
        "name": v.name,
        "probability": _range_to_document(v.probability),
        "operational_impact": _range_to_document(v.operational_impact),
        "infrastructural_impact": _range_to_document(v.infrastructural_impact),
    }


def scenario_from_document(doc: Any, *, lenient: bool = False) -> Scenario:
    obj = _require_object(doc, "$")
    _check_keys(obj, {"name", "description", "threats"}, {"name", "threats"}, "$", lenient)
    threats_doc = obj["threats"]
    if not isinstance(threats_doc, list):
        raise MalformedDocumentError("expected an array", "$.threats")
    threats = []
    for k, tdoc in enumerate(threats_doc):
        path = f"$.threats[{k}]"
        tobj = _require_object(tdoc, path)
        _check_keys(
            tobj,
            {"name", "probability", "importance", "vulnerabilities"},
            {"name", "probability", "importance", "vulnerabilities"},
            path,
            lenient,
        )
        vulns_doc = tobj["vulnerabilities"]
        if not isinstance(vulns_doc, list):
            raise MalformedDocumentError("expected an array", f"{path}.vulnerabilities")
        threats.append(
            ThreatSpec(
                name=_text(tobj["name"], f"{path}.name"),
                probability=_range_from_document(tobj["probability"], f"{path}.probability", lenient),
                importance=_number(tobj["importance"], f"{path}.importance"),
                vulnerabilities=tuple(
                    _vulnerability_from_document(vdoc, f"{path}.vulnerabilities[{j}]", lenient)
                    for j, vdoc in enumerate(vulns_doc)
                ),
            )
        )
    return Scenario(
        name=_text(obj["name"], "$.name"),
        description=_text(obj.get("description", ""), "$.description"),
        threats=tuple(threats),
    )


def scenario_to_document(scenario: Scenario) -> dict:
    return {
        "name": scenario.name,
        "description": scenario.description,
        "threats": [
            {
                "name": t.name,
                "probability": _range_to_document(t.probability),
                "importance": t.importance,
                "vulnerabilities": [_vulnerability_to_document(v) for v in t.vulnerabilities],
            }
            for t in scenario.threats
        ],
    }


def canonical_json(doc: Any) -> bytes:
    """Key-sorted UTF-8 JSON; equal documents serialize to equal bytes."""
    return (json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def parse_scenario(data: bytes | str, *, lenient: bool = False) -> Scenario:
    """Parse and validate a scenario document.

    Raises MalformedDocumentError for structural problems and
    ScenarioValidationError (carrying located issues) for invariant
    violations such as out-of-range bounds.
    """
    scenario = scenario_from_document(_decode_json(data), lenient=lenient)
    issues = validate_scenario(scenario)
    if issues:
        raise ScenarioValidationError(issues)
    return scenario


def serialize_scenario(scenario: Scenario) -> bytes:
    return canonical_json(scenario_to_document(scenario))


_DIMENSIONS = {d.value: d for d in Dimension}

_OP_KEYS: dict[str, tuple[set[str], set[str]]] = {
    "set_vulnerability_probability": (
        {"kind", "threat", "vulnerability", "range"},
        {"kind", "threat", "vulnerability", "range"},
    ),
    "set_impact": (
        {"kind", "threat", "vulnerability", "dimension", "range"},
        {"kind", "threat", "vulnerability", "dimension", "range"},
    ),
    "cap_vulnerability_probability": (
        {"kind", "threat", "vulnerability", "max_hi"},
        {"kind", "threat", "vulnerability", "max_hi"},
    ),
    "cap_impact": (
        {"kind", "threat", "vulnerability", "dimension", "max_hi"},
        {"kind", "threat", "vulnerability", "dimension", "max_hi"},
    ),
    "add_vulnerability": ({"kind", "threat", "vulnerability"}, {"kind", "threat", "vulnerability"}),
    "remove_vulnerability": (
        {"kind", "threat", "vulnerability"},
        {"kind", "threat", "vulnerability"},
    ),
    "set_importance": ({"kind", "threat", "importance"}, {"kind", "threat", "importance"}),
}


def _dimension_from(value: Any, path: str) -> Dimension:
    name = _text(value, path)
    if name not in _DIMENSIONS:
        raise MalformedDocumentError(
            f"unknown dimension {name!r}; expected one of {sorted(_DIMENSIONS)}", path
        )
    return _DIMENSIONS[name]


def _op_from_document(value: Any, path: str, lenient: bool) -> PatchOp:
    obj = _require_object(value, path)
    kind = _text(obj.get("kind"), f"{path}.kind") if "kind" in obj else None
    if kind is None or kind not in _OP_KEYS:
        raise MalformedDocumentError(
            f"unknown op kind {kind!r}; expected one of {sorted(_OP_KEYS)}", f"{path}.kind"
        )
    allowed, required = _OP_KEYS[kind]
    _check_keys(obj, allowed, required, path, lenient)
    threat = _text(obj["threat"], f"{path}.threat")
    if kind == "set_vulnerability_probability":
        return SetVulnerabilityProbability(
            threat,
            _text(obj["vulnerability"], f"{path}.vulnerability"),
            _range_from_document(obj["range"], f"{path}.range", lenient),
        )
    if kind == "set_impact":
        return SetImpact(
            threat,
            _text(obj["vulnerability"], f"{path}.vulnerability"),
            _dimension_from(obj["dimension"], f"{path}.dimension"),
            _range_from_document(obj["range"], f"{path}.range", lenient),
        )
    if kind == "cap_vulnerability_probability":
        return CapVulnerabilityProbability(
            threat,
            _text(obj["vulnerability"], f"{path}.vulnerability"),
            _number(obj["max_hi"], f"{path}.max_hi"),
        )
    if kind == "cap_impact":
        return CapImpact(
            threat,
            _text(obj["vulnerability"], f"{path}.vulnerability"),
            _dimension_from(obj["dimension"], f"{path}.dimension"),
            _number(obj["max_hi"], f"{path}.max_hi"),
        )
    if kind == "add_vulnerability":
        return AddVulnerability(
            threat, _vulnerability_from_document(obj["vulnerability"], f"{path}.vulnerability", lenient)
        )
    if kind == "remove_vulnerability":
        return RemoveVulnerability(threat, _text(obj["vulnerability"], f"{path}.vulnerability"))
    return SetImportance(threat, _number(obj["importance"], f"{path}.importance"))


def _op_to_document(op: PatchOp) -> dict:
    if isinstance(op, SetVulnerabilityProbability):
        return {
            "kind": "set_vulnerability_probability",
            "threat": op.threat,
            "vulnerability": op.vulnerability,
            "range": _range_to_document(op.range),
        }
    if isinstance(op, SetImpact):
        return {
            "kind": "set_impact",
            "threat": op.threat,
            "vulnerability": op.vulnerability,
            "dimension": op.dimension.value,
            "range": _range_to_document(op.range),
        }
    if isinstance(op, CapVulnerabilityProbability):
        return {
            "kind": "cap_vulnerability_probability",
            "threat": op.threat,
            "vulnerability": op.vulnerability,
            "max_hi": op.max_hi,
        }
    if isinstance(op, CapImpact):
        return {
            "kind": "cap_impact",
            "threat": op.threat,
            "vulnerability": op.vulnerability,
            "dimension": op.dimension.value,
            "max_hi": op.max_hi,
        }
    if isinstance(op, AddVulnerability):
        return {
            "kind": "add_vulnerability",
            "threat": op.threat,
            "vulnerability": _vulnerability_to_document(op.vulnerability),
        }
    if isinstance(op, RemoveVulnerability):
        return {
            "kind": "remove_vulnerability",
            "threat": op.threat,
            "vulnerability": op.vulnerability,
        }
    return {"kind": "set_importance", "threat": op.threat, "importance": op.importance}


def patch_from_document(doc: Any, *, lenient: bool = False) -> InterventionPatch:
    obj = _require_object(doc, "$")
    _check_keys(obj, {"name", "description", "ops"}, {"name", "ops"}, "$", lenient)
    ops_doc = obj["ops"]
    if not isinstance(ops_doc, list):
        raise MalformedDocumentError("expected an array", "$.ops")
    return InterventionPatch(
        name=_text(obj["name"], "$.name"),
        description=_text(obj.get("description", ""), "$.description"),
        ops=tuple(_op_from_document(op, f"$.ops[{k}]", lenient) for k, op in enumerate(ops_doc)),
    )


def patch_to_document(patch: InterventionPatch) -> dict:
    return {
        "name": patch.name,
        "description": patch.description,
        "ops": [_op_to_document(op) for op in patch.ops],
    }


def parse_patch(data: bytes | str, *, lenient: bool = False) -> InterventionPatch:
    """Parse a patch document; referential checks happen at application time."""
    return patch_from_document(_decode_json(data), lenient=lenient)


def serialize_patch(patch: InterventionPatch) -> bytes:
    return canonical_json(patch_to_document(patch))
