"""Pure scenario patching and intervention ranking.

A patch is an ordered list of operations applied to a copy of a scenario;
the input scenario is never modified. ``compare`` runs the baseline and
every patched variant under one shared config (same seed throughout) and
ranks patches by resulting resilience mean.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

from .engine import RunReport, SimConfig, run_scenario
from .model import (
    BoundedRange,
    Dimension,
    Scenario,
    ScenarioValidationError,
    ThreatSpec,
    ValidationIssue,
    VulnerabilitySpec,
    validate_scenario,
)


@dataclass(frozen=True)
class SetVulnerabilityProbability:
    threat: str
    vulnerability: str
    range: BoundedRange


@dataclass(frozen=True)
class SetImpact:
    threat: str
    vulnerability: str
    dimension: Dimension
    range: BoundedRange


@dataclass(frozen=True)
class CapVulnerabilityProbability:
    """Clamp: hi becomes min(hi, max_hi), then lo becomes min(lo, hi)."""

    threat: str
    vulnerability: str
    max_hi: float


@dataclass(frozen=True)
class CapImpact:
    threat: str
    vulnerability: str
    dimension: Dimension
    max_hi: float


@dataclass(frozen=True)
class AddVulnerability:
    threat: str
    vulnerability: VulnerabilitySpec


@dataclass(frozen=True)
class RemoveVulnerability:
    threat: str
    vulnerability: str


@dataclass(frozen=True)
class SetImportance:
    threat: str
    importance: float


PatchOp = Union[
    SetVulnerabilityProbability,
    SetImpact,
    CapVulnerabilityProbability,
    CapImpact,
    AddVulnerability,
    RemoveVulnerability,
    SetImportance,
]


@dataclass(frozen=True)
class InterventionPatch:
    """Named, ordered bundle of patch operations."""

    name: str
    description: str
    ops: tuple[PatchOp, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ops", tuple(self.ops))


class PatchApplicationError(ValueError):
    """An op could not be applied; carries the op index and target path."""

    def __init__(self, op_index: int, path: str, message: str):
        self.op_index = op_index
        self.path = path
        super().__init__(f"op {op_index} at {path}: {message}")


def percent_reduction(base: float, new: float) -> float:
    """Relative reduction from base to new, in percent."""
    if base == 0:
        raise UndefinedReductionError("percent reduction is undefined for a zero base")
    return (base - new) / base * 100.0


class UndefinedReductionError(ValueError):
    pass


def _capped(r: BoundedRange, max_hi: float) -> BoundedRange:
    hi = min(r.hi, max_hi)
    return BoundedRange(min(r.lo, hi), hi)


def _find_threat(threats: list[ThreatSpec], name: str, op_index: int) -> int:
    for k, t in enumerate(threats):
        if t.name == name:
            return k
    raise PatchApplicationError(op_index, f"threats[{name}]", "no such threat")


def _find_vuln(threat: ThreatSpec, name: str, op_index: int) -> int:
    for k, v in enumerate(threat.vulnerabilities):
        if v.name == name:
            return k
    raise PatchApplicationError(
        op_index, f"threats[{threat.name}].vulnerabilities[{name}]", "no such vulnerability"
    )


def _replace_vuln(threat: ThreatSpec, index: int, vuln: VulnerabilitySpec) -> ThreatSpec:
    vulns = list(threat.vulnerabilities)
    vulns[index] = vuln
    return replace(threat, vulnerabilities=tuple(vulns))


def apply_patch(scenario: Scenario, patch: InterventionPatch) -> Scenario:
    """Apply ops in order and return a new scenario; the input is untouched."""
    threats = list(scenario.threats)
    for k, op in enumerate(patch.ops):
        ti = _find_threat(threats, op.threat, k)
        threat = threats[ti]
        if isinstance(op, SetVulnerabilityProbability):
            vi = _find_vuln(threat, op.vulnerability, k)
            vuln = replace(threat.vulnerabilities[vi], probability=op.range)
            threats[ti] = _replace_vuln(threat, vi, vuln)
        elif isinstance(op, SetImpact):
            vi = _find_vuln(threat, op.vulnerability, k)
            field = (
                "operational_impact"
                if op.dimension is Dimension.OPERATIONAL
                else "infrastructural_impact"
            )
            vuln = replace(threat.vulnerabilities[vi], **{field: op.range})
            threats[ti] = _replace_vuln(threat, vi, vuln)
        elif isinstance(op, CapVulnerabilityProbability):
            vi = _find_vuln(threat, op.vulnerability, k)
            old = threat.vulnerabilities[vi]
            vuln = replace(old, probability=_capped(old.probability, op.max_hi))
            threats[ti] = _replace_vuln(threat, vi, vuln)
        elif isinstance(op, CapImpact):
            vi = _find_vuln(threat, op.vulnerability, k)
            old = threat.vulnerabilities[vi]
            if op.dimension is Dimension.OPERATIONAL:
                vuln = replace(old, operational_impact=_capped(old.operational_impact, op.max_hi))
            else:
                vuln = replace(
                    old, infrastructural_impact=_capped(old.infrastructural_impact, op.max_hi)
                )
            threats[ti] = _replace_vuln(threat, vi, vuln)
        elif isinstance(op, AddVulnerability):
            if any(v.name == op.vulnerability.name for v in threat.vulnerabilities):
                raise PatchApplicationError(
                    k,
                    f"threats[{threat.name}].vulnerabilities[{op.vulnerability.name}]",
                    "vulnerability already exists",
                )
            threats[ti] = replace(
                threat, vulnerabilities=threat.vulnerabilities + (op.vulnerability,)
            )
        elif isinstance(op, RemoveVulnerability):
            vi = _find_vuln(threat, op.vulnerability, k)
            vulns = list(threat.vulnerabilities)
            del vulns[vi]
            threats[ti] = replace(threat, vulnerabilities=tuple(vulns))
        elif isinstance(op, SetImportance):
            threats[ti] = replace(threat, importance=op.importance)
        else:  # pragma: no cover - exhaustive over PatchOp
            raise PatchApplicationError(k, op.threat, f"unknown op type {type(op).__name__}")
    patched = replace(scenario, threats=tuple(threats))
    issues = validate_scenario(patched)
    if issues:
        raise ScenarioValidationError(issues)
    return patched


def validate_patch(patch: InterventionPatch, scenario: Scenario) -> list[ValidationIssue]:
    """Referential and range checks for a patch against a concrete scenario.

    Ops are checked against the register as it evolves, so an op may refer
    to a vulnerability added by an earlier op.
    """
    issues: list[ValidationIssue] = []
    if not patch.name:
        issues.append(ValidationIssue("name", "patch name must be nonempty"))
    try:
        apply_patch(scenario, patch)
    except PatchApplicationError as exc:
        issues.append(ValidationIssue(exc.path, str(exc)))
    except ScenarioValidationError as exc:
        issues.extend(exc.issues)
    return issues


def builtin_underground_distribution() -> InterventionPatch:
    """Move distribution lines underground.

    Wind and ice borne distribution damage becomes negligible, terrorism
    access to lines is capped at low, and buried lines pick up a flooding
    exposure mirroring the flooding generator/storage rows (probability
    [0.01, 0.5], both impacts [0, 0.7]). The earthquake register already
    prices buried-line damage, so that row is left unchanged.
    """
    negligible = BoundedRange(0.0, 0.01)
    return InterventionPatch(
        name="underground-distribution",
        description=(
            "Bury all distribution lines: storm and wind damage to lines "
            "becomes negligible, terrorism line access caps at 0.2, and a "
            "flooding line exposure is added with probability 0.01-0.5 and "
            "impacts 0-0.7, mirroring flooding's generator and storage rows."
        ),
        ops=(
            SetVulnerabilityProbability("Hurricane", "High Winds Damage Distribution", negligible),
            SetVulnerabilityProbability(
                "Severe Winter Storm", "Snow, Ice, and Wind Damages Distribution", negligible
            ),
            SetVulnerabilityProbability(
                "Severe Thunderstorm", "High Winds and Rain Damage Distribution", negligible
            ),
            SetVulnerabilityProbability(
                "High Wind", "Infrastructure Damage to Distribution", negligible
            ),
            CapVulnerabilityProbability("Terrorism", "Distribution Damage", 0.2),
            AddVulnerability(
                "Flooding",
                VulnerabilitySpec(
                    name="Infrastructure Damage to Distribution",
                    probability=BoundedRange(0.01, 0.5),
                    operational_impact=BoundedRange(0.0, 0.7),
                    infrastructural_impact=BoundedRange(0.0, 0.7),
                ),
            ),
        ),
    )


def builtin_harden_generation() -> InterventionPatch:
    """Physically harden generator and storage assets.

    Generator and storage impacts from hurricane, tornado, earthquake, and
    flooding drop to negligible; terrorism against those assets is capped
    at moderate (probability and both impacts at 0.5).
    """
    negligible = BoundedRange(0.0, 0.01)
    rows = (
        ("Hurricane", "Heavy Rains/Storm Surge Damages Generator"),
        ("Hurricane", "Heavy Rains/Storm Surge Damages Storage"),
        ("Tornado", "Generator Damage"),
        ("Tornado", "Storage Damage"),
        ("Earthquake", "Generator Damage"),
        ("Earthquake", "Storage Damage"),
        ("Flooding", "Infrastructure Damage to Generator"),
        ("Flooding", "Infrastructure Damage to Storage"),
    )
    ops: list[PatchOp] = []
    for threat, vuln in rows:
        ops.append(SetImpact(threat, vuln, Dimension.OPERATIONAL, negligible))
        ops.append(SetImpact(threat, vuln, Dimension.INFRASTRUCTURAL, negligible))
    for vuln in ("Generator Damage", "Storage Damage"):
        ops.append(CapVulnerabilityProbability("Terrorism", vuln, 0.5))
        ops.append(CapImpact("Terrorism", vuln, Dimension.OPERATIONAL, 0.5))
        ops.append(CapImpact("Terrorism", vuln, Dimension.INFRASTRUCTURAL, 0.5))
    return InterventionPatch(
        name="harden-generation",
        description=(
            "Harden generator and storage assets: hurricane, tornado, "
            "earthquake, and flooding impacts on them become negligible; "
            "terrorism probability and impacts against them cap at 0.5."
        ),
        ops=tuple(ops),
    )


def builtin_patches() -> tuple[InterventionPatch, ...]:
    return (builtin_underground_distribution(), builtin_harden_generation())


@dataclass(frozen=True)
class PatchDeltas:
    """Changes vs baseline, signed so every field is positive when the
    patch helps: risk fields are reductions (baseline minus patched),
    resilience_abs is the gain (patched minus baseline).

    A pct is None when the baseline mean is zero (reduction undefined).
    """

    op_risk_abs: float
    op_risk_pct: float | None
    infra_risk_abs: float
    infra_risk_pct: float | None
    resilience_abs: float


@dataclass(frozen=True)
class PatchOutcome:
    patch: InterventionPatch
    report: RunReport
    deltas: PatchDeltas


@dataclass(frozen=True)
class ComparisonReport:
    baseline: RunReport
    outcomes: tuple[PatchOutcome, ...]
    ranking: tuple[str, ...]


def _pct(base: float, new: float) -> float | None:
    if base == 0:
        return None
    return percent_reduction(base, new)


def compare(
    scenario: Scenario,
    patches: list[InterventionPatch] | tuple[InterventionPatch, ...],
    config: SimConfig,
    workers: int = 1,
) -> ComparisonReport:
    """Run baseline and every patched variant under the same seeded config."""
    baseline = run_scenario(scenario, config, workers=workers)
    outcomes: list[PatchOutcome] = []
    for patch in patches:
        patched = apply_patch(scenario, patch)
        report = run_scenario(patched, config, workers=workers)
        deltas = PatchDeltas(
            op_risk_abs=baseline.operational.mean - report.operational.mean,
            op_risk_pct=_pct(baseline.operational.mean, report.operational.mean),
            infra_risk_abs=baseline.infrastructural.mean - report.infrastructural.mean,
            infra_risk_pct=_pct(baseline.infrastructural.mean, report.infrastructural.mean),
            resilience_abs=report.resilience.mean - baseline.resilience.mean,
        )
        outcomes.append(PatchOutcome(patch=patch, report=report, deltas=deltas))
    ranked = sorted(outcomes, key=lambda o: -o.report.resilience.mean)
    return ComparisonReport(
        baseline=baseline,
        outcomes=tuple(outcomes),
        ranking=tuple(o.patch.name for o in ranked),
    )
