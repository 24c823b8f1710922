"""Scenario-driven Monte Carlo estimation of microgrid resilience.

A scenario is a register of threats, each carrying probability, importance,
and a set of vulnerabilities with probability and per-dimension impact
ranges. The engine samples residual risk per threat/vulnerability pair,
aggregates to operational and infrastructural risk scores, and folds both
into a single resilience score. Closed-form and quadrature oracles cover
every expectation the sampler produces, and patch objects express
interventions whose effect can be ranked against the baseline.
"""

from .datasets import builtin_new_england
from .engine import (
    Aggregation,
    DimensionResult,
    Distribution,
    Histogram,
    PairRisk,
    RunReport,
    ScoreSummary,
    SimConfig,
    draw,
    histogram,
    residual_risk,
    run_scenario,
    total_resilience,
)
from .interventions import (
    AddVulnerability,
    CapImpact,
    CapVulnerabilityProbability,
    ComparisonReport,
    InterventionPatch,
    PatchApplicationError,
    PatchDeltas,
    PatchOutcome,
    RemoveVulnerability,
    SetImpact,
    SetImportance,
    SetVulnerabilityProbability,
    UndefinedReductionError,
    apply_patch,
    builtin_harden_generation,
    builtin_patches,
    builtin_underground_distribution,
    compare,
    percent_reduction,
    validate_patch,
)
from .model import (
    RATING_BREAKPOINTS,
    BoundedRange,
    Dimension,
    RatingLevel,
    Scenario,
    ScenarioValidationError,
    ThreatSpec,
    ValidationIssue,
    VulnerabilitySpec,
    canonical_label,
    classify_value,
    parse_rating_label,
    rating_to_range,
    validate_scenario,
)
from .oracle import (
    PairMoments,
    expected_pair_risk,
    expected_scenario_risk,
    expected_threat_risk,
    grid_pair_risk,
    pair_moments,
    pair_risk_variance,
    scenario_risk_moments,
)
from .scenario_io import (
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

__version__ = "0.1.0"

__all__ = [
    "RATING_BREAKPOINTS",
    "AddVulnerability",
    "Aggregation",
    "BoundedRange",
    "CapImpact",
    "CapVulnerabilityProbability",
    "ComparisonReport",
    "Dimension",
    "DimensionResult",
    "Distribution",
    "Histogram",
    "InterventionPatch",
    "MalformedDocumentError",
    "PairMoments",
    "PairRisk",
    "PatchApplicationError",
    "PatchDeltas",
    "PatchOutcome",
    "RatingLevel",
    "RemoveVulnerability",
    "RunReport",
    "Scenario",
    "ScenarioValidationError",
    "ScoreSummary",
    "SetImpact",
    "SetImportance",
    "SetVulnerabilityProbability",
    "SimConfig",
    "ThreatSpec",
    "UndefinedReductionError",
    "ValidationIssue",
    "VulnerabilitySpec",
    "apply_patch",
    "builtin_harden_generation",
    "builtin_new_england",
    "builtin_patches",
    "builtin_underground_distribution",
    "canonical_json",
    "canonical_label",
    "classify_value",
    "compare",
    "draw",
    "expected_pair_risk",
    "expected_scenario_risk",
    "expected_threat_risk",
    "grid_pair_risk",
    "histogram",
    "pair_moments",
    "pair_risk_variance",
    "parse_patch",
    "parse_rating_label",
    "parse_scenario",
    "patch_from_document",
    "patch_to_document",
    "percent_reduction",
    "rating_to_range",
    "residual_risk",
    "run_scenario",
    "scenario_from_document",
    "scenario_risk_moments",
    "scenario_to_document",
    "serialize_patch",
    "serialize_scenario",
    "total_resilience",
    "validate_patch",
    "validate_scenario",
]
