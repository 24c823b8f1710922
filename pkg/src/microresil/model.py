"""Domain model for threat/vulnerability/impact risk registers.

A register (:class:`Scenario`) lists threats. Each threat carries an
occurrence-probability range, a fixed importance weight, and one or more
vulnerabilities, each with a conditional-probability range and one impact
range per resilience dimension. Every probability and impact lives in the
closed interval [0, 1]. Qualitative severity labels map onto canonical
numeric sub-ranges of [0, 1] through a seven-level scale.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum

# Ordered boundaries of the seven-level scale. Level k spans
# [RATING_BREAKPOINTS[k], RATING_BREAKPOINTS[k + 1]]; adjacent levels share
# an endpoint.
RATING_BREAKPOINTS: tuple[float, ...] = (0.0, 0.01, 0.05, 0.2, 0.5, 0.7, 0.9, 1.0)


class RatingLevel(Enum):
    """Qualitative severity levels, ordered weakest to strongest."""

    NEGLIGIBLE = "Negligible"
    VERY_LOW = "Very Low"
    LOW = "Low"
    MODERATE = "Moderate"
    CONSIDERABLE = "Considerable"
    HIGH = "High"
    VERY_HIGH = "Very High"

    @property
    def order(self) -> int:
        return _LEVEL_ORDER[self]


_LEVELS: tuple[RatingLevel, ...] = tuple(RatingLevel)
_LEVEL_ORDER: dict[RatingLevel, int] = {level: k for k, level in enumerate(_LEVELS)}
_LEVEL_BY_TEXT: dict[str, RatingLevel] = {level.value.lower(): level for level in _LEVELS}


class Dimension(Enum):
    """The two resilience dimensions a vulnerability can degrade."""

    OPERATIONAL = "operational"
    INFRASTRUCTURAL = "infrastructural"


@dataclass(frozen=True)
class BoundedRange:
    """Closed interval [lo, hi]; valid when 0 <= lo <= hi <= 1.

    Instances are plain values and are not validated on construction;
    :func:`validate_scenario` reports violations so that malformed documents
    can be diagnosed rather than rejected mid-parse.
    """

    lo: float
    hi: float


@dataclass(frozen=True)
class VulnerabilitySpec:
    """One weakness of the site, conditional on a threat occurring."""

    name: str
    probability: BoundedRange
    operational_impact: BoundedRange
    infrastructural_impact: BoundedRange

    def impact(self, dimension: Dimension) -> BoundedRange:
        if dimension is Dimension.OPERATIONAL:
            return self.operational_impact
        return self.infrastructural_impact


@dataclass(frozen=True)
class ThreatSpec:
    """A hazard with its occurrence probability, weight, and vulnerabilities."""

    name: str
    probability: BoundedRange
    importance: float
    vulnerabilities: tuple[VulnerabilitySpec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vulnerabilities", tuple(self.vulnerabilities))


@dataclass(frozen=True)
class Scenario:
    """A complete site risk register."""

    name: str
    description: str
    threats: tuple[ThreatSpec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "threats", tuple(self.threats))


@dataclass(frozen=True)
class ValidationIssue:
    """One structural problem found in a scenario, located by path."""

    path: str
    message: str


def rating_to_range(level: RatingLevel) -> BoundedRange:
    """Canonical numeric range for a single severity level."""
    k = level.order
    return BoundedRange(RATING_BREAKPOINTS[k], RATING_BREAKPOINTS[k + 1])


def parse_rating_label(label: str) -> BoundedRange:
    """Resolve a label like ``"Low"`` or ``"Negligible to Moderate"``.

    A span ``"X to Y"`` covers [lo(X), hi(Y)]. Matching is case-insensitive
    and whitespace-tolerant. Raises ValueError for unknown level names or a
    span whose second level is weaker than its first.
    """
    text = " ".join(label.lower().split())
    parts = text.split(" to ")
    if len(parts) == 1:
        level = _LEVEL_BY_TEXT.get(parts[0])
        if level is None:
            raise ValueError(f"unknown rating label: {label!r}")
        return rating_to_range(level)
    # "Very Low" contains no " to ", so a span splits into exactly two names.
    if len(parts) != 2:
        raise ValueError(f"unknown rating label: {label!r}")
    first = _LEVEL_BY_TEXT.get(parts[0])
    second = _LEVEL_BY_TEXT.get(parts[1])
    if first is None or second is None:
        raise ValueError(f"unknown rating label: {label!r}")
    if second.order < first.order:
        raise ValueError(f"rating span out of order: {label!r}")
    return BoundedRange(rating_to_range(first).lo, rating_to_range(second).hi)


def classify_value(x: float) -> RatingLevel:
    """Map a score in [0, 1] to its severity level.

    Boundary values belong to the level they open (lo-inclusive,
    hi-exclusive), except that 1 classifies as the strongest level.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"value {x!r} outside [0, 1]")
    k = bisect_right(RATING_BREAKPOINTS, x) - 1
    return _LEVELS[min(k, len(_LEVELS) - 1)]


def canonical_label(r: BoundedRange) -> str | None:
    """Label for a range that exactly matches level boundaries, else None."""
    try:
        lo_k = RATING_BREAKPOINTS.index(r.lo)
        hi_k = RATING_BREAKPOINTS.index(r.hi) - 1
    except ValueError:
        return None
    if not 0 <= lo_k <= hi_k < len(_LEVELS):
        return None
    if lo_k == hi_k:
        return _LEVELS[lo_k].value
    return f"{_LEVELS[lo_k].value} to {_LEVELS[hi_k].value}"


def _check_range(r: BoundedRange, path: str, issues: list[ValidationIssue]) -> None:
    ok = (
        isinstance(r.lo, (int, float))
        and isinstance(r.hi, (int, float))
        and 0.0 <= r.lo <= r.hi <= 1.0
    )
    if not ok:
        issues.append(
            ValidationIssue(path, f"range [{r.lo!r}, {r.hi!r}] must satisfy 0 <= lo <= hi <= 1")
        )


def validate_scenario(scenario: Scenario) -> list[ValidationIssue]:
    """Collect every invariant violation; an empty list means valid."""
    issues: list[ValidationIssue] = []
    if not scenario.name:
        issues.append(ValidationIssue("name", "scenario name must be nonempty"))
    if not scenario.threats:
        issues.append(ValidationIssue("threats", "at least one threat is required"))
    seen_threats: set[str] = set()
    for threat in scenario.threats:
        base = f"threats[{threat.name}]"
        if not threat.name:
            issues.append(ValidationIssue("threats", "threat name must be nonempty"))
        elif threat.name in seen_threats:
            issues.append(ValidationIssue(base, "duplicate threat name"))
        seen_threats.add(threat.name)
        if not (
            isinstance(threat.importance, (int, float)) and 0.0 <= threat.importance <= 1.0
        ):
            issues.append(
                ValidationIssue(
                    f"{base}.importance",
                    f"importance {threat.importance!r} must lie in [0, 1]",
                )
            )
        _check_range(threat.probability, f"{base}.probability", issues)
        seen_vulns: set[str] = set()
        for vuln in threat.vulnerabilities:
            vbase = f"{base}.vulnerabilities[{vuln.name}]"
            if not vuln.name:
                issues.append(
                    ValidationIssue(f"{base}.vulnerabilities", "vulnerability name must be nonempty")
                )
            elif vuln.name in seen_vulns:
                issues.append(ValidationIssue(vbase, "duplicate vulnerability name"))
            seen_vulns.add(vuln.name)
            _check_range(vuln.probability, f"{vbase}.probability", issues)
            _check_range(vuln.operational_impact, f"{vbase}.operational_impact", issues)
            _check_range(vuln.infrastructural_impact, f"{vbase}.infrastructural_impact", issues)
    return issues


class ScenarioValidationError(ValueError):
    """Raised when an operation needs a valid scenario and got issues instead."""

    def __init__(self, issues: list[ValidationIssue]):
        self.issues = list(issues)
        lines = "; ".join(f"{i.path}: {i.message}" for i in issues)
        super().__init__(f"invalid scenario: {lines}")
