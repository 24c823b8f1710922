"""Exact expectations for sampled pair risks, plus a quadrature cross-check.

The closed forms use factor moments only:

- uniform on [lo, hi]:            E[X] = (lo + hi) / 2,
                                  E[X^2] = (lo^2 + lo*hi + hi^2) / 3
- triangular with mode at lo:     E[X] = (2*lo + hi) / 3,
                                  E[X^2] = (3*lo^2 + 2*lo*hi + hi^2) / 6

Since the three factors are independent, the product's variance is
``l^2 * (prod E[X^2] - prod E[X]^2)``.

``grid_pair_risk`` recomputes both moments by a midpoint-rule triple sum
over a lattice of the three ranges, weighted by the sampling density. It
shares no algebra with the closed forms and converges to them as the grid
grows, so the two paths check each other.

The scenario-level helpers compose pair expectations with the same linear
aggregation rules the simulation uses, implemented here from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import BoundedRange, Dimension, Scenario, ThreatSpec, VulnerabilitySpec
from .engine import Aggregation, Distribution


@dataclass(frozen=True)
class PairMoments:
    mean: float
    variance: float


def _factor_mean(r: BoundedRange, distribution: Distribution) -> float:
    if distribution is Distribution.UNIFORM:
        return (r.lo + r.hi) / 2.0
    return (2.0 * r.lo + r.hi) / 3.0


def _factor_second_moment(r: BoundedRange, distribution: Distribution) -> float:
    if distribution is Distribution.UNIFORM:
        return (r.lo * r.lo + r.lo * r.hi + r.hi * r.hi) / 3.0
    return (3.0 * r.lo * r.lo + 2.0 * r.lo * r.hi + r.hi * r.hi) / 6.0


def expected_pair_risk(
    importance: float,
    threat_range: BoundedRange,
    vuln_range: BoundedRange,
    impact_range: BoundedRange,
    distribution: Distribution = Distribution.UNIFORM,
) -> float:
    """Exact mean of ``importance * t * v * i`` under independent draws."""
    product = (
        _factor_mean(threat_range, distribution)
        * _factor_mean(vuln_range, distribution)
        * _factor_mean(impact_range, distribution)
    )
    return importance * product


def pair_risk_variance(
    importance: float,
    threat_range: BoundedRange,
    vuln_range: BoundedRange,
    impact_range: BoundedRange,
    distribution: Distribution = Distribution.UNIFORM,
) -> float:
    """Exact variance of ``importance * t * v * i``."""
    m2 = (
        _factor_second_moment(threat_range, distribution)
        * _factor_second_moment(vuln_range, distribution)
        * _factor_second_moment(impact_range, distribution)
    )
    m1 = (
        _factor_mean(threat_range, distribution)
        * _factor_mean(vuln_range, distribution)
        * _factor_mean(impact_range, distribution)
    )
    return importance * importance * (m2 - m1 * m1)


def _grid_nodes(
    r: BoundedRange, distribution: Distribution, grid_n: int
) -> tuple[np.ndarray, np.ndarray]:
    """Midpoint nodes and quadrature weights for one axis of the lattice.

    Weights come from the unit-interval change of variables, so nothing
    divides by the range width: a subnormal width (hi - lo ~ 5e-324)
    would turn 1/width into inf and the weights into inf * 0 = nan.
    """
    if r.hi == r.lo:
        return np.array([r.lo]), np.array([1.0])
    u = (np.arange(grid_n) + 0.5) / grid_n
    x = r.lo + u * (r.hi - r.lo)
    if distribution is Distribution.UNIFORM:
        w = np.full(grid_n, 1.0 / grid_n)
    else:
        w = 2.0 * (1.0 - u) / grid_n
    return x, w


def grid_pair_risk(
    importance: float,
    threat_range: BoundedRange,
    vuln_range: BoundedRange,
    impact_range: BoundedRange,
    distribution: Distribution = Distribution.UNIFORM,
    grid_n: int = 200,
) -> PairMoments:
    """Midpoint-rule triple integral of the pair product and its square.

    Degenerate axes collapse to a single exact node, so fully degenerate
    ranges reproduce the constant product at any ``grid_n``.
    """
    if grid_n < 2:
        raise ValueError(f"grid_n must be >= 2, got {grid_n!r}")
    tx, tw = _grid_nodes(threat_range, distribution, grid_n)
    vx, vw = _grid_nodes(vuln_range, distribution, grid_n)
    ix, iw = _grid_nodes(impact_range, distribution, grid_n)
    # Triple sum over the lattice: sum_jkm w_j w_k w_m * (x_j y_k z_m)^p,
    # evaluated as a tensor contraction.
    m1 = float(np.einsum("j,k,m->", tw * tx, vw * vx, iw * ix, optimize=True))
    m2 = float(
        np.einsum("j,k,m->", tw * tx * tx, vw * vx * vx, iw * ix * ix, optimize=True)
    )
    mean = importance * m1
    variance = importance * importance * (m2 - m1 * m1)
    return PairMoments(mean=mean, variance=variance)


def pair_moments(
    threat: ThreatSpec,
    vuln: VulnerabilitySpec,
    dimension: Dimension,
    distribution: Distribution = Distribution.UNIFORM,
) -> PairMoments:
    """Closed-form moments for one register pair in one dimension."""
    args = (threat.importance, threat.probability, vuln.probability, vuln.impact(dimension))
    return PairMoments(
        mean=expected_pair_risk(*args, distribution),
        variance=pair_risk_variance(*args, distribution),
    )


def expected_threat_risk(
    threat: ThreatSpec,
    dimension: Dimension,
    aggregation: Aggregation = Aggregation.THREAT_MEAN_OF_MEANS,
    distribution: Distribution = Distribution.UNIFORM,
) -> float:
    """Within-threat composition of pair expectations (mean, or sum for PAIR_SUM)."""
    means = [
        expected_pair_risk(
            threat.importance, threat.probability, v.probability, v.impact(dimension), distribution
        )
        for v in threat.vulnerabilities
    ]
    if not means:
        return 0.0
    if aggregation is Aggregation.PAIR_SUM:
        return float(sum(means))
    return float(sum(means) / len(means))


def expected_scenario_risk(
    scenario: Scenario,
    dimension: Dimension,
    aggregation: Aggregation = Aggregation.THREAT_MEAN_OF_MEANS,
    distribution: Distribution = Distribution.UNIFORM,
) -> float:
    """Exact per-iteration aggregate expectation for one dimension."""
    return scenario_risk_moments(scenario, dimension, aggregation, distribution).mean


def scenario_risk_moments(
    scenario: Scenario,
    dimension: Dimension,
    aggregation: Aggregation = Aggregation.THREAT_MEAN_OF_MEANS,
    distribution: Distribution = Distribution.UNIFORM,
) -> PairMoments:
    """Mean and variance of the per-iteration aggregate for one dimension.

    Pairs are sampled independently, so the aggregate variance is the
    weight-squared sum of pair variances.
    """
    threat_count = len(scenario.threats)
    pair_count = sum(len(t.vulnerabilities) for t in scenario.threats)
    mean = 0.0
    variance = 0.0
    for threat in scenario.threats:
        if not threat.vulnerabilities:
            continue
        if aggregation is Aggregation.THREAT_MEAN_OF_MEANS:
            weight = 1.0 / (len(threat.vulnerabilities) * threat_count)
        elif aggregation is Aggregation.PAIR_MEAN:
            weight = 1.0 / pair_count
        else:
            weight = 1.0
        for vuln in threat.vulnerabilities:
            args = (
                threat.importance,
                threat.probability,
                vuln.probability,
                vuln.impact(dimension),
            )
            mean += weight * expected_pair_risk(*args, distribution)
            variance += weight * weight * pair_risk_variance(*args, distribution)
    return PairMoments(mean=mean, variance=variance)
