"""Seeded Monte Carlo evaluation of a risk register.

For every (threat, vulnerability) pair and each resilience dimension the
engine draws the three range-bounded factors, forms the weighted product
``importance * threat_prob * vuln_prob * impact``, and aggregates the pair
values into one score per iteration. Residual risk converts to resilience
as ``1 - (operational + infrastructural) / 2``.

Determinism contract: each (dimension, threat index, vulnerability index)
triple owns a private random substream spawned from the master seed, and
per-iteration accumulation always happens in register order. Reports are
therefore bit-identical for a fixed (scenario, config) no matter how many
workers execute the pair draws.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import numpy as np

from .model import (
    BoundedRange,
    Dimension,
    Scenario,
    ScenarioValidationError,
    ThreatSpec,
    VulnerabilitySpec,
    validate_scenario,
)


class Distribution(Enum):
    """How factor values are drawn within their ranges."""

    UNIFORM = "uniform"
    TRIANGULAR_LOW_MODE = "triangular_low_mode"


class Aggregation(Enum):
    """How per-pair values combine into one score per iteration.

    All three are linear, so the aggregate mean equals the same composition
    of per-pair means.

    - THREAT_MEAN_OF_MEANS: mean over each threat's pairs, then mean over
      all threats (threats with zero importance stay in the denominator).
    - PAIR_MEAN: mean over all pairs, ignoring threat grouping.
    - PAIR_SUM: plain sum over all pairs. Sums are not clamped, so on large
      registers a per-iteration sum can exceed 1; this mode is meant for
      sensitivity work, not for the calibrated resilience scale.
    """

    THREAT_MEAN_OF_MEANS = "threat_mean_of_means"
    PAIR_MEAN = "pair_mean"
    PAIR_SUM = "pair_sum"


_MAX_SEED = 2**64


@dataclass(frozen=True)
class SimConfig:
    """Simulation parameters; the seed fully determines all draws."""

    iterations: int = 1_000_000
    seed: int = 0
    distribution: Distribution = Distribution.UNIFORM
    aggregation: Aggregation = Aggregation.THREAT_MEAN_OF_MEANS
    histogram_bins: int = 50

    def validate(self) -> None:
        if not isinstance(self.iterations, int) or self.iterations < 1:
            raise ValueError(f"iterations must be a positive integer, got {self.iterations!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < _MAX_SEED:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if not isinstance(self.distribution, Distribution):
            raise ValueError(f"unknown distribution: {self.distribution!r}")
        if not isinstance(self.aggregation, Aggregation):
            raise ValueError(f"unknown aggregation: {self.aggregation!r}")
        if not isinstance(self.histogram_bins, int) or self.histogram_bins < 1:
            raise ValueError(f"histogram_bins must be >= 1, got {self.histogram_bins!r}")


@dataclass(frozen=True)
class Histogram:
    """Equal-width bins spanning [observed min, observed max]."""

    bin_edges: tuple[float, ...]
    counts: tuple[int, ...]


@dataclass(frozen=True)
class PairRisk:
    """Sampled moments of one (threat, vulnerability, dimension) product."""

    threat: str
    vulnerability: str
    dimension: Dimension
    mean: float
    std: float


@dataclass(frozen=True)
class DimensionResult:
    """Aggregate statistics for one resilience dimension."""

    dimension: Dimension
    mean: float
    std: float
    min: float
    max: float
    histogram: Histogram
    per_threat_mean: dict[str, float]
    pairs: tuple[PairRisk, ...]


@dataclass(frozen=True)
class ScoreSummary:
    """Statistics of the per-iteration total resilience score."""

    mean: float
    std: float
    min: float
    max: float
    histogram: Histogram


@dataclass(frozen=True)
class RunReport:
    scenario: str
    config: SimConfig
    operational: DimensionResult
    infrastructural: DimensionResult
    resilience: ScoreSummary


def residual_risk(
    importance: float, threat_prob: float, vuln_prob: float, impact: float
) -> float:
    """Product form of one pair's residual risk; all factors in [0, 1]."""
    for label, value in (
        ("importance", importance),
        ("threat_prob", threat_prob),
        ("vuln_prob", vuln_prob),
        ("impact", impact),
    ):
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"{label} {value!r} outside [0, 1]")
    return importance * threat_prob * vuln_prob * impact


def total_resilience(operational_risk: float, infrastructural_risk: float) -> float:
    """Combine the two dimension risks into the total resilience score."""
    for label, value in (
        ("operational_risk", operational_risk),
        ("infrastructural_risk", infrastructural_risk),
    ):
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"{label} {value!r} outside [0, 1]")
    return 1.0 - (operational_risk + infrastructural_risk) / 2.0


def draw(
    r: BoundedRange,
    distribution: Distribution,
    rng: np.random.Generator,
    size: int | None = None,
):
    """Draw from a range; degenerate ranges always yield ``lo``.

    TRIANGULAR_LOW_MODE uses the inverse CDF of the triangular density with
    mode at ``lo``: x = hi - (hi - lo) * sqrt(1 - u).
    """
    u = rng.random(size)
    if distribution is Distribution.UNIFORM:
        return r.lo + (r.hi - r.lo) * u
    return r.hi - (r.hi - r.lo) * np.sqrt(1.0 - u)


def histogram(samples: Iterable[float] | np.ndarray, bins: int) -> Histogram:
    """Bin samples into equal-width counts covering the observed extent."""
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins!r}")
    if isinstance(samples, np.ndarray):
        arr = samples.astype(float, copy=False)
    else:
        arr = np.fromiter(iter(samples), dtype=float)
    if arr.size == 0:
        raise ValueError("cannot build a histogram from an empty stream")
    lo = float(arr.min())
    hi = float(arr.max())
    if lo == hi:
        counts = np.zeros(bins, dtype=np.int64)
        counts[0] = arr.size
        edges = np.linspace(lo, hi, bins + 1)
    else:
        counts, edges = np.histogram(arr, bins=bins, range=(lo, hi))
    return Histogram(tuple(float(e) for e in edges), tuple(int(c) for c in counts))


def _transform(u: np.ndarray, r: BoundedRange, distribution: Distribution) -> np.ndarray:
    if distribution is Distribution.UNIFORM:
        return r.lo + (r.hi - r.lo) * u
    return r.hi - (r.hi - r.lo) * np.sqrt(1.0 - u)


@dataclass(frozen=True)
class _PairTask:
    dim_index: int
    dimension: Dimension
    threat_index: int
    threat: ThreatSpec
    vuln_index: int
    vuln: VulnerabilitySpec
    weight: float


def _pair_weight(aggregation: Aggregation, pair_count_in_threat: int, totals: tuple[int, int]) -> float:
    threat_count, pair_count = totals
    if aggregation is Aggregation.THREAT_MEAN_OF_MEANS:
        return 1.0 / (pair_count_in_threat * threat_count)
    if aggregation is Aggregation.PAIR_MEAN:
        return 1.0 / pair_count
    return 1.0


def _compute_pair(task: _PairTask, config: SimConfig) -> tuple[PairRisk, np.ndarray]:
    seq = np.random.SeedSequence(
        entropy=config.seed,
        spawn_key=(task.dim_index, task.threat_index, task.vuln_index),
    )
    rng = np.random.default_rng(seq)
    u = rng.random((3, config.iterations))
    t = _transform(u[0], task.threat.probability, config.distribution)
    v = _transform(u[1], task.vuln.probability, config.distribution)
    i = _transform(u[2], task.vuln.impact(task.dimension), config.distribution)
    samples = task.threat.importance * (t * v * i)
    stats = PairRisk(
        threat=task.threat.name,
        vulnerability=task.vuln.name,
        dimension=task.dimension,
        mean=float(samples.mean()),
        std=float(samples.std()),
    )
    return stats, task.weight * samples


def _per_threat_means(
    scenario: Scenario, pairs: tuple[PairRisk, ...], aggregation: Aggregation
) -> dict[str, float]:
    by_threat: dict[str, list[float]] = {t.name: [] for t in scenario.threats}
    for p in pairs:
        by_threat[p.threat].append(p.mean)
    out: dict[str, float] = {}
    for threat in scenario.threats:
        means = by_threat[threat.name]
        if not means:
            out[threat.name] = 0.0
        elif aggregation is Aggregation.PAIR_SUM:
            out[threat.name] = float(sum(means))
        else:
            out[threat.name] = float(sum(means) / len(means))
    return out


def run_scenario(scenario: Scenario, config: SimConfig, workers: int = 1) -> RunReport:
    """Simulate a register and summarize both dimensions plus resilience.

    ``workers`` only schedules the per-pair draws; it never changes the
    report. Pair substreams are self-contained and their contributions are
    consumed in register order regardless of completion order.
    """
    config.validate()
    if not isinstance(workers, int) or workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers!r}")
    issues = validate_scenario(scenario)
    if issues:
        raise ScenarioValidationError(issues)

    threat_count = len(scenario.threats)
    pair_count = sum(len(t.vulnerabilities) for t in scenario.threats)

    # A threat without vulnerabilities simply contributes nothing; it stays
    # in the THREAT_MEAN_OF_MEANS denominator via threat_count.
    tasks: list[_PairTask] = []
    for dim_index, dimension in enumerate(Dimension):
        for t_index, threat in enumerate(scenario.threats):
            if not threat.vulnerabilities:
                continue
            w = _pair_weight(
                config.aggregation, len(threat.vulnerabilities), (threat_count, pair_count)
            )
            for v_index, vuln in enumerate(threat.vulnerabilities):
                tasks.append(
                    _PairTask(dim_index, dimension, t_index, threat, v_index, vuln, w)
                )

    acc = {
        Dimension.OPERATIONAL: np.zeros(config.iterations),
        Dimension.INFRASTRUCTURAL: np.zeros(config.iterations),
    }
    pair_stats: dict[Dimension, list[PairRisk]] = {
        Dimension.OPERATIONAL: [],
        Dimension.INFRASTRUCTURAL: [],
    }

    def consume(result: tuple[PairRisk, np.ndarray], dimension: Dimension) -> None:
        stats, contribution = result
        pair_stats[dimension].append(stats)
        acc[dimension] += contribution

    if workers == 1:
        for task in tasks:
            consume(_compute_pair(task, config), task.dimension)
    else:
        # Bounded window keeps memory flat; results are consumed strictly in
        # task order so float accumulation is scheduling-independent.
        with ThreadPoolExecutor(max_workers=workers) as pool:
            queue: deque = deque()
            it = iter(tasks)

            def refill() -> None:
                while len(queue) < 2 * workers:
                    task = next(it, None)
                    if task is None:
                        return
                    queue.append((task, pool.submit(_compute_pair, task, config)))

            refill()
            while queue:
                task, fut = queue.popleft()
                consume(fut.result(), task.dimension)
                refill()

    dim_results: dict[Dimension, DimensionResult] = {}
    for dimension in Dimension:
        values = acc[dimension]
        dim_results[dimension] = DimensionResult(
            dimension=dimension,
            mean=float(values.mean()),
            std=float(values.std()),
            min=float(values.min()),
            max=float(values.max()),
            histogram=histogram(values, config.histogram_bins),
            per_threat_mean=_per_threat_means(
                scenario, tuple(pair_stats[dimension]), config.aggregation
            ),
            pairs=tuple(pair_stats[dimension]),
        )

    res = 1.0 - 0.5 * (acc[Dimension.OPERATIONAL] + acc[Dimension.INFRASTRUCTURAL])
    resilience = ScoreSummary(
        mean=float(res.mean()),
        std=float(res.std()),
        min=float(res.min()),
        max=float(res.max()),
        histogram=histogram(res, config.histogram_bins),
    )

    return RunReport(
        scenario=scenario.name,
        config=config,
        operational=dim_results[Dimension.OPERATIONAL],
        infrastructural=dim_results[Dimension.INFRASTRUCTURAL],
        resilience=resilience,
    )
