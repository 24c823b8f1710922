"""Rendering of run and comparison results.

Text output shows 4 significant figures and classifies each dimension by
the severity level of the cube root of its mean risk. JSON output is
canonical (key-sorted, fixed layout), so identical results render to
identical bytes. The simulation config is echoed verbatim in reports;
worker count is an execution detail and is deliberately not part of it.
"""

from __future__ import annotations

from .engine import (
    Aggregation,
    DimensionResult,
    Distribution,
    Histogram,
    PairRisk,
    RunReport,
    ScoreSummary,
    SimConfig,
)
from .interventions import ComparisonReport, PatchDeltas
from .model import Dimension, classify_value
from .scenario_io import canonical_json


def _fmt(x: float) -> str:
    return f"{x:.4g}"


def cube_root_class(mean_risk: float) -> str:
    return classify_value(mean_risk ** (1.0 / 3.0)).value


def _histogram_to_document(h: Histogram) -> dict:
    return {"bin_edges": list(h.bin_edges), "counts": list(h.counts)}


def _histogram_from_document(doc: dict) -> Histogram:
    return Histogram(tuple(doc["bin_edges"]), tuple(int(c) for c in doc["counts"]))


def _config_to_document(c: SimConfig) -> dict:
    return {
        "iterations": c.iterations,
        "seed": c.seed,
        "distribution": c.distribution.value,
        "aggregation": c.aggregation.value,
        "histogram_bins": c.histogram_bins,
    }


def _config_from_document(doc: dict) -> SimConfig:
    return SimConfig(
        iterations=int(doc["iterations"]),
        seed=int(doc["seed"]),
        distribution=Distribution(doc["distribution"]),
        aggregation=Aggregation(doc["aggregation"]),
        histogram_bins=int(doc["histogram_bins"]),
    )


def _dimension_to_document(d: DimensionResult) -> dict:
    return {
        "dimension": d.dimension.value,
        "mean": d.mean,
        "std": d.std,
        "min": d.min,
        "max": d.max,
        "cube_root_class": cube_root_class(d.mean),
        "histogram": _histogram_to_document(d.histogram),
        "per_threat_mean": dict(d.per_threat_mean),
        "pairs": [
            {
                "threat": p.threat,
                "vulnerability": p.vulnerability,
                "mean": p.mean,
                "std": p.std,
            }
            for p in d.pairs
        ],
    }


def _dimension_from_document(doc: dict, dimension: Dimension) -> DimensionResult:
    return DimensionResult(
        dimension=dimension,
        mean=float(doc["mean"]),
        std=float(doc["std"]),
        min=float(doc["min"]),
        max=float(doc["max"]),
        histogram=_histogram_from_document(doc["histogram"]),
        per_threat_mean={k: float(v) for k, v in doc["per_threat_mean"].items()},
        pairs=tuple(
            PairRisk(
                threat=p["threat"],
                vulnerability=p["vulnerability"],
                dimension=dimension,
                mean=float(p["mean"]),
                std=float(p["std"]),
            )
            for p in doc["pairs"]
        ),
    )


def run_report_to_document(report: RunReport) -> dict:
    return {
        "scenario": report.scenario,
        "config": _config_to_document(report.config),
        "operational": _dimension_to_document(report.operational),
        "infrastructural": _dimension_to_document(report.infrastructural),
        "resilience": {
            "mean": report.resilience.mean,
            "std": report.resilience.std,
            "min": report.resilience.min,
            "max": report.resilience.max,
            "histogram": _histogram_to_document(report.resilience.histogram),
        },
    }


def run_report_from_document(doc: dict) -> RunReport:
    res = doc["resilience"]
    return RunReport(
        scenario=doc["scenario"],
        config=_config_from_document(doc["config"]),
        operational=_dimension_from_document(doc["operational"], Dimension.OPERATIONAL),
        infrastructural=_dimension_from_document(
            doc["infrastructural"], Dimension.INFRASTRUCTURAL
        ),
        resilience=ScoreSummary(
            mean=float(res["mean"]),
            std=float(res["std"]),
            min=float(res["min"]),
            max=float(res["max"]),
            histogram=_histogram_from_document(res["histogram"]),
        ),
    )


def render_run_json(report: RunReport) -> bytes:
    return canonical_json(run_report_to_document(report))


def render_run_text(report: RunReport) -> str:
    c = report.config
    lines = [
        f"Scenario: {report.scenario}",
        (
            f"Config: iterations={c.iterations} seed={c.seed} "
            f"distribution={c.distribution.value} aggregation={c.aggregation.value} "
            f"bins={c.histogram_bins}"
        ),
    ]
    for title, d in (
        ("Operational risk", report.operational),
        ("Infrastructural risk", report.infrastructural),
    ):
        lines.append(
            f"{title + ':':<24}mean {_fmt(d.mean)} ± {_fmt(d.std)}  "
            f"range [{_fmt(d.min)}, {_fmt(d.max)}]  cube-root class: {cube_root_class(d.mean)}"
        )
    r = report.resilience
    lines.append(
        f"{'Total resilience:':<24}mean {_fmt(r.mean)} ± {_fmt(r.std)}  "
        f"range [{_fmt(r.min)}, {_fmt(r.max)}]"
    )
    return "\n".join(lines) + "\n"


def _deltas_to_document(d: PatchDeltas) -> dict:
    return {
        "op_risk_abs": d.op_risk_abs,
        "op_risk_pct": d.op_risk_pct,
        "infra_risk_abs": d.infra_risk_abs,
        "infra_risk_pct": d.infra_risk_pct,
        "resilience_abs": d.resilience_abs,
    }


def comparison_to_document(comparison: ComparisonReport) -> dict:
    return {
        "baseline": run_report_to_document(comparison.baseline),
        "patches": [
            {
                "name": o.patch.name,
                "description": o.patch.description,
                "report": run_report_to_document(o.report),
                "deltas": _deltas_to_document(o.deltas),
            }
            for o in comparison.outcomes
        ],
        "ranking": list(comparison.ranking),
    }


def render_comparison_json(comparison: ComparisonReport) -> bytes:
    return canonical_json(comparison_to_document(comparison))


def render_comparison_text(comparison: ComparisonReport) -> str:
    b = comparison.baseline
    lines = [
        f"Scenario: {b.scenario}",
        (
            f"Baseline:  op {_fmt(b.operational.mean)}  "
            f"infra {_fmt(b.infrastructural.mean)}  resilience {_fmt(b.resilience.mean)}"
        ),
        "",
        f"{'patch':<28}{'op mean':>10}{'op red%':>9}{'infra mean':>12}"
        f"{'infra red%':>11}{'resilience':>12}{'res gain':>11}",
    ]
    for o in comparison.outcomes:
        d = o.deltas
        op_pct = "n/a" if d.op_risk_pct is None else _fmt(d.op_risk_pct)
        infra_pct = "n/a" if d.infra_risk_pct is None else _fmt(d.infra_risk_pct)
        lines.append(
            f"{o.patch.name:<28}{_fmt(o.report.operational.mean):>10}{op_pct:>9}"
            f"{_fmt(o.report.infrastructural.mean):>12}{infra_pct:>11}"
            f"{_fmt(o.report.resilience.mean):>12}{_fmt(d.resilience_abs):>11}"
        )
    lines.append("")
    lines.append(
        "Ranking: " + ", ".join(f"{k + 1}. {name}" for k, name in enumerate(comparison.ranking))
    )
    return "\n".join(lines) + "\n"


def histogram_csv(h: Histogram) -> str:
    rows = ["bin_lo,bin_hi,count"]
    for k, count in enumerate(h.counts):
        rows.append(f"{h.bin_edges[k]!r},{h.bin_edges[k + 1]!r},{count}")
    return "\n".join(rows) + "\n"
