"""Command-line interface: validate, run, compare, serve.

Exit codes: 0 success, 1 validation problem (malformed or invalid
documents), 2 I/O problem, 3 engine problem. Scenario and patch arguments
take file paths; the prefixes ``builtin:new-england``,
``builtin:underground-distribution``, and ``builtin:harden-generation``
name the bundled register and patches directly.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .datasets import builtin_new_england
from .engine import Aggregation, Distribution, SimConfig, run_scenario
from .interventions import (
    InterventionPatch,
    PatchApplicationError,
    builtin_harden_generation,
    builtin_underground_distribution,
    compare,
)
from .model import Scenario, ScenarioValidationError
from .report import (
    histogram_csv,
    render_comparison_json,
    render_comparison_text,
    render_run_json,
    render_run_text,
)
from .scenario_io import MalformedDocumentError, parse_patch, parse_scenario

EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_ENGINE = 3

_BUILTIN_SCENARIOS = {"builtin:new-england": builtin_new_england}
_BUILTIN_PATCHES = {
    "builtin:underground-distribution": builtin_underground_distribution,
    "builtin:harden-generation": builtin_harden_generation,
}


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _read_bytes(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        _fail(EXIT_IO, f"cannot read {path}: {exc}")
        raise AssertionError  # unreachable


def _load_scenario(path: str, lenient: bool) -> Scenario:
    if path in _BUILTIN_SCENARIOS:
        return _BUILTIN_SCENARIOS[path]()
    data = _read_bytes(path)
    try:
        return parse_scenario(data, lenient=lenient)
    except MalformedDocumentError as exc:
        _fail(EXIT_VALIDATION, f"{path}: {exc}")
    except ScenarioValidationError as exc:
        click.echo(f"error: {path} failed validation:", err=True)
        for issue in exc.issues:
            click.echo(f"  {issue.path}: {issue.message}", err=True)
        sys.exit(EXIT_VALIDATION)
    raise AssertionError  # unreachable


def _load_patch(path: str, lenient: bool) -> InterventionPatch:
    if path in _BUILTIN_PATCHES:
        return _BUILTIN_PATCHES[path]()
    data = _read_bytes(path)
    try:
        return parse_patch(data, lenient=lenient)
    except MalformedDocumentError as exc:
        _fail(EXIT_VALIDATION, f"{path}: {exc}")
        raise AssertionError  # unreachable


def _config_options(fn):
    fn = click.option("--iterations", type=int, default=1_000_000, show_default=True)(fn)
    fn = click.option("--seed", type=int, default=0, show_default=True)(fn)
    fn = click.option(
        "--distribution",
        type=click.Choice([d.value for d in Distribution]),
        default=Distribution.UNIFORM.value,
        show_default=True,
    )(fn)
    fn = click.option(
        "--aggregation",
        type=click.Choice([a.value for a in Aggregation]),
        default=Aggregation.THREAT_MEAN_OF_MEANS.value,
        show_default=True,
    )(fn)
    fn = click.option("--bins", type=int, default=50, show_default=True)(fn)
    fn = click.option("--workers", type=int, default=1, show_default=True)(fn)
    return fn


def _build_config(iterations, seed, distribution, aggregation, bins) -> SimConfig:
    config = SimConfig(
        iterations=iterations,
        seed=seed,
        distribution=Distribution(distribution),
        aggregation=Aggregation(aggregation),
        histogram_bins=bins,
    )
    try:
        config.validate()
    except ValueError as exc:
        _fail(EXIT_ENGINE, str(exc))
    return config


@click.group()
def main() -> None:
    """Monte Carlo resilience scoring for microgrid risk registers."""


@main.command()
@click.argument("scenario_path")
@click.option("--lenient", is_flag=True, help="Ignore unknown document keys.")
def validate(scenario_path: str, lenient: bool) -> None:
    """Check a scenario document and report issues."""
    scenario = _load_scenario(scenario_path, lenient)
    click.echo(
        f"ok: {scenario.name} "
        f"({len(scenario.threats)} threats, "
        f"{sum(len(t.vulnerabilities) for t in scenario.threats)} vulnerability rows)"
    )


@main.command()
@click.argument("scenario_path")
@_config_options
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option(
    "--hist-csv",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write a histogram CSV (bin_lo,bin_hi,count).",
)
@click.option(
    "--hist-source",
    type=click.Choice(["resilience", "operational", "infrastructural"]),
    default="resilience",
    show_default=True,
    help="Which distribution the CSV describes.",
)
@click.option("--lenient", is_flag=True, help="Ignore unknown document keys.")
def run(
    scenario_path: str,
    iterations: int,
    seed: int,
    distribution: str,
    aggregation: str,
    bins: int,
    workers: int,
    fmt: str,
    hist_csv: str | None,
    hist_source: str,
    lenient: bool,
) -> None:
    """Simulate a scenario and print its report."""
    scenario = _load_scenario(scenario_path, lenient)
    config = _build_config(iterations, seed, distribution, aggregation, bins)
    try:
        report = run_scenario(scenario, config, workers=workers)
    except (ValueError, ScenarioValidationError) as exc:
        _fail(EXIT_ENGINE, str(exc))
        raise AssertionError  # unreachable
    if fmt == "json":
        click.echo(render_run_json(report).decode("utf-8"), nl=False)
    else:
        click.echo(render_run_text(report), nl=False)
    if hist_csv is not None:
        hist = {
            "resilience": report.resilience.histogram,
            "operational": report.operational.histogram,
            "infrastructural": report.infrastructural.histogram,
        }[hist_source]
        try:
            Path(hist_csv).write_text(histogram_csv(hist), encoding="utf-8")
        except OSError as exc:
            _fail(EXIT_IO, f"cannot write {hist_csv}: {exc}")


@main.command(name="compare")
@click.argument("scenario_path")
@click.argument("patch_paths", nargs=-1)
@_config_options
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--lenient", is_flag=True, help="Ignore unknown document keys.")
def compare_cmd(
    scenario_path: str,
    patch_paths: tuple[str, ...],
    iterations: int,
    seed: int,
    distribution: str,
    aggregation: str,
    bins: int,
    workers: int,
    fmt: str,
    lenient: bool,
) -> None:
    """Rank intervention patches against a baseline scenario."""
    scenario = _load_scenario(scenario_path, lenient)
    patches = [_load_patch(p, lenient) for p in patch_paths]
    config = _build_config(iterations, seed, distribution, aggregation, bins)
    try:
        result = compare(scenario, patches, config, workers=workers)
    except (PatchApplicationError, ScenarioValidationError) as exc:
        _fail(EXIT_VALIDATION, str(exc))
        raise AssertionError  # unreachable
    except ValueError as exc:
        _fail(EXIT_ENGINE, str(exc))
        raise AssertionError  # unreachable
    if fmt == "json":
        click.echo(render_comparison_json(result).decode("utf-8"), nl=False)
    else:
        click.echo(render_comparison_text(result), nl=False)


@main.command()
@click.argument("scenario_path")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option(
    "--ui-dir",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="Directory of built web UI files to serve at the root path.",
)
@click.option("--lenient", is_flag=True, help="Ignore unknown document keys.")
def serve(scenario_path: str, host: str, port: int, ui_dir: str | None, lenient: bool) -> None:
    """Serve the HTTP API (and the web UI if built) for a scenario."""
    import uvicorn

    from .service import create_app

    scenario = _load_scenario(scenario_path, lenient)
    app = create_app(scenario, static_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")


if __name__ == "__main__":
    main()
