"""HTTP JSON API over the engine.

All responses are canonical JSON, so identical requests against identical
state produce byte-identical bodies. Failures use one envelope:
``{"code", "message", "path", "issues"}`` where ``code`` is drawn from a
closed set and ``issues`` lists located validation problems (empty when
not applicable). The scenario held by the service is replaced atomically
by PUT; running simulations never mutate it.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from .datasets import builtin_new_england
from .engine import Aggregation, Distribution, SimConfig, run_scenario
from .interventions import (
    PatchApplicationError,
    builtin_patches,
    compare,
)
from .model import Scenario, ScenarioValidationError, validate_scenario
from .report import comparison_to_document, run_report_to_document
from .scenario_io import (
    MalformedDocumentError,
    canonical_json,
    patch_from_document,
    patch_to_document,
    scenario_from_document,
    scenario_to_document,
)

ERROR_CODES = (
    "malformed_document",
    "validation_error",
    "unresolvable_reference",
    "invalid_config",
    "engine_error",
    "not_found",
    "bad_request",
)


class ApiProblem(Exception):
    def __init__(
        self,
        code: str,
        message: str,
        path: str = "",
        status: int = 400,
        issues: list[dict] | None = None,
    ):
        assert code in ERROR_CODES
        self.code = code
        self.message = message
        self.path = path
        self.status = status
        self.issues = issues or []
        super().__init__(message)


def _json_response(doc: Any, status: int = 200) -> Response:
    return Response(
        content=canonical_json(doc), status_code=status, media_type="application/json"
    )


def _problem_response(problem: ApiProblem) -> Response:
    return _json_response(
        {
            "code": problem.code,
            "message": problem.message,
            "path": problem.path,
            "issues": problem.issues,
        },
        status=problem.status,
    )


_CONFIG_KEYS = {"iterations", "seed", "distribution", "aggregation", "histogram_bins", "workers"}


def _config_from_body(obj: dict, extra_allowed: set[str] = frozenset()) -> tuple[SimConfig, int]:
    unknown = obj.keys() - _CONFIG_KEYS - extra_allowed
    if unknown:
        raise ApiProblem("bad_request", f"unknown keys: {sorted(unknown)}", "$")
    defaults = SimConfig()
    try:
        config = SimConfig(
            iterations=obj.get("iterations", defaults.iterations),
            seed=obj.get("seed", defaults.seed),
            distribution=Distribution(obj.get("distribution", defaults.distribution.value)),
            aggregation=Aggregation(obj.get("aggregation", defaults.aggregation.value)),
            histogram_bins=obj.get("histogram_bins", defaults.histogram_bins),
        )
        config.validate()
        workers = obj.get("workers", 1)
        if not isinstance(workers, int) or workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers!r}")
    except ValueError as exc:
        raise ApiProblem("invalid_config", str(exc), "$") from exc
    return config, workers


async def _body_object(request: Request) -> dict:
    raw = await request.body()
    if not raw:
        return {}
    try:
        doc = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, ValueError) as exc:
        raise ApiProblem("malformed_document", f"invalid JSON body: {exc}", "$") from exc
    if not isinstance(doc, dict):
        raise ApiProblem("malformed_document", "request body must be a JSON object", "$")
    return doc


def create_app(
    scenario: Scenario | None = None, static_dir: str | Path | None = None
) -> FastAPI:
    """Build the service around an initial scenario (built-in by default).

    ``static_dir``, when given, must be a directory of built web UI files;
    they are served at the root path, beside the API.
    """
    app = FastAPI(title="microresil", docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.scenario = scenario if scenario is not None else builtin_new_england()
    app.state.lock = threading.Lock()

    @app.exception_handler(ApiProblem)
    async def _on_problem(_request: Request, exc: ApiProblem) -> Response:
        return _problem_response(exc)

    @app.exception_handler(StarletteHTTPException)
    async def _on_http_error(_request: Request, exc: StarletteHTTPException) -> Response:
        code = "not_found" if exc.status_code == 404 else "bad_request"
        return _problem_response(
            ApiProblem(code, str(exc.detail), "", status=exc.status_code)
        )

    @app.get("/api/scenario")
    def get_scenario() -> Response:
        return _json_response(scenario_to_document(app.state.scenario))

    @app.put("/api/scenario")
    async def put_scenario(request: Request) -> Response:
        raw = await request.body()
        try:
            doc = json.loads(raw.decode("utf-8")) if raw else None
        except (UnicodeDecodeError, ValueError) as exc:
            raise ApiProblem("malformed_document", f"invalid JSON body: {exc}", "$") from exc
        try:
            candidate = scenario_from_document(doc)
        except MalformedDocumentError as exc:
            raise ApiProblem("malformed_document", str(exc), exc.path) from exc
        issues = validate_scenario(candidate)
        if issues:
            raise ApiProblem(
                "validation_error",
                "scenario failed validation",
                "$",
                issues=[{"path": i.path, "message": i.message} for i in issues],
            )
        with app.state.lock:
            app.state.scenario = candidate
        return _json_response(scenario_to_document(candidate))

    @app.get("/api/builtin/new-england")
    def get_builtin() -> Response:
        return _json_response(scenario_to_document(builtin_new_england()))

    @app.get("/api/patches/builtin")
    def get_builtin_patches() -> Response:
        return _json_response([patch_to_document(p) for p in builtin_patches()])

    @app.post("/api/run")
    async def post_run(request: Request) -> Response:
        body = await _body_object(request)
        config, workers = _config_from_body(body)
        current = app.state.scenario
        try:
            report = run_scenario(current, config, workers=workers)
        except ScenarioValidationError as exc:
            raise ApiProblem(
                "validation_error",
                str(exc),
                "$",
                issues=[{"path": i.path, "message": i.message} for i in exc.issues],
            ) from exc
        except ValueError as exc:
            raise ApiProblem("engine_error", str(exc), "$", status=500) from exc
        return _json_response(run_report_to_document(report))

    @app.post("/api/compare")
    async def post_compare(request: Request) -> Response:
        body = await _body_object(request)
        patches_doc = body.pop("patches", None)
        if not isinstance(patches_doc, list):
            raise ApiProblem("bad_request", "body must carry a 'patches' array", "$.patches")
        config, workers = _config_from_body(body)
        try:
            patches = [
                patch_from_document(doc) for doc in patches_doc
            ]
        except MalformedDocumentError as exc:
            raise ApiProblem("malformed_document", str(exc), exc.path) from exc
        current = app.state.scenario
        try:
            result = compare(current, patches, config, workers=workers)
        except PatchApplicationError as exc:
            raise ApiProblem("unresolvable_reference", str(exc), exc.path) from exc
        except ScenarioValidationError as exc:
            raise ApiProblem(
                "validation_error",
                str(exc),
                "$",
                issues=[{"path": i.path, "message": i.message} for i in exc.issues],
            ) from exc
        except ValueError as exc:
            raise ApiProblem("engine_error", str(exc), "$", status=500) from exc
        return _json_response(comparison_to_document(result))

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
