"""HTTP interface for interactive trade-off work.

`create_app` wraps one project in a FastAPI application. The project is
held as an immutable snapshot behind a lock; every mutation produces a new
snapshot and bumps a monotonically increasing revision, which each response
reports. Writers may send the revision they based their edit on and get a
409 back when someone else committed in between.

All error responses share one envelope:

    {"error": {"code": "<machine readable>", "message": "<human readable>"}}

Unknown ids map to 404, stale revisions to 409, everything else that the
domain rejects to 422.
"""

from __future__ import annotations

import dataclasses
import threading
from typing import Any, Callable

from fastapi import Body, FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .analysis import (
    alternative_conflicts,
    alternative_dpn,
    project_comparison,
    rams_for_alternative,
    tree_for_alternative,
)
from .dpn import DependabilityProperty, TradeoffCriteria
from .errors import (
    DepraError,
    DomainError,
    MissingEvaluationsError,
    NotFoundError,
    ProjectParseError,
    RevisionConflictError,
)
from .project_io import (
    Project,
    comparison_to_json_dict,
    criteria_from_json_dict,
    criteria_to_json_dict,
    dpn_result_to_json_dict,
    project_to_json_dict,
    rams_to_json_dict,
    save_project,
    validate_project,
)


class ProjectSession:
    """One project snapshot plus revision bookkeeping, safe for threads."""

    def __init__(self, project: Project, path: str | None = None) -> None:
        validate_project(project)
        self._lock = threading.Lock()
        self._project = project
        self._revision = 1
        self.path = path

    def snapshot(self) -> tuple[Project, int]:
        with self._lock:
            return self._project, self._revision

    def mutate(
        self,
        change: Callable[[Project], Project],
        expected_revision: int | None = None,
    ) -> tuple[Project, int]:
        """Apply `change` to the current snapshot and commit the result.

        The new project is fully validated before it replaces the old one, so
        a failing change leaves the session untouched.
        """
        with self._lock:
            if expected_revision is not None and expected_revision != self._revision:
                raise RevisionConflictError(self._revision, expected_revision)
            candidate = change(self._project)
            validate_project(candidate)
            self._project = candidate
            self._revision += 1
            return self._project, self._revision

    def save(self, path: str | None, full_precision: bool = False) -> str:
        with self._lock:
            target = path or self.path
            if target is None:
                raise DomainError("no target path: session was started without one")
            try:
                save_project(self._project, target, full_precision=full_precision)
            except OSError as error:
                raise DomainError(f"cannot write '{target}': {error}") from None
            return str(target)


def _property_names(project: Project) -> set[str]:
    return {p.name for p in project.properties}


def _require_property(project: Project, name: str) -> None:
    if name not in _property_names(project):
        raise NotFoundError(f"no property '{name}'")


def _with_evaluation(
    project: Project, alternative_id: str, property_name: str, criteria: TradeoffCriteria
) -> Project:
    alternative = project.alternative(alternative_id)
    _require_property(project, property_name)
    evaluations = dict(alternative.evaluations)
    evaluations[property_name] = criteria
    replaced = dataclasses.replace(alternative, evaluations=evaluations)
    alternatives = tuple(
        replaced if a.id == alternative_id else a for a in project.alternatives
    )
    return dataclasses.replace(project, alternatives=alternatives)


def _merge_criteria(base: TradeoffCriteria | None, partial: Any, path: str) -> TradeoffCriteria:
    """Overlay a partial JSON criteria object onto an existing one.

    Keys present in `partial` win; a null value removes the key entirely, so
    clients can clear limits or enum picks without resending everything.
    """
    if not isinstance(partial, dict):
        raise ProjectParseError(f"{path}: expected an object")
    merged: dict = {}
    if base is not None:
        merged.update(criteria_to_json_dict(base, full_precision=True))
    for key, value in partial.items():
        if value is None:
            merged.pop(key, None)
        else:
            merged[key] = value
    return criteria_from_json_dict(merged, path)


def _parse_properties(data: Any, path: str) -> tuple[DependabilityProperty, ...]:
    if not isinstance(data, list) or not data:
        raise ProjectParseError(f"{path}: expected a non-empty array")
    properties = []
    for index, item in enumerate(data):
        where = f"{path}[{index}]"
        if not isinstance(item, dict):
            raise ProjectParseError(f"{where}: expected an object")
        name = item.get("name")
        weight = item.get("weight")
        if not isinstance(name, str) or not name:
            raise ProjectParseError(f"{where}.name: expected a non-empty string")
        if isinstance(weight, bool) or not isinstance(weight, (int, float)):
            raise ProjectParseError(f"{where}.weight: expected a number")
        properties.append(DependabilityProperty(name, float(weight)))
    return tuple(properties)


def _expected_revision(payload: Any) -> int | None:
    if not isinstance(payload, dict):
        raise ProjectParseError("$: expected a JSON object body")
    revision = payload.get("revision")
    if revision is None:
        return None
    if isinstance(revision, bool) or not isinstance(revision, int):
        raise ProjectParseError("$.revision: expected an integer")
    return revision


def _comparison_or_none(project: Project) -> dict | None:
    try:
        return comparison_to_json_dict(project_comparison(project))
    except DomainError:
        return None


def _status_for(error: DepraError) -> int:
    if isinstance(error, NotFoundError):
        return 404
    if isinstance(error, RevisionConflictError):
        return 409
    return 422


def create_app(project: Project, path: str | None = None) -> FastAPI:
    """Build the application serving one project."""
    session = ProjectSession(project, path=path)
    app = FastAPI(title="depra", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.session = session

    @app.exception_handler(DepraError)
    async def _domain_error(_request: Request, error: DepraError) -> JSONResponse:
        return JSONResponse(
            status_code=_status_for(error),
            content={"error": {"code": error.code, "message": str(error)}},
        )

    @app.exception_handler(RequestValidationError)
    async def _shape_error(_request: Request, error: RequestValidationError) -> JSONResponse:
        return JSONResponse(
            status_code=422,
            content={"error": {"code": "parse", "message": str(error.errors()[:1])}},
        )

    @app.get("/project")
    def get_project() -> dict:
        snapshot, revision = session.snapshot()
        return {"revision": revision, "project": project_to_json_dict(snapshot)}

    @app.get("/alternatives/{alternative_id}/rams")
    def get_rams(alternative_id: str) -> dict:
        snapshot, revision = session.snapshot()
        tree = tree_for_alternative(snapshot, alternative_id)
        results = rams_for_alternative(snapshot, alternative_id)
        return {
            "revision": revision,
            "alternative": alternative_id,
            "top": tree.top,
            "nodes": {
                node_id: rams_to_json_dict(result) for node_id, result in results.items()
            },
        }

    @app.get("/dpn")
    def get_dpn() -> dict:
        snapshot, revision = session.snapshot()
        return {
            "revision": revision,
            "comparison": comparison_to_json_dict(project_comparison(snapshot)),
        }

    @app.put("/alternatives/{alternative_id}/evaluations/{property_name}")
    def put_evaluation(
        alternative_id: str, property_name: str, payload: dict = Body(...)
    ) -> dict:
        expected = _expected_revision(payload)
        if "criteria" not in payload:
            raise ProjectParseError("$.criteria: missing")
        criteria = criteria_from_json_dict(payload["criteria"], "$.criteria")
        updated, revision = session.mutate(
            lambda current: _with_evaluation(
                current, alternative_id, property_name, criteria
            ),
            expected_revision=expected,
        )
        try:
            result = dpn_result_to_json_dict(alternative_dpn(updated, alternative_id))
            missing: list[str] = []
        except MissingEvaluationsError as error:
            result = None
            missing = list(error.missing)
        response: dict = {"revision": revision, "result": result}
        if missing:
            response["missing"] = missing
        return response

    @app.put("/properties")
    def put_properties(payload: dict = Body(...)) -> dict:
        expected = _expected_revision(payload)
        properties = _parse_properties(payload.get("properties"), "$.properties")
        updated, revision = session.mutate(
            lambda current: dataclasses.replace(current, properties=properties),
            expected_revision=expected,
        )
        return {"revision": revision, "comparison": _comparison_or_none(updated)}

    @app.post("/whatif")
    def post_whatif(payload: dict = Body(...)) -> dict:
        snapshot, revision = session.snapshot()
        if not isinstance(payload, dict):
            raise ProjectParseError("$: expected a JSON object body")
        overrides = payload.get("overrides", [])
        if not isinstance(overrides, list):
            raise ProjectParseError("$.overrides: expected an array")
        candidate = snapshot
        for index, override in enumerate(overrides):
            where = f"$.overrides[{index}]"
            if not isinstance(override, dict):
                raise ProjectParseError(f"{where}: expected an object")
            alternative_id = override.get("alternative")
            property_name = override.get("property")
            if not isinstance(alternative_id, str):
                raise ProjectParseError(f"{where}.alternative: expected a string")
            if not isinstance(property_name, str):
                raise ProjectParseError(f"{where}.property: expected a string")
            alternative = candidate.alternative(alternative_id)
            _require_property(candidate, property_name)
            criteria = _merge_criteria(
                alternative.evaluations.get(property_name),
                override.get("criteria", {}),
                f"{where}.criteria",
            )
            candidate = _with_evaluation(
                candidate, alternative_id, property_name, criteria
            )
        return {
            "revision": revision,
            "comparison": comparison_to_json_dict(project_comparison(candidate)),
        }

    @app.get("/conflicts")
    def get_conflicts(
        from_id: str = Query(alias="from"), to_id: str = Query(alias="to")
    ) -> dict:
        snapshot, revision = session.snapshot()
        pairs = alternative_conflicts(snapshot, from_id, to_id)
        return {
            "revision": revision,
            "from": from_id,
            "to": to_id,
            "pairs": [list(pair) for pair in pairs],
            "before": dpn_result_to_json_dict(alternative_dpn(snapshot, from_id)),
            "after": dpn_result_to_json_dict(alternative_dpn(snapshot, to_id)),
        }

    @app.post("/save")
    def post_save(payload: dict | None = Body(default=None)) -> dict:
        data = payload or {}
        if not isinstance(data, dict):
            raise ProjectParseError("$: expected a JSON object body")
        target = data.get("path")
        if target is not None and not isinstance(target, str):
            raise ProjectParseError("$.path: expected a string")
        full = bool(data.get("full_precision", False))
        written = session.save(target, full_precision=full)
        _, revision = session.snapshot()
        return {"revision": revision, "path": written}

    return app
