"""Project documents: one JSON file holding a whole analysis.

A project bundles the dependability goal chain (goals, scenarios,
functional requirements, hazards), the weighted property set, FMECA and
FMEDA tables, the design alternatives with their trade-off evaluations, and
the fault tree models the alternatives reference.

The on-disk format is UTF-8 JSON, schema_version "1", written canonically:
fixed key order, maps sorted by key, empty/default fields omitted, reals
quantized to 6 significant digits unless full precision is requested. Two
saves of the same project produce identical bytes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Mapping

from .cft_eval import RamsResult
from .dpn import (
    Alternative,
    Benefit,
    ComparisonReport,
    CostBracket,
    DependabilityProperty,
    DpnResult,
    Drawback,
    FurtherAction,
    ObjectiveVerdict,
    Quantity,
    QuantityKind,
    TimeBracket,
    TradeoffCriteria,
)
from .errors import (
    DanglingReferenceError,
    NotFoundError,
    ProjectParseError,
    SchemaVersionError,
)
from .model import (
    BasicEvent,
    ComponentDefinition,
    ComponentInstance,
    FaultTreeModel,
    FlatTree,
    Gate,
    GateKind,
)
from .risk_tables import FmecaEntry, FmedaEntry, RiskRevision

SCHEMA_VERSION = "1"


# ---------------------------------------------------------------------------
# Trace chain
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Goal:
    id: str
    text: str
    limits: str = ""


@dataclass(frozen=True)
class Scenario:
    id: str
    text: str
    goal: str | None = None


@dataclass(frozen=True)
class Requirement:
    id: str
    text: str
    scenario: str | None = None


@dataclass(frozen=True)
class Hazard:
    id: str
    text: str
    requirement: str | None = None


@dataclass(frozen=True)
class Project:
    """Everything one dependability analysis needs, as one value."""

    name: str
    properties: tuple[DependabilityProperty, ...] = ()
    goals: tuple[Goal, ...] = ()
    scenarios: tuple[Scenario, ...] = ()
    requirements: tuple[Requirement, ...] = ()
    hazards: tuple[Hazard, ...] = ()
    fmeca: tuple[FmecaEntry, ...] = ()
    fmeda: tuple[FmedaEntry, ...] = ()
    alternatives: tuple[Alternative, ...] = ()
    fault_trees: Mapping[str, FaultTreeModel] = field(default_factory=dict)
    description: str = ""
    schema_version: str = SCHEMA_VERSION

    def __post_init__(self):
        object.__setattr__(self, "properties", tuple(self.properties))
        object.__setattr__(self, "goals", tuple(self.goals))
        object.__setattr__(self, "scenarios", tuple(self.scenarios))
        object.__setattr__(self, "requirements", tuple(self.requirements))
        object.__setattr__(self, "hazards", tuple(self.hazards))
        object.__setattr__(self, "fmeca", tuple(self.fmeca))
        object.__setattr__(self, "fmeda", tuple(self.fmeda))
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "fault_trees", dict(self.fault_trees))

    def alternative(self, alternative_id: str) -> Alternative:
        for alternative in self.alternatives:
            if alternative.id == alternative_id:
                return alternative
        raise NotFoundError(f"no alternative '{alternative_id}'")


def validate_project(project: Project) -> None:
    """Check every cross-reference; raise DanglingReferenceError on the first hole."""

    def unique(ids: list[str], what: str) -> None:
        seen: set[str] = set()
        for item_id in ids:
            if item_id in seen:
                raise DanglingReferenceError(f"duplicate {what} '{item_id}'")
            seen.add(item_id)

    unique([p.name for p in project.properties], "property")
    unique([g.id for g in project.goals], "goal id")
    unique([s.id for s in project.scenarios], "scenario id")
    unique([r.id for r in project.requirements], "requirement id")
    unique([h.id for h in project.hazards], "hazard id")
    unique([e.id for e in project.fmeca], "fmeca id")
    unique([e.id for e in project.fmeda], "fmeda id")
    unique([a.id for a in project.alternatives], "alternative id")

    goal_ids = {g.id for g in project.goals}
    scenario_ids = {s.id for s in project.scenarios}
    requirement_ids = {r.id for r in project.requirements}
    property_names = {p.name for p in project.properties}
    alternative_ids = {a.id for a in project.alternatives}

    for scenario in project.scenarios:
        if scenario.goal is not None and scenario.goal not in goal_ids:
            raise DanglingReferenceError(
                f"scenario '{scenario.id}' traces to unknown goal '{scenario.goal}'"
            )
    for requirement in project.requirements:
        if requirement.scenario is not None and requirement.scenario not in scenario_ids:
            raise DanglingReferenceError(
                f"requirement '{requirement.id}' traces to unknown scenario "
                f"'{requirement.scenario}'"
            )
    for hazard in project.hazards:
        if hazard.requirement is not None and hazard.requirement not in requirement_ids:
            raise DanglingReferenceError(
                f"hazard '{hazard.id}' traces to unknown requirement '{hazard.requirement}'"
            )
    for entry in project.fmeca:
        for measure_id in entry.measures:
            if measure_id not in alternative_ids:
                raise DanglingReferenceError(
                    f"fmeca entry '{entry.id}' names unknown alternative '{measure_id}'"
                )
    for alternative in project.alternatives:
        if alternative.tree_id is not None:
            if alternative.tree_id not in project.fault_trees:
                raise DanglingReferenceError(
                    f"alternative '{alternative.id}' references unknown fault tree "
                    f"'{alternative.tree_id}'"
                )
        elif not alternative.qualitative_only:
            raise DanglingReferenceError(
                f"alternative '{alternative.id}' has no fault tree and is not marked "
                "qualitative-only"
            )
        for property_name in alternative.evaluations:
            if property_name not in property_names:
                raise DanglingReferenceError(
                    f"alternative '{alternative.id}' evaluates unknown property "
                    f"'{property_name}'"
                )


# ---------------------------------------------------------------------------
# Writing
# ---------------------------------------------------------------------------


def format_real(value: float, full_precision: bool = False) -> str:
    """Canonical text form of a real: 6 significant digits by default."""
    if not math.isfinite(value):
        return "inf" if value > 0 else ("-inf" if value < 0 else "nan")
    return repr(value) if full_precision else f"{value:.6g}"


def _real(value: float, full: bool) -> float:
    if not full and math.isfinite(value):
        return float(f"{value:.6g}")
    return value


def _maybe(target: dict, key: str, value) -> None:
    """Include a field only when it carries information."""
    if value is None or value == "" or value == [] or value == {} or value == ():
        return
    target[key] = value


def _event_dict(event: BasicEvent, full: bool) -> dict:
    out: dict[str, Any] = {"id": event.id}
    _maybe(out, "name", event.name)
    out["failure_rate_fit"] = _real(event.failure_rate_fit, full)
    out["mdt_hours"] = _real(event.mdt_hours, full)
    return out


def _gate_dict(gate: Gate) -> dict:
    out: dict[str, Any] = {"id": gate.id}
    _maybe(out, "name", gate.name)
    out["kind"] = gate.kind.value
    out["inputs"] = list(gate.inputs)
    return out


def _instance_dict(instance: ComponentInstance) -> dict:
    out: dict[str, Any] = {"id": instance.id, "definition": instance.definition}
    _maybe(out, "bindings", dict(sorted(instance.bindings.items())))
    return out


def _definition_dict(definition: ComponentDefinition, full: bool) -> dict:
    out: dict[str, Any] = {"id": definition.id}
    _maybe(out, "name", definition.name)
    _maybe(out, "inports", list(definition.inports))
    out["outports"] = list(definition.outports)
    _maybe(out, "basic_events", [_event_dict(e, full) for e in definition.basic_events])
    _maybe(out, "gates", [_gate_dict(g) for g in definition.gates])
    _maybe(out, "instances", [_instance_dict(i) for i in definition.instances])
    out["wiring"] = dict(sorted(definition.wiring.items()))
    _maybe(out, "unused_inports", list(definition.unused_inports))
    return out


def _tree_dict(model: FaultTreeModel, full: bool) -> dict:
    out: dict[str, Any] = {"top": model.top}
    out["mission_time_hours"] = _real(model.mission_time_hours, full)
    _maybe(out, "basic_events", [_event_dict(e, full) for e in model.basic_events])
    _maybe(out, "gates", [_gate_dict(g) for g in model.gates])
    _maybe(out, "definitions", [_definition_dict(d, full) for d in model.definitions])
    _maybe(out, "instances", [_instance_dict(i) for i in model.instances])
    return out


def _quantity_dict(quantity: Quantity, full: bool) -> dict:
    return {"value": _real(quantity.value, full), "kind": quantity.kind.value}


def _criteria_dict(criteria: TradeoffCriteria, full: bool) -> dict:
    out: dict[str, Any] = {"overall_acceptance": _real(criteria.overall_acceptance, full)}
    if criteria.actual is not None:
        out["actual"] = _quantity_dict(criteria.actual, full)
    if criteria.expected is not None:
        out["expected"] = _quantity_dict(criteria.expected, full)
    if criteria.acceptable_upper_limit is not None:
        out["acceptable_upper_limit"] = _real(criteria.acceptable_upper_limit, full)
    if criteria.acceptable_lower_limit is not None:
        out["acceptable_lower_limit"] = _real(criteria.acceptable_lower_limit, full)
    for key, value in (
        ("benefit", criteria.benefit),
        ("drawback", criteria.drawback),
        ("cost", criteria.cost),
        ("time_to_achieve", criteria.time_to_achieve),
        ("further_action", criteria.further_action),
    ):
        if value.value != "none":
            out[key] = value.value
    _maybe(out, "comment", criteria.comment)
    return out


def _alternative_dict(alternative: Alternative, full: bool) -> dict:
    out: dict[str, Any] = {"id": alternative.id}
    _maybe(out, "name", alternative.name)
    _maybe(out, "description", alternative.description)
    if alternative.tree_id is not None:
        out["tree_id"] = alternative.tree_id
    if alternative.qualitative_only:
        out["qualitative_only"] = True
    _maybe(
        out,
        "evaluations",
        {
            name: _criteria_dict(criteria, full)
            for name, criteria in sorted(alternative.evaluations.items())
        },
    )
    return out


def _fmeca_dict(entry: FmecaEntry) -> dict:
    out: dict[str, Any] = {
        "id": entry.id,
        "description": entry.description,
        "severity": entry.severity,
        "occurrence": entry.occurrence,
        "detection": entry.detection,
    }
    measures = {}
    for measure_id, revision in sorted(entry.measures.items()):
        revision_dict: dict[str, Any] = {
            "severity": revision.severity,
            "occurrence": revision.occurrence,
            "detection": revision.detection,
        }
        _maybe(revision_dict, "further_action", revision.further_action)
        measures[measure_id] = revision_dict
    _maybe(out, "measures", measures)
    return out


def _fmeda_dict(entry: FmedaEntry, full: bool) -> dict:
    out: dict[str, Any] = {
        "id": entry.id,
        "element": entry.element,
        "lambda_dangerous_fit": _real(entry.lambda_dangerous_fit, full),
        "detection_coverage": _real(entry.detection_coverage, full),
    }
    if entry.lambda_safe_fit != 0.0:
        out["lambda_safe_fit"] = _real(entry.lambda_safe_fit, full)
    return out


def project_to_json_dict(project: Project, full_precision: bool = False) -> dict:
    full = full_precision
    out: dict[str, Any] = {"schema_version": project.schema_version, "name": project.name}
    _maybe(out, "description", project.description)
    _maybe(
        out,
        "goals",
        [
            {"id": g.id, "text": g.text, **({"limits": g.limits} if g.limits else {})}
            for g in project.goals
        ],
    )
    _maybe(
        out,
        "scenarios",
        [
            {"id": s.id, "text": s.text, **({"goal": s.goal} if s.goal else {})}
            for s in project.scenarios
        ],
    )
    _maybe(
        out,
        "functional_requirements",
        [
            {"id": r.id, "text": r.text, **({"scenario": r.scenario} if r.scenario else {})}
            for r in project.requirements
        ],
    )
    _maybe(
        out,
        "hazards",
        [
            {
                "id": h.id,
                "text": h.text,
                **({"requirement": h.requirement} if h.requirement else {}),
            }
            for h in project.hazards
        ],
    )
    out["properties"] = [
        {"name": p.name, "weight": _real(p.weight, full)} for p in project.properties
    ]
    _maybe(out, "fmeca", [_fmeca_dict(e) for e in project.fmeca])
    _maybe(out, "fmeda", [_fmeda_dict(e, full) for e in project.fmeda])
    out["alternatives"] = [_alternative_dict(a, full) for a in project.alternatives]
    _maybe(
        out,
        "fault_trees",
        {tree_id: _tree_dict(m, full) for tree_id, m in sorted(project.fault_trees.items())},
    )
    return out


def dumps_project(project: Project, full_precision: bool = False) -> str:
    return (
        json.dumps(project_to_json_dict(project, full_precision), indent=2, ensure_ascii=False)
        + "\n"
    )


def save_project(project: Project, path, full_precision: bool = False) -> None:
    """Write the canonical JSON form; same project always yields same bytes."""
    validate_project(project)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(dumps_project(project, full_precision))


# ---------------------------------------------------------------------------
# Reading
# ---------------------------------------------------------------------------


class _Shape:
    """Typed field access that reports the JSON path on mismatch."""

    def __init__(self, data, path: str):
        if not isinstance(data, dict):
            raise ProjectParseError(f"{path}: expected an object, got {type(data).__name__}")
        self.data = data
        self.path = path

    def _get(self, key: str, required: bool, default=None):
        if key not in self.data:
            if required:
                raise ProjectParseError(f"{self.path}: missing required field '{key}'")
            return default
        return self.data[key]

    def str_(self, key: str, required: bool = True, default: str = "") -> str:
        value = self._get(key, required, default)
        if not isinstance(value, str):
            raise ProjectParseError(f"{self.path}.{key}: expected a string")
        return value

    def opt_str(self, key: str) -> str | None:
        value = self._get(key, False)
        if value is None:
            return None
        if not isinstance(value, str):
            raise ProjectParseError(f"{self.path}.{key}: expected a string")
        return value

    def real(self, key: str, required: bool = True, default: float = 0.0) -> float:
        value = self._get(key, required, default)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ProjectParseError(f"{self.path}.{key}: expected a number")
        return float(value)

    def opt_real(self, key: str) -> float | None:
        value = self._get(key, False)
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ProjectParseError(f"{self.path}.{key}: expected a number")
        return float(value)

    def int_(self, key: str) -> int:
        value = self._get(key, True)
        if isinstance(value, bool) or not isinstance(value, int):
            raise ProjectParseError(f"{self.path}.{key}: expected an integer")
        return value

    def bool_(self, key: str, default: bool = False) -> bool:
        value = self._get(key, False, default)
        if not isinstance(value, bool):
            raise ProjectParseError(f"{self.path}.{key}: expected true/false")
        return value

    def list_(self, key: str, required: bool = False) -> list:
        value = self._get(key, required, [])
        if not isinstance(value, list):
            raise ProjectParseError(f"{self.path}.{key}: expected a list")
        return value

    def str_list(self, key: str) -> tuple[str, ...]:
        items = self.list_(key)
        for index, item in enumerate(items):
            if not isinstance(item, str):
                raise ProjectParseError(f"{self.path}.{key}[{index}]: expected a string")
        return tuple(items)

    def map_(self, key: str) -> dict:
        value = self._get(key, False, {})
        if not isinstance(value, dict):
            raise ProjectParseError(f"{self.path}.{key}: expected an object")
        return value

    def str_map(self, key: str) -> dict[str, str]:
        out = {}
        for map_key, map_value in self.map_(key).items():
            if not isinstance(map_value, str):
                raise ProjectParseError(f"{self.path}.{key}.{map_key}: expected a string")
            out[map_key] = map_value
        return out

    def enum(self, key: str, enum_type, default):
        value = self._get(key, False)
        if value is None:
            return default
        if not isinstance(value, str):
            raise ProjectParseError(f"{self.path}.{key}: expected a string")
        try:
            return enum_type(value)
        except ValueError:
            allowed = ", ".join(member.value for member in enum_type)
            raise ProjectParseError(
                f"{self.path}.{key}: '{value}' is not one of: {allowed}"
            ) from None


def _parse_event(data, path: str) -> BasicEvent:
    shape = _Shape(data, path)
    return BasicEvent(
        id=shape.str_("id"),
        name=shape.str_("name", required=False),
        failure_rate_fit=shape.real("failure_rate_fit"),
        mdt_hours=shape.real("mdt_hours"),
    )


def _parse_gate(data, path: str) -> Gate:
    shape = _Shape(data, path)
    kind = shape.enum("kind", GateKind, None)
    if kind is None:
        raise ProjectParseError(f"{path}: missing required field 'kind'")
    return Gate(
        id=shape.str_("id"),
        name=shape.str_("name", required=False),
        kind=kind,
        inputs=shape.str_list("inputs"),
    )


def _parse_instance(data, path: str) -> ComponentInstance:
    shape = _Shape(data, path)
    return ComponentInstance(
        id=shape.str_("id"),
        definition=shape.str_("definition"),
        bindings=shape.str_map("bindings"),
    )


def _parse_definition(data, path: str) -> ComponentDefinition:
    shape = _Shape(data, path)
    return ComponentDefinition(
        id=shape.str_("id"),
        name=shape.str_("name", required=False),
        inports=shape.str_list("inports"),
        outports=shape.str_list("outports"),
        basic_events=tuple(
            _parse_event(item, f"{path}.basic_events[{index}]")
            for index, item in enumerate(shape.list_("basic_events"))
        ),
        gates=tuple(
            _parse_gate(item, f"{path}.gates[{index}]")
            for index, item in enumerate(shape.list_("gates"))
        ),
        instances=tuple(
            _parse_instance(item, f"{path}.instances[{index}]")
            for index, item in enumerate(shape.list_("instances"))
        ),
        wiring=shape.str_map("wiring"),
        unused_inports=shape.str_list("unused_inports"),
    )


def _parse_tree(data, path: str) -> FaultTreeModel:
    shape = _Shape(data, path)
    return FaultTreeModel(
        top=shape.str_("top"),
        mission_time_hours=shape.real("mission_time_hours", required=False, default=8760.0),
        basic_events=tuple(
            _parse_event(item, f"{path}.basic_events[{index}]")
            for index, item in enumerate(shape.list_("basic_events"))
        ),
        gates=tuple(
            _parse_gate(item, f"{path}.gates[{index}]")
            for index, item in enumerate(shape.list_("gates"))
        ),
        definitions=tuple(
            _parse_definition(item, f"{path}.definitions[{index}]")
            for index, item in enumerate(shape.list_("definitions"))
        ),
        instances=tuple(
            _parse_instance(item, f"{path}.instances[{index}]")
            for index, item in enumerate(shape.list_("instances"))
        ),
    )


def _parse_quantity(data, path: str) -> Quantity:
    shape = _Shape(data, path)
    kind = shape.enum("kind", QuantityKind, None)
    if kind is None:
        raise ProjectParseError(f"{path}: missing required field 'kind'")
    return Quantity(value=shape.real("value"), kind=kind)


def _parse_criteria(data, path: str) -> TradeoffCriteria:
    shape = _Shape(data, path)
    actual = shape._get("actual", False)
    expected = shape._get("expected", False)
    return TradeoffCriteria(
        overall_acceptance=shape.real("overall_acceptance"),
        actual=None if actual is None else _parse_quantity(actual, f"{path}.actual"),
        expected=None if expected is None else _parse_quantity(expected, f"{path}.expected"),
        acceptable_upper_limit=shape.opt_real("acceptable_upper_limit"),
        acceptable_lower_limit=shape.opt_real("acceptable_lower_limit"),
        benefit=shape.enum("benefit", Benefit, Benefit.NONE),
        drawback=shape.enum("drawback", Drawback, Drawback.NONE),
        cost=shape.enum("cost", CostBracket, CostBracket.NONE),
        time_to_achieve=shape.enum("time_to_achieve", TimeBracket, TimeBracket.NONE),
        further_action=shape.enum("further_action", FurtherAction, FurtherAction.NONE),
        comment=shape.str_("comment", required=False),
    )


def _parse_alternative(data, path: str) -> Alternative:
    shape = _Shape(data, path)
    evaluations = {
        name: _parse_criteria(value, f"{path}.evaluations.{name}")
        for name, value in shape.map_("evaluations").items()
    }
    return Alternative(
        id=shape.str_("id"),
        name=shape.str_("name", required=False),
        description=shape.str_("description", required=False),
        tree_id=shape.opt_str("tree_id"),
        qualitative_only=shape.bool_("qualitative_only"),
        evaluations=evaluations,
    )


def _parse_fmeca(data, path: str) -> FmecaEntry:
    shape = _Shape(data, path)
    measures = {}
    for measure_id, revision_data in shape.map_("measures").items():
        revision_shape = _Shape(revision_data, f"{path}.measures.{measure_id}")
        measures[measure_id] = RiskRevision(
            severity=revision_shape.int_("severity"),
            occurrence=revision_shape.int_("occurrence"),
            detection=revision_shape.int_("detection"),
            further_action=revision_shape.opt_str("further_action"),
        )
    return FmecaEntry(
        id=shape.str_("id"),
        description=shape.str_("description", required=False),
        severity=shape.int_("severity"),
        occurrence=shape.int_("occurrence"),
        detection=shape.int_("detection"),
        measures=measures,
    )


def _parse_fmeda(data, path: str) -> FmedaEntry:
    shape = _Shape(data, path)
    return FmedaEntry(
        id=shape.str_("id"),
        element=shape.str_("element"),
        lambda_dangerous_fit=shape.real("lambda_dangerous_fit"),
        detection_coverage=shape.real("detection_coverage"),
        lambda_safe_fit=shape.real("lambda_safe_fit", required=False, default=0.0),
    )


def project_from_json_dict(data) -> Project:
    shape = _Shape(data, "$")
    version = shape.str_("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaVersionError(
            f"unsupported schema_version '{version}' (this build reads '{SCHEMA_VERSION}')"
        )
    project = Project(
        schema_version=version,
        name=shape.str_("name"),
        description=shape.str_("description", required=False),
        goals=tuple(
            Goal(
                id=_Shape(item, f"$.goals[{index}]").str_("id"),
                text=_Shape(item, f"$.goals[{index}]").str_("text"),
                limits=_Shape(item, f"$.goals[{index}]").str_("limits", required=False),
            )
            for index, item in enumerate(shape.list_("goals"))
        ),
        scenarios=tuple(
            Scenario(
                id=_Shape(item, f"$.scenarios[{index}]").str_("id"),
                text=_Shape(item, f"$.scenarios[{index}]").str_("text"),
                goal=_Shape(item, f"$.scenarios[{index}]").opt_str("goal"),
            )
            for index, item in enumerate(shape.list_("scenarios"))
        ),
        requirements=tuple(
            Requirement(
                id=_Shape(item, f"$.functional_requirements[{index}]").str_("id"),
                text=_Shape(item, f"$.functional_requirements[{index}]").str_("text"),
                scenario=_Shape(item, f"$.functional_requirements[{index}]").opt_str("scenario"),
            )
            for index, item in enumerate(shape.list_("functional_requirements"))
        ),
        hazards=tuple(
            Hazard(
                id=_Shape(item, f"$.hazards[{index}]").str_("id"),
                text=_Shape(item, f"$.hazards[{index}]").str_("text"),
                requirement=_Shape(item, f"$.hazards[{index}]").opt_str("requirement"),
            )
            for index, item in enumerate(shape.list_("hazards"))
        ),
        properties=tuple(
            DependabilityProperty(
                name=_Shape(item, f"$.properties[{index}]").str_("name"),
                weight=_Shape(item, f"$.properties[{index}]").real("weight"),
            )
            for index, item in enumerate(shape.list_("properties", required=True))
        ),
        fmeca=tuple(
            _parse_fmeca(item, f"$.fmeca[{index}]")
            for index, item in enumerate(shape.list_("fmeca"))
        ),
        fmeda=tuple(
            _parse_fmeda(item, f"$.fmeda[{index}]")
            for index, item in enumerate(shape.list_("fmeda"))
        ),
        alternatives=tuple(
            _parse_alternative(item, f"$.alternatives[{index}]")
            for index, item in enumerate(shape.list_("alternatives", required=True))
        ),
        fault_trees={
            tree_id: _parse_tree(tree_data, f"$.fault_trees.{tree_id}")
            for tree_id, tree_data in shape.map_("fault_trees").items()
        },
    )
    validate_project(project)
    return project


def loads_project(text: str) -> Project:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise ProjectParseError(error.msg, line=error.lineno, column=error.colno) from None
    return project_from_json_dict(data)


def load_project(path) -> Project:
    """Read and fully validate a project file."""
    with open(path, "r", encoding="utf-8") as handle:
        return loads_project(handle.read())


def criteria_to_json_dict(criteria: TradeoffCriteria, full_precision: bool = False) -> dict:
    """JSON form of one evaluation, same shape as inside a project file."""
    return _criteria_dict(criteria, full_precision)


def criteria_from_json_dict(data, path: str = "$") -> TradeoffCriteria:
    """Parse one evaluation from its JSON form; `path` prefixes error messages."""
    return _parse_criteria(data, path)


# ---------------------------------------------------------------------------
# Result serialization (shared by CLI output and the HTTP service)
# ---------------------------------------------------------------------------


def _json_real(value: float, full: bool):
    """Reals for result payloads; non-finite values map to null."""
    if not math.isfinite(value):
        return None
    return _real(value, full)


def rams_to_json_dict(result: RamsResult, full_precision: bool = False) -> dict:
    full = full_precision
    return {
        "failure_rate_per_hour": _json_real(result.failure_rate_per_hour, full),
        "failure_rate_fit": _json_real(result.failure_rate_fit, full),
        "mdt_hours": _json_real(result.mdt_hours, full),
        "mtbf_hours": _json_real(result.mtbf_hours, full),
        "mttf_hours": _json_real(result.mttf_hours, full),
        "availability": _json_real(result.availability, full),
        "unavailability": _json_real(result.unavailability, full),
        "mission_time_hours": _json_real(result.mission_time_hours, full),
        "mission_unreliability": _json_real(result.mission_unreliability, full),
    }


def rams_from_json_dict(data) -> RamsResult:
    shape = _Shape(data, "rams")

    def real_or_inf(key: str) -> float:
        value = shape._get(key, True)
        if value is None:
            return math.inf
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ProjectParseError(f"rams.{key}: expected a number or null")
        return float(value)

    return RamsResult(
        failure_rate_per_hour=real_or_inf("failure_rate_per_hour"),
        failure_rate_fit=real_or_inf("failure_rate_fit"),
        mdt_hours=real_or_inf("mdt_hours"),
        mtbf_hours=real_or_inf("mtbf_hours"),
        mttf_hours=real_or_inf("mttf_hours"),
        availability=real_or_inf("availability"),
        unavailability=real_or_inf("unavailability"),
        mission_time_hours=real_or_inf("mission_time_hours"),
        mission_unreliability=real_or_inf("mission_unreliability"),
    )


def dpn_result_to_json_dict(result: DpnResult, full_precision: bool = False) -> dict:
    full = full_precision
    return {
        "alternative_id": result.alternative_id,
        "contributions": {
            name: _real(value, full) for name, value in result.contributions.items()
        },
        "weights": {name: _real(value, full) for name, value in result.weights.items()},
        "total": _real(result.total, full),
        "expected_total": _real(result.expected_total, full),
    }


def dpn_result_from_json_dict(data) -> DpnResult:
    shape = _Shape(data, "dpn")
    contributions = shape.map_("contributions")
    weights = shape.map_("weights")
    return DpnResult(
        alternative_id=shape.str_("alternative_id"),
        contributions={name: float(value) for name, value in contributions.items()},
        weights={name: float(value) for name, value in weights.items()},
        total=shape.real("total"),
        expected_total=shape.real("expected_total"),
    )


def comparison_to_json_dict(report: ComparisonReport, full_precision: bool = False) -> dict:
    full = full_precision
    return {
        "properties": [
            {"name": p.name, "weight": _real(p.weight, full)} for p in report.properties
        ],
        "alternatives": [
            {"id": a, "name": report.alternative_names[a]} for a in report.alternative_ids
        ],
        "results": {
            a: dpn_result_to_json_dict(report.results[a], full) for a in report.alternative_ids
        },
        "ranking": list(report.ranking),
        "expected_total": _real(report.expected_total, full),
        "fulfillment": {a: dict(flags) for a, flags in report.fulfillment.items()},
        "fulfills_all": dict(report.fulfills_all),
        "rams": {
            a: rams_to_json_dict(r, full) for a, r in sorted(report.rams.items())
        },
        "verdicts": {
            a: {name: verdict.value for name, verdict in per_property.items()}
            for a, per_property in report.verdicts.items()
        },
        "warnings": list(report.warnings),
        "charts": {
            "totals": {
                "alternatives": list(report.alternative_ids),
                "labels": [report.alternative_names[a] for a in report.alternative_ids],
                "actual": [_real(report.results[a].total, full) for a in report.alternative_ids],
                "expected": _real(report.expected_total, full),
            },
            "contributions": {
                "properties": [p.name for p in report.properties],
                "weights": [_real(p.weight, full) for p in report.properties],
                "per_alternative": {
                    a: [
                        _real(report.results[a].contributions[p.name], full)
                        for p in report.properties
                    ]
                    for a in report.alternative_ids
                },
            },
        },
    }


def comparison_from_json_dict(data) -> ComparisonReport:
    shape = _Shape(data, "comparison")
    properties = tuple(
        DependabilityProperty(
            name=_Shape(item, f"comparison.properties[{index}]").str_("name"),
            weight=_Shape(item, f"comparison.properties[{index}]").real("weight"),
        )
        for index, item in enumerate(shape.list_("properties", required=True))
    )
    alternative_rows = [
        _Shape(item, f"comparison.alternatives[{index}]")
        for index, item in enumerate(shape.list_("alternatives", required=True))
    ]
    return ComparisonReport(
        properties=properties,
        alternative_ids=tuple(row.str_("id") for row in alternative_rows),
        alternative_names={row.str_("id"): row.str_("name") for row in alternative_rows},
        results={
            a: dpn_result_from_json_dict(value) for a, value in shape.map_("results").items()
        },
        ranking=shape.str_list("ranking"),
        expected_total=shape.real("expected_total"),
        fulfillment={
            a: {name: bool(flag) for name, flag in flags.items()}
            for a, flags in shape.map_("fulfillment").items()
        },
        fulfills_all={a: bool(flag) for a, flag in shape.map_("fulfills_all").items()},
        rams={a: rams_from_json_dict(value) for a, value in shape.map_("rams").items()},
        verdicts={
            a: {name: ObjectiveVerdict(value) for name, value in per_property.items()}
            for a, per_property in shape.map_("verdicts").items()
        },
        warnings=shape.str_list("warnings"),
    )


# ---------------------------------------------------------------------------
# CSV export
# ---------------------------------------------------------------------------

_RAMS_ROWS: tuple[tuple[str, str], ...] = (
    ("failure rate [FIT]", "failure_rate_fit"),
    ("failure rate [1/h]", "failure_rate_per_hour"),
    ("MTBF [h]", "mtbf_hours"),
    ("MTTF [h]", "mttf_hours"),
    ("MDT [h]", "mdt_hours"),
    ("availability", "availability"),
    ("unavailability", "unavailability"),
    ("mission time [h]", "mission_time_hours"),
    ("mission unreliability", "mission_unreliability"),
)


def _csv_cell(text: str) -> str:
    if any(ch in text for ch in ',"\r\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def _csv_line(cells: list[str]) -> str:
    return ",".join(_csv_cell(cell) for cell in cells) + "\r\n"


def export_results_csv(report: ComparisonReport, full_precision: bool = False) -> str:
    """Render a comparison as three RFC 4180 blocks.

    Block 1: RAMS measures per alternative (rows are measures). Block 2:
    DPN contributions per property plus totals. Block 3: actual-vs-expected
    total series. Decimal separator is always the dot.
    """

    def fmt(value: float) -> str:
        return format_real(value, full_precision)

    lines: list[str] = []
    rams_ids = [a for a in report.alternative_ids if a in report.rams]
    lines.append(_csv_line(["RAMS", *(report.alternative_names[a] for a in rams_ids)]))
    for label, attr in _RAMS_ROWS:
        lines.append(
            _csv_line([label, *(fmt(getattr(report.rams[a], attr)) for a in rams_ids)])
        )
    lines.append("\r\n")

    lines.append(
        _csv_line(
            ["DPN", *(report.alternative_names[a] for a in report.alternative_ids)]
        )
    )
    for prop in report.properties:
        lines.append(
            _csv_line(
                [
                    prop.name,
                    *(
                        fmt(report.results[a].contributions[prop.name])
                        for a in report.alternative_ids
                    ),
                ]
            )
        )
    lines.append(
        _csv_line(["DPN", *(fmt(report.results[a].total) for a in report.alternative_ids)])
    )
    lines.append(
        _csv_line(["expected", *(fmt(report.expected_total) for _ in report.alternative_ids)])
    )
    lines.append("\r\n")

    lines.append(_csv_line(["alternative", "actual", "expected"]))
    for a in report.alternative_ids:
        lines.append(
            _csv_line(
                [
                    report.alternative_names[a],
                    fmt(report.results[a].total),
                    fmt(report.expected_total),
                ]
            )
        )
    return "".join(lines)


def export_flat_tree_csv(tree: FlatTree, results: Mapping[str, RamsResult]) -> str:
    """Per-node RAMS table for one evaluated tree."""
    lines = [
        _csv_line(
            ["node", "kind", *(label for label, _ in _RAMS_ROWS)]
        )
    ]
    for node_id in tree.postorder():
        kind = "basic_event" if node_id in tree.events else tree.gates[node_id].kind.value
        result = results[node_id]
        lines.append(
            _csv_line(
                [node_id, kind, *(format_real(getattr(result, attr)) for _, attr in _RAMS_ROWS)]
            )
        )
    return "".join(lines)
