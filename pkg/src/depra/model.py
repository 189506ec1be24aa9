"""Component fault tree data model.

Trees are built from basic events (repairable leaf failures characterized by
a failure rate in FIT and a mean down time in hours) and AND/OR gates.
Subtrees can be packaged into reusable component definitions with typed
ports; definitions are instantiated by id and may nest further instances.
``flatten`` expands every instance into a single flat gate network whose
node ids are instance-qualified paths joined with ``/``.

All types are immutable values. Construction is permissive about field
values; ``validate_model`` centralizes the checks and reports every problem
it finds instead of raising on the first one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Mapping

from .errors import DomainError, InvalidModelError

# 1 FIT = one failure per 1e9 device hours.
FIT_DENOMINATOR = 1e9

# Qualified node ids join instance path segments with this separator.
ID_SEPARATOR = "/"

DEFAULT_MISSION_TIME_HOURS = 8760.0


def fit_to_per_hour(fit: float) -> float:
    """Convert a failure rate in FIT to failures per hour.

    Single correctly rounded division, so short decimal FIT values map to
    their exact per-hour counterparts (10 FIT -> 1e-8 /h bit-exactly).
    """
    if not math.isfinite(fit) or fit < 0.0:
        raise DomainError(f"failure rate in FIT must be finite and >= 0, got {fit!r}")
    return fit / FIT_DENOMINATOR


def per_hour_to_fit(rate_per_hour: float) -> float:
    """Convert a failure rate in failures per hour to FIT."""
    if not math.isfinite(rate_per_hour) or rate_per_hour < 0.0:
        raise DomainError(
            f"failure rate per hour must be finite and >= 0, got {rate_per_hour!r}"
        )
    return rate_per_hour * FIT_DENOMINATOR


# ---------------------------------------------------------------------------
# Node types
# ---------------------------------------------------------------------------


class GateKind(str, Enum):
    AND = "and"
    OR = "or"


@dataclass(frozen=True)
class BasicEvent:
    """Repairable leaf failure mode.

    ``failure_rate_fit`` is the steady failure rate in FIT and ``mdt_hours``
    the mean down time per failure. Zero rates are representable (they arise
    from 0%/100% diagnostic coverage splits) but are reported by
    ``validate_model``.
    """

    id: str
    failure_rate_fit: float
    mdt_hours: float
    name: str = ""

    @property
    def failure_rate_per_hour(self) -> float:
        return fit_to_per_hour(self.failure_rate_fit)


@dataclass(frozen=True)
class Gate:
    """AND/OR combination of two or more input nodes."""

    id: str
    kind: GateKind
    inputs: tuple[str, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "kind", GateKind(self.kind))
        object.__setattr__(self, "inputs", tuple(self.inputs))


@dataclass(frozen=True)
class ComponentInstance:
    """Use of a component definition under a local instance id.

    ``bindings`` wires each used inport of the definition to a node
    reference in the scope that contains the instance.
    """

    id: str
    definition: str
    bindings: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "bindings", dict(self.bindings))


@dataclass(frozen=True)
class ComponentDefinition:
    """Reusable fault tree fragment with inports and outports.

    ``wiring`` maps each outport to the internal node (basic event, gate,
    inport, or nested ``instance/outport``) that drives it. Inports that are
    intentionally unconnected must be listed in ``unused_inports``.
    """

    id: str
    name: str = ""
    inports: tuple[str, ...] = ()
    outports: tuple[str, ...] = ()
    basic_events: tuple[BasicEvent, ...] = ()
    gates: tuple[Gate, ...] = ()
    instances: tuple[ComponentInstance, ...] = ()
    wiring: Mapping[str, str] = field(default_factory=dict)
    unused_inports: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "inports", tuple(self.inports))
        object.__setattr__(self, "outports", tuple(self.outports))
        object.__setattr__(self, "basic_events", tuple(self.basic_events))
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "instances", tuple(self.instances))
        object.__setattr__(self, "wiring", dict(self.wiring))
        object.__setattr__(self, "unused_inports", tuple(self.unused_inports))


@dataclass(frozen=True)
class FaultTreeModel:
    """Top-level tree: loose nodes, component instances, and a top event.

    ``top`` references a basic event, a gate, or an ``instance/outport``
    path. ``mission_time_hours`` parameterizes mission unreliability.
    """

    top: str
    basic_events: tuple[BasicEvent, ...] = ()
    gates: tuple[Gate, ...] = ()
    definitions: tuple[ComponentDefinition, ...] = ()
    instances: tuple[ComponentInstance, ...] = ()
    mission_time_hours: float = DEFAULT_MISSION_TIME_HOURS

    def __post_init__(self):
        object.__setattr__(self, "basic_events", tuple(self.basic_events))
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "definitions", tuple(self.definitions))
        object.__setattr__(self, "instances", tuple(self.instances))


@dataclass(frozen=True)
class FlatTree:
    """Instance-free gate network produced by ``flatten``.

    ``events`` and ``gates`` map qualified node ids to nodes; gate inputs
    are fully resolved qualified ids (ports are eliminated).
    """

    top: str
    events: Mapping[str, BasicEvent]
    gates: Mapping[str, Gate]
    mission_time_hours: float = DEFAULT_MISSION_TIME_HOURS

    def __post_init__(self):
        object.__setattr__(self, "events", dict(self.events))
        object.__setattr__(self, "gates", dict(self.gates))

    def node_ids(self) -> tuple[str, ...]:
        return tuple(self.events) + tuple(self.gates)

    def as_model(self) -> FaultTreeModel:
        """Re-wrap as a component-free model (flatten of it is the identity)."""
        return FaultTreeModel(
            top=self.top,
            basic_events=tuple(self.events.values()),
            gates=tuple(self.gates.values()),
            mission_time_hours=self.mission_time_hours,
        )

    def postorder(self) -> tuple[str, ...]:
        """All node ids, every gate after all of its inputs."""
        order: list[str] = list(self.events)
        seen: set[str] = set(self.events)
        visiting: set[str] = set()

        def visit(node_id: str) -> None:
            if node_id in seen:
                return
            if node_id in visiting:
                raise DomainError(f"gate cycle through '{node_id}'")
            visiting.add(node_id)
            gate = self.gates.get(node_id)
            if gate is not None:
                for ref in gate.inputs:
                    visit(ref)
            visiting.discard(node_id)
            seen.add(node_id)
            order.append(node_id)

        for gate_id in self.gates:
            visit(gate_id)
        return tuple(order)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """One problem found by ``validate_model``."""

    code: str
    message: str
    where: str = ""

    def __str__(self) -> str:
        return f"[{self.code}] {self.message}" + (f" (at {self.where})" if self.where else "")


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()
    warnings: tuple[Violation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "violations", tuple(self.violations))
        object.__setattr__(self, "warnings", tuple(self.warnings))

    @property
    def ok(self) -> bool:
        """True iff the model is evaluable (warnings do not block)."""
        return not self.violations


class _Analysis:
    """Shared traversal behind validate_model and flatten."""

    def __init__(self, model: FaultTreeModel):
        self.model = model
        self.violations: list[Violation] = []
        self.warnings: list[Violation] = []
        self.definitions = {}
        for definition in model.definitions:
            if definition.id in self.definitions:
                self.violation("duplicate-id", f"duplicate definition id '{definition.id}'")
            self.definitions[definition.id] = definition
        self.events: dict[str, BasicEvent] = {}
        self.gates: dict[str, Gate] = {}
        self.flat_kinds: dict[str, str] = {}
        self.top: str | None = None

    def violation(self, code: str, message: str, where: str = "") -> None:
        self.violations.append(Violation(code, message, where))

    def warning(self, code: str, message: str, where: str = "") -> None:
        self.warnings.append(Violation(code, message, where))

    # -- value checks ------------------------------------------------------

    def check_id(
        self, raw_id: str, what: str, where: str, allow_separator: bool = False
    ) -> None:
        if not raw_id:
            self.violation("bad-id", f"empty {what} id", where)
        elif ID_SEPARATOR in raw_id and not allow_separator:
            self.violation(
                "bad-id", f"{what} id '{raw_id}' may not contain '{ID_SEPARATOR}'", where
            )

    def check_event(self, event: BasicEvent, where: str, allow_separator: bool = False) -> None:
        self.check_id(event.id, "basic event", where, allow_separator)
        rate = event.failure_rate_fit
        if not math.isfinite(rate) or rate <= 0.0:
            self.violation(
                "non-positive-rate",
                f"basic event '{event.id}' has failure_rate_fit {rate!r}",
                where,
            )
        if not math.isfinite(event.mdt_hours) or event.mdt_hours <= 0.0:
            self.violation(
                "non-positive-mdt",
                f"basic event '{event.id}' has mdt_hours {event.mdt_hours!r}",
                where,
            )
        elif math.isfinite(rate) and rate > 0.0:
            if (rate / FIT_DENOMINATOR) * event.mdt_hours >= 1.0:
                self.violation(
                    "saturated-unavailability",
                    f"basic event '{event.id}' has failure_rate * mdt >= 1",
                    where,
                )

    def check_gate(self, gate: Gate, where: str, allow_separator: bool = False) -> None:
        self.check_id(gate.id, "gate", where, allow_separator)
        if len(gate.inputs) < 2:
            self.violation(
                "gate-arity", f"gate '{gate.id}' has {len(gate.inputs)} input(s), needs >= 2", where
            )
        if len(set(gate.inputs)) != len(gate.inputs):
            self.violation("duplicate-input", f"gate '{gate.id}' has duplicate inputs", where)
        if gate.id in gate.inputs:
            self.violation("cycle", f"gate '{gate.id}' lists itself as an input", where)

    def check_scope(self, scope, where: str, top_level: bool = False) -> dict[str, str]:
        """Check one namespace (model top level or a definition body).

        Top-level event and gate ids live in the flattened namespace, so they
        may contain the qualification separator (this is what makes a
        flattened tree re-readable as a model).  Inside definitions the
        separator stays reserved for qualification.
        """
        kinds: dict[str, str] = {}

        def claim(raw_id: str, kind: str) -> None:
            if raw_id in kinds:
                self.violation(
                    "duplicate-id", f"id '{raw_id}' used by both {kinds[raw_id]} and {kind}", where
                )
            kinds[raw_id] = kind

        for event in scope.basic_events:
            self.check_event(event, where, allow_separator=top_level)
            claim(event.id, "basic event")
        for gate in scope.gates:
            self.check_gate(gate, where, allow_separator=top_level)
            claim(gate.id, "gate")
        for instance in scope.instances:
            self.check_id(instance.id, "instance", where)
            claim(instance.id, "instance")
            if instance.definition not in self.definitions:
                self.violation(
                    "dangling-reference",
                    f"instance '{instance.id}' references unknown definition "
                    f"'{instance.definition}'",
                    where,
                )
        return kinds

    def check_definition(self, definition: ComponentDefinition) -> None:
        where = f"definition '{definition.id}'"
        self.check_id(definition.id, "definition", where)
        kinds = self.check_scope(definition, where)
        for port in definition.inports:
            self.check_id(port, "inport", where)
            if port in kinds:
                self.violation("duplicate-id", f"inport '{port}' shadows a {kinds[port]}", where)
        if not definition.outports:
            self.violation("no-outports", "definition declares no outports", where)
        for port in definition.outports:
            self.check_id(port, "outport", where)
            if port not in definition.wiring:
                self.violation("unwired-outport", f"outport '{port}' has no wiring", where)
        for port in definition.wiring:
            if port not in definition.outports:
                self.violation(
                    "dangling-reference", f"wiring names unknown outport '{port}'", where
                )
        for port in definition.unused_inports:
            if port not in definition.inports:
                self.violation(
                    "dangling-reference",
                    f"unused_inports names unknown inport '{port}'",
                    where,
                )
        referenced = {ref for gate in definition.gates for ref in gate.inputs}
        referenced.update(definition.wiring.values())
        for instance in definition.instances:
            referenced.update(instance.bindings.values())
        for port in definition.inports:
            if port not in referenced and port not in definition.unused_inports:
                self.violation(
                    "unused-inport",
                    f"inport '{port}' is neither referenced nor marked unused",
                    where,
                )

    # -- expansion ---------------------------------------------------------

    def expand(self) -> None:
        model = self.model
        if not math.isfinite(model.mission_time_hours) or model.mission_time_hours <= 0.0:
            self.violation(
                "bad-mission-time",
                f"mission_time_hours must be finite and > 0, got {model.mission_time_hours!r}",
            )
        for definition in self.definitions.values():
            self.check_definition(definition)
        self.check_scope(model, "top level", top_level=True)

        root = _Frame(prefix="", scope=model, parent=None, bindings={}, path=())
        self._expand_frame(root)
        self._resolve_gates(root)

        if not model.top:
            self.violation("no-top", "model has no top event reference")
        else:
            top = self._resolve(root, model.top, trail=())
            if top is not None:
                self.top = top

        self._check_flat_graph()

    def _claim_flat(self, flat_id: str, kind: str) -> None:
        """Detect collisions in the flattened namespace.

        Scope-level duplicate checks cannot see these: a top-level node may
        legitimately carry a separator in its id, so it can coincide with the
        qualified id an instance expansion produces.
        """
        prior = self.flat_kinds.get(flat_id)
        if prior == kind:
            self.violation("duplicate-id", f"flattened id '{flat_id}' is produced twice")
        elif prior is not None:
            self.violation(
                "duplicate-id",
                f"flattened id '{flat_id}' is produced by both a {prior} and a {kind}",
            )
        self.flat_kinds[flat_id] = kind

    def _expand_frame(self, frame: "_Frame") -> None:
        scope = frame.scope
        for event in scope.basic_events:
            flat_id = frame.prefix + event.id
            self._claim_flat(flat_id, "basic event")
            self.events[flat_id] = replace(event, id=flat_id)
        for instance in scope.instances:
            definition = self.definitions.get(instance.definition)
            if definition is None:
                continue
            if instance.definition in frame.path:
                self.violation(
                    "cycle",
                    f"definition '{instance.definition}' nests itself via instance "
                    f"'{frame.prefix}{instance.id}'",
                )
                continue
            for port in instance.bindings:
                if port not in definition.inports:
                    self.violation(
                        "dangling-reference",
                        f"instance '{frame.prefix}{instance.id}' binds unknown inport '{port}'",
                    )
            child = _Frame(
                prefix=frame.prefix + instance.id + ID_SEPARATOR,
                scope=definition,
                parent=frame,
                bindings=dict(instance.bindings),
                path=frame.path + (instance.definition,),
            )
            frame.children[instance.id] = child
            self._expand_frame(child)

    def _resolve_gates(self, frame: "_Frame") -> None:
        for gate in frame.scope.gates:
            resolved = []
            for ref in gate.inputs:
                target = self._resolve(frame, ref, trail=())
                if target is not None:
                    resolved.append(target)
            qualified = frame.prefix + gate.id
            self._claim_flat(qualified, "gate")
            if len(resolved) == len(gate.inputs) and len(set(resolved)) != len(resolved):
                self.violation(
                    "duplicate-input",
                    f"gate '{qualified}' inputs alias the same node after port resolution",
                )
            self.gates[qualified] = Gate(
                id=qualified, kind=gate.kind, inputs=tuple(resolved), name=gate.name
            )
        for child in frame.children.values():
            self._resolve_gates(child)

    def _resolve(self, frame: "_Frame", ref: str, trail: tuple) -> str | None:
        """Resolve a scope-local reference to a qualified concrete node id.

        A literal node id in the current scope wins over the instance/outport
        reading of a separator-carrying reference; genuine id collisions are
        caught separately on the flattened namespace.
        """
        key = (frame.prefix, ref)
        if key in trail:
            self.violation("cycle", f"port alias cycle through '{frame.prefix}{ref}'")
            return None
        trail = trail + (key,)

        scope = frame.scope
        if any(event.id == ref for event in scope.basic_events):
            return frame.prefix + ref
        if any(gate.id == ref for gate in scope.gates):
            return frame.prefix + ref
        if isinstance(scope, ComponentDefinition) and ref in scope.inports:
            if ref in scope.unused_inports:
                self.violation(
                    "unresolved-port",
                    f"inport '{ref}' of '{frame.prefix or scope.id}' is marked unused "
                    "but referenced",
                )
                return None
            if ref not in frame.bindings:
                self.violation(
                    "unresolved-port",
                    f"inport '{ref}' of instance '{frame.prefix.rstrip(ID_SEPARATOR)}' "
                    "is not bound",
                )
                return None
            if frame.parent is None:
                self.violation("unresolved-port", f"inport '{ref}' has no parent scope")
                return None
            return self._resolve(frame.parent, frame.bindings[ref], trail)
        if ID_SEPARATOR in ref:
            instance_id, _, port = ref.partition(ID_SEPARATOR)
            child = frame.children.get(instance_id)
            if child is None:
                self.violation(
                    "dangling-reference",
                    f"reference '{ref}' in '{frame.prefix or 'top level'}' names no instance",
                )
                return None
            definition = child.scope
            if port not in definition.outports:
                self.violation(
                    "dangling-reference",
                    f"'{instance_id}' has no outport '{port}'",
                )
                return None
            wired = definition.wiring.get(port)
            if wired is None:
                self.violation("unresolved-port", f"outport '{port}' of '{instance_id}' unwired")
                return None
            return self._resolve(child, wired, trail)
        self.violation(
            "dangling-reference",
            f"reference '{ref}' in '{frame.prefix or 'top level'}' resolves to nothing",
        )
        return None

    # -- flat graph checks ---------------------------------------------------

    def _check_flat_graph(self) -> None:
        state: dict[str, int] = {}

        def visit(node_id: str, stack: tuple[str, ...]) -> None:
            if state.get(node_id) == 2:
                return
            if state.get(node_id) == 1:
                cycle = stack[stack.index(node_id):] + (node_id,)
                self.violation("cycle", "gate cycle: " + " -> ".join(cycle))
                return
            state[node_id] = 1
            gate = self.gates.get(node_id)
            if gate is not None:
                for ref in gate.inputs:
                    visit(ref, stack + (node_id,))
            state[node_id] = 2

        for gate_id in self.gates:
            visit(gate_id, ())

        fan_in: dict[str, list[str]] = {}
        for gate in self.gates.values():
            for ref in gate.inputs:
                fan_in.setdefault(ref, []).append(gate.id)
        for node_id, consumers in fan_in.items():
            if len(consumers) > 1:
                self.warning(
                    "shared-subtree",
                    f"node '{node_id}' feeds {len(consumers)} gates; evaluation treats "
                    "repeated subtrees as independent",
                )
        for event in self.events.values():
            if event.failure_rate_fit == 0.0:
                self.warning("zero-rate-leaf", f"basic event '{event.id}' has zero failure rate")

    def report(self) -> ValidationReport:
        return ValidationReport(tuple(self.violations), tuple(self.warnings))


class _Frame:
    """One instantiation scope during expansion."""

    __slots__ = ("prefix", "scope", "parent", "bindings", "path", "children")

    def __init__(self, prefix, scope, parent, bindings, path):
        self.prefix = prefix
        self.scope = scope
        self.parent = parent
        self.bindings = bindings
        self.path = path
        self.children: dict[str, _Frame] = {}


def validate_model(model: FaultTreeModel) -> ValidationReport:
    """Check a model and report all violations and warnings found.

    The report is empty (``ok``) exactly when ``flatten`` succeeds on the
    same model.
    """
    analysis = _Analysis(model)
    analysis.expand()
    return analysis.report()


def flatten(model: FaultTreeModel) -> FlatTree:
    """Expand component instances into a flat, port-free gate network.

    Raises:
        InvalidModelError: if ``validate_model`` finds any violation.
    """
    analysis = _Analysis(model)
    analysis.expand()
    report = analysis.report()
    if not report.ok:
        raise InvalidModelError(report)
    assert analysis.top is not None
    return FlatTree(
        top=analysis.top,
        events=analysis.events,
        gates=analysis.gates,
        mission_time_hours=model.mission_time_hours,
    )
