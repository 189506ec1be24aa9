"""Bundled example: dependability study of a brake warning contact.

A wear sensor in a drum brake closes a contact when the friction lining is
worn down; the dangerous failure is staying silent when it should warn.
The study compares leaving the sensor as-is against two measures, a
redundant second contact and a monitoring circuit, using the same data in
every layer: FMECA risk numbers, an FMEDA detection split, component fault
trees, and an acceptance scoring of each design alternative.

`example_project()` builds the project in code; the identical JSON form is
shipped as package data (see `example_project_path`) and regenerated by
`scripts/regen_example_project.py`.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .dpn import (
    Alternative,
    Benefit,
    CostBracket,
    DependabilityProperty,
    Quantity,
    QuantityKind,
    TradeoffCriteria,
)
from .model import (
    BasicEvent,
    ComponentDefinition,
    ComponentInstance,
    FaultTreeModel,
    Gate,
    GateKind,
)
from .project_io import Goal, Hazard, Project, Requirement, Scenario, load_project
from .risk_tables import FmecaEntry, FmedaEntry, RiskRevision, derive_cft_leaves

CONTACT_FIT = 10.0
SUPPLY_FIT = 1.0
REPAIR_HOURS = 24.0
MISSION_HOURS = 8760.0

#: Monitoring-circuit failure rates considered in the study, in FIT.
MONITORING_RATES_FIT = (10000.0, 10.0, 1.0)

DEFAULT_PROJECT_BASENAME = "brake_warning_contact.project.json"


def _contact_definition() -> ComponentDefinition:
    return ComponentDefinition(
        id="brake_warning_contact",
        name="Brake warning contact",
        outports=("failed",),
        basic_events=(
            BasicEvent(
                id="dangerous_failure",
                failure_rate_fit=CONTACT_FIT,
                mdt_hours=REPAIR_HOURS,
                name="Contact fails dangerous (no warning at wear limit)",
            ),
        ),
        wiring={"failed": "dangerous_failure"},
    )


def _without_measure_tree() -> FaultTreeModel:
    return FaultTreeModel(
        top="contact/failed",
        definitions=(_contact_definition(),),
        instances=(ComponentInstance(id="contact", definition="brake_warning_contact"),),
        mission_time_hours=MISSION_HOURS,
    )


def _redundancy_tree() -> FaultTreeModel:
    gate = Gate(
        id="both_contacts_failed",
        kind=GateKind.AND,
        inputs=("contact_a/failed", "contact_b/failed"),
        name="Both warning contacts fail dangerous",
    )
    return FaultTreeModel(
        top="both_contacts_failed",
        gates=(gate,),
        definitions=(_contact_definition(),),
        instances=(
            ComponentInstance(id="contact_a", definition="brake_warning_contact"),
            ComponentInstance(id="contact_b", definition="brake_warning_contact"),
        ),
        mission_time_hours=MISSION_HOURS,
    )


def _supply_definition() -> ComponentDefinition:
    return ComponentDefinition(
        id="power_supply",
        name="Power supply",
        outports=("failed",),
        basic_events=(
            BasicEvent(
                id="supply_failure",
                failure_rate_fit=SUPPLY_FIT,
                mdt_hours=REPAIR_HOURS,
                name="Power supply failure",
            ),
        ),
        wiring={"failed": "supply_failure"},
    )


def _monitoring_tree(monitoring_fit: float, monitored: FmedaEntry) -> FaultTreeModel:
    """OR of supply loss, undetected contact faults, and detected faults
    that slip through while the monitoring circuit itself is down."""
    du_event, dd_event = derive_cft_leaves(monitored, REPAIR_HOURS)
    monitoring_event = BasicEvent(
        id="monitoring_failure",
        failure_rate_fit=monitoring_fit,
        mdt_hours=REPAIR_HOURS,
        name="Monitoring circuit failure",
    )
    and_gate = Gate(
        id="detected_fault_unnoticed",
        kind=GateKind.AND,
        inputs=("monitoring_failure", dd_event.id),
        name="Detectable fault while monitoring is down",
    )
    or_gate = Gate(
        id="warning_lost",
        kind=GateKind.OR,
        inputs=("supply/failed", du_event.id, "detected_fault_unnoticed"),
        name="No warning although wear limit is reached",
    )
    return FaultTreeModel(
        top="warning_lost",
        basic_events=(du_event, dd_event, monitoring_event),
        gates=(and_gate, or_gate),
        definitions=(_supply_definition(),),
        instances=(ComponentInstance(id="supply", definition="power_supply"),),
        mission_time_hours=MISSION_HOURS,
    )


def _properties() -> tuple[DependabilityProperty, ...]:
    return (
        DependabilityProperty("safety", 100.0),
        DependabilityProperty("reliability", 10.0),
        DependabilityProperty("availability", 1.0),
        DependabilityProperty("maintainability", 0.1),
        DependabilityProperty("security", 0.01),
    )


def _fit(value: float) -> Quantity:
    return Quantity(value, QuantityKind.FAILURE_RATE_FIT)


def _without_measure_alternative() -> Alternative:
    return Alternative(
        id="without_measure",
        name="Without measure",
        tree_id="without_measure",
        description="Single warning contact, no additional measure.",
        evaluations={
            "safety": TradeoffCriteria(
                overall_acceptance=0.8,
                actual=_fit(10.0),
                expected=_fit(10.0),
                acceptable_upper_limit=10.0,
            ),
            "reliability": TradeoffCriteria(
                overall_acceptance=0.8,
                actual=Quantity(1e8, QuantityKind.MTBF_HOURS),
                expected=Quantity(1e8, QuantityKind.MTBF_HOURS),
            ),
            "availability": TradeoffCriteria(
                overall_acceptance=0.8,
                actual=Quantity(2.4e-7, QuantityKind.UNAVAILABILITY),
                expected=Quantity(2.4e-7, QuantityKind.UNAVAILABILITY),
            ),
            "maintainability": TradeoffCriteria(
                overall_acceptance=1.0,
                actual=Quantity(24.0, QuantityKind.MDT_HOURS),
                expected=Quantity(24.0, QuantityKind.MDT_HOURS),
            ),
            "security": TradeoffCriteria(
                overall_acceptance=1.0,
                comment="No remote interface, nothing to attack.",
            ),
        },
    )


def _redundancy_alternative() -> Alternative:
    return Alternative(
        id="with_redundancy",
        name="Redundant warning contact",
        tree_id="with_redundancy",
        description="Second contact in parallel; warning is lost only when both fail.",
        evaluations={
            "safety": TradeoffCriteria(
                overall_acceptance=1.0,
                actual=_fit(4.8e-6),
                expected=_fit(10.0),
                acceptable_upper_limit=10.0,
                benefit=Benefit.BETTER_RELIABILITY_AVAILABILITY,
            ),
            "reliability": TradeoffCriteria(
                overall_acceptance=1.0,
                actual=Quantity(2.08333e14, QuantityKind.MTBF_HOURS),
                expected=Quantity(1e8, QuantityKind.MTBF_HOURS),
            ),
            "availability": TradeoffCriteria(
                overall_acceptance=1.0,
                actual=Quantity(5.76e-14, QuantityKind.UNAVAILABILITY),
                expected=Quantity(2.4e-7, QuantityKind.UNAVAILABILITY),
            ),
            "maintainability": TradeoffCriteria(
                overall_acceptance=1.0,
                actual=Quantity(12.0, QuantityKind.MDT_HOURS),
                expected=Quantity(24.0, QuantityKind.MDT_HOURS),
            ),
            "security": TradeoffCriteria(
                overall_acceptance=1.0,
                cost=CostBracket.PROPORTIONAL,
                comment="Second sensor and wiring, no new attack surface.",
            ),
        },
    )


def _monitoring_1fit_alternative() -> Alternative:
    return Alternative(
        id="monitoring_1fit",
        name="Monitoring (1 FIT)",
        tree_id="monitoring_1fit",
        description="Contact supervised by a high quality monitoring circuit.",
        evaluations={
            "safety": TradeoffCriteria(
                overall_acceptance=1.0,
                actual=_fit(2.0),
                expected=_fit(10.0),
                acceptable_upper_limit=10.0,
                benefit=Benefit.BETTER_RELIABILITY_AVAILABILITY,
            ),
            "reliability": TradeoffCriteria(
                overall_acceptance=1.0,
                actual=Quantity(5e8, QuantityKind.MTBF_HOURS),
                expected=Quantity(1e8, QuantityKind.MTBF_HOURS),
            ),
            "availability": TradeoffCriteria(
                overall_acceptance=0.2,
                actual=Quantity(2.2e-4, QuantityKind.UNAVAILABILITY),
                expected=Quantity(2.4e-7, QuantityKind.UNAVAILABILITY),
                acceptable_upper_limit=1e-6,
                comment="Detected faults take the brake system out of service.",
            ),
            "maintainability": TradeoffCriteria(
                overall_acceptance=1.0,
                actual=Quantity(24.0, QuantityKind.MDT_HOURS),
                expected=Quantity(24.0, QuantityKind.MDT_HOURS),
            ),
            "security": TradeoffCriteria(overall_acceptance=1.0),
        },
    )


def example_project() -> Project:
    """The complete brake warning contact study."""
    monitored = FmedaEntry(
        id="contact_monitored",
        element="Brake warning contact",
        lambda_dangerous_fit=CONTACT_FIT,
        detection_coverage=0.9,
    )
    redundant = FmedaEntry(
        id="contact_redundant",
        element="Brake warning contact",
        lambda_dangerous_fit=CONTACT_FIT,
        detection_coverage=0.5,
    )
    fmeca = FmecaEntry(
        id="contact_fails_dangerous",
        description="Warning contact fails dangerous: wear limit reached, no warning.",
        severity=8,
        occurrence=2,
        detection=10,
        measures={
            "with_redundancy": RiskRevision(8, 1, 7, further_action="no"),
            "monitoring_1fit": RiskRevision(8, 1, 2),
        },
    )
    trees = {
        "without_measure": _without_measure_tree(),
        "with_redundancy": _redundancy_tree(),
    }
    monitoring_alternatives = []
    for rate in MONITORING_RATES_FIT:
        tree_id = f"monitoring_{rate:g}fit".replace(".", "_")
        trees[tree_id] = _monitoring_tree(rate, monitored)
        if rate != 1.0:
            monitoring_alternatives.append(
                Alternative(
                    id=tree_id,
                    name=f"Monitoring ({rate:g} FIT)",
                    tree_id=tree_id,
                    description="RAMS study variant, not scored.",
                )
            )
    return Project(
        name="Brake warning contact",
        description=(
            "Drum brake wear sensor study. The single-contact and redundancy"
            " variants treat the power supply as failure free; the monitoring"
            " variants model it explicitly."
        ),
        goals=(
            Goal(
                id="g1",
                text="Brake pad wear is signalled before braking performance degrades.",
                limits="Warning must precede the legal lining wear limit.",
            ),
        ),
        scenarios=(
            Scenario(
                id="sc1",
                text="Brake pads wear down during normal operation.",
                goal="g1",
            ),
        ),
        requirements=(
            Requirement(
                id="fr1",
                text="Signal brake pad wear to the driver when the wear limit is reached.",
                scenario="sc1",
            ),
        ),
        hazards=(
            Hazard(
                id="hz1",
                text="Wear limit reached but no warning is raised.",
                requirement="fr1",
            ),
        ),
        properties=_properties(),
        fmeca=(fmeca,),
        fmeda=(monitored, redundant),
        alternatives=(
            _without_measure_alternative(),
            _redundancy_alternative(),
            *monitoring_alternatives,
            _monitoring_1fit_alternative(),
        ),
        fault_trees=trees,
    )


def example_project_path() -> Path:
    """Filesystem path of the packaged JSON form of the example."""
    return Path(str(resources.files("depra").joinpath("data", DEFAULT_PROJECT_BASENAME)))


def load_example_project() -> Project:
    return load_project(example_project_path())
