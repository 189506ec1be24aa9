import pytest

from depra.case_study import example_project
from depra.model import BasicEvent, FaultTreeModel, Gate, GateKind


@pytest.fixture()
def example():
    return example_project()


def leaf(id_: str, fit: float = 10.0, mdt: float = 24.0) -> BasicEvent:
    return BasicEvent(id=id_, failure_rate_fit=fit, mdt_hours=mdt)


def flat_model(top: str, events: list[BasicEvent], gates: list[Gate],
               mission: float = 8760.0) -> FaultTreeModel:
    return FaultTreeModel(
        top=top, basic_events=tuple(events), gates=tuple(gates),
        mission_time_hours=mission,
    )


def or_gate(id_: str, *inputs: str) -> Gate:
    return Gate(id=id_, kind=GateKind.OR, inputs=tuple(inputs))


def and_gate(id_: str, *inputs: str) -> Gate:
    return Gate(id=id_, kind=GateKind.AND, inputs=tuple(inputs))
