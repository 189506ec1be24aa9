"""Steady-state RAMS evaluation of flat fault trees.

Every node is summarized by a failure rate lambda (per hour), a mean down
time (hours), and measures derived from them:

    unavailability  U = lambda*mdt / (1 + lambda*mdt)
    availability    A = 1 - U  ( = MTBF / (MTBF + MDT) )
    MTBF = 1/lambda, MTTF = MTBF - MDT
    mission unreliability = 1 - exp(-lambda * mission_time)

Gates combine repairable children under the usual independence assumptions:

    OR   lambda = sum(lambda_i)
         mdt    = sum(lambda_i * mdt_i) / sum(lambda_i)   (rate-weighted)
    AND  U      = prod(U_i)
         1/mdt  = sum(1/mdt_i)                            (parallel repair)
         lambda = U / mdt                                  (failure frequency)

For an AND of two children this frequency reproduces the classical
lambda_1*U_2 + lambda_2*U_1 to first order in lambda*mdt. Both gate folds
are commutative and associative, so n-ary gates evaluate order-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import DomainError
from .model import DEFAULT_MISSION_TIME_HOURS, BasicEvent, FlatTree, GateKind, per_hour_to_fit


@dataclass(frozen=True)
class RamsResult:
    """Steady-state dependability measures of one node."""

    failure_rate_per_hour: float
    failure_rate_fit: float
    mdt_hours: float
    mtbf_hours: float
    mttf_hours: float
    availability: float
    unavailability: float
    mission_time_hours: float
    mission_unreliability: float


def _derive(
    lam: float,
    mdt: float,
    unavailability: float,
    mission_time: float,
) -> RamsResult:
    mtbf = math.inf if lam == 0.0 else 1.0 / lam
    return RamsResult(
        failure_rate_per_hour=lam,
        failure_rate_fit=per_hour_to_fit(lam),
        mdt_hours=mdt,
        mtbf_hours=mtbf,
        mttf_hours=mtbf - mdt,
        availability=1.0 - unavailability,
        unavailability=unavailability,
        mission_time_hours=mission_time,
        mission_unreliability=-math.expm1(-lam * mission_time),
    )


def _from_rate(lam: float, mdt: float, mission_time: float) -> RamsResult:
    x = lam * mdt
    return _derive(lam, mdt, x / (1.0 + x), mission_time)


def eval_basic_event(
    event: BasicEvent, mission_time_hours: float = DEFAULT_MISSION_TIME_HOURS
) -> RamsResult:
    """Evaluate a repairable leaf from its FIT rate and mean down time."""
    if not math.isfinite(event.mdt_hours) or event.mdt_hours <= 0.0:
        raise DomainError(f"mdt_hours must be finite and > 0, got {event.mdt_hours!r}")
    if not math.isfinite(mission_time_hours) or mission_time_hours <= 0.0:
        raise DomainError(f"mission time must be finite and > 0, got {mission_time_hours!r}")
    return _from_rate(event.failure_rate_per_hour, event.mdt_hours, mission_time_hours)


def _common_mission_time(children: Sequence[RamsResult]) -> float:
    times = {c.mission_time_hours for c in children}
    if len(times) != 1:
        raise DomainError(f"children evaluated at different mission times: {sorted(times)}")
    return times.pop()


def eval_or(children: Sequence[RamsResult]) -> RamsResult:
    """Combine children that each bring the system down on their own.

    The gate rate is the exact sum of child rates; the gate MDT is the
    rate-weighted mean of child MDTs (a failure seen at the gate is a child
    failure, drawn with probability proportional to that child's rate).
    """
    children = list(children)
    if not children:
        raise DomainError("OR gate needs at least one child")
    mission_time = _common_mission_time(children)
    lam = math.fsum(c.failure_rate_per_hour for c in children)
    if lam == 0.0:
        mdt = math.fsum(c.mdt_hours for c in children) / len(children)
    else:
        mdt = math.fsum(c.failure_rate_per_hour * c.mdt_hours for c in children) / lam
    return _from_rate(lam, mdt, mission_time)


def eval_and(children: Sequence[RamsResult]) -> RamsResult:
    """Combine children that must all be down for the gate to be down.

    Steady-state independence makes the gate unavailability the product of
    child unavailabilities; concurrent repairs give the harmonic MDT; their
    quotient is the gate failure frequency.
    """
    children = list(children)
    if not children:
        raise DomainError("AND gate needs at least one child")
    mission_time = _common_mission_time(children)
    unavailability = math.prod(c.unavailability for c in children)
    mdt = 1.0 / math.fsum(1.0 / c.mdt_hours for c in children)
    lam = unavailability / mdt
    return _derive(lam, mdt, unavailability, mission_time)


_GATE_EVAL = {GateKind.OR: eval_or, GateKind.AND: eval_and}


def eval_tree(tree: FlatTree) -> dict[str, RamsResult]:
    """Evaluate every node of a flat tree bottom-up.

    Returns a map from qualified node id to RamsResult; the top event's
    entry is ``results[tree.top]``.
    """
    results: dict[str, RamsResult] = {}
    for node_id in tree.postorder():
        event = tree.events.get(node_id)
        if event is not None:
            results[node_id] = eval_basic_event(event, tree.mission_time_hours)
        else:
            gate = tree.gates[node_id]
            children = [results[ref] for ref in gate.inputs]
            results[node_id] = _GATE_EVAL[gate.kind](children)
    return results


def top_result(tree: FlatTree, results: Mapping[str, RamsResult] | None = None) -> RamsResult:
    """Convenience accessor for the top event's result."""
    if results is None:
        results = eval_tree(tree)
    return results[tree.top]
