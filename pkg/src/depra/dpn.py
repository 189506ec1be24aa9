"""Weighted trade-off scoring of design alternatives.

Each design alternative is scored against a shared set of dependability
properties (safety, reliability, availability, maintainability, security by
default). A reviewer grades how acceptably the alternative serves each
property on a six-level scale X in [0, 1]; the alternative's dependability
priority number is the weight-blended sum

    DPN = sum_i X_i * K_i

where the weights K_i are strictly positive and typically decade-separated
(100, 10, 1, 0.1, 0.01). With decade weights the total reads like a decimal
scoreboard: every property's grade stays visible as its own digit group, and
a total can be decomposed back into per-property grades.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

from .cft_eval import RamsResult
from .errors import (
    DecompositionUnsupportedError,
    DomainError,
    InconsistentTotalError,
    MissingEvaluationsError,
    UnitMismatchError,
)

# ---------------------------------------------------------------------------
# Vocabulary
# ---------------------------------------------------------------------------


class AcceptanceLevel(float, Enum):
    """Six-level acceptability scale for one property of one alternative."""

    TOTALLY_UNACCEPTABLE = 0.0
    ALMOST_UNACCEPTABLE = 0.2
    PREDOMINANTLY_UNACCEPTABLE = 0.4
    PREDOMINANTLY_ACCEPTABLE = 0.6
    ALMOST_ACCEPTABLE = 0.8
    TOTALLY_ACCEPTABLE = 1.0

    @property
    def label(self) -> str:
        return _LEVEL_LABELS[self]

    @classmethod
    def from_value(cls, value: float, tolerance: float = 1e-9) -> "AcceptanceLevel":
        for level in cls:
            if abs(value - level.value) <= tolerance:
                return level
        raise DomainError(f"{value!r} is not on the six-level acceptance scale")


_LEVEL_LABELS = {
    AcceptanceLevel.TOTALLY_UNACCEPTABLE: "totally unacceptable",
    AcceptanceLevel.ALMOST_UNACCEPTABLE: "almost unacceptable",
    AcceptanceLevel.PREDOMINANTLY_UNACCEPTABLE: "predominantly unacceptable",
    AcceptanceLevel.PREDOMINANTLY_ACCEPTABLE: "predominantly acceptable",
    AcceptanceLevel.ALMOST_ACCEPTABLE: "almost acceptable",
    AcceptanceLevel.TOTALLY_ACCEPTABLE: "totally acceptable",
}

ACCEPTANCE_STEP = 0.2


class Benefit(str, Enum):
    NONE = "none"
    BETTER_LIFE_TIME = "better_life_time"
    BETTER_RELIABILITY_AVAILABILITY = "better_reliability_availability"
    REPUTATION_BENEFIT = "reputation_benefit"
    BETTER_SALE_PRICE = "better_sale_price"


class Drawback(str, Enum):
    NONE = "none"
    NO_CERTIFICATE = "no_certificate"
    FINANCIAL_DISASTER = "financial_disaster"
    WORSE_AVAILABILITY = "worse_availability"
    DAMAGE_OF_REPUTATION = "damage_of_reputation"
    POSTPONED_FINISH = "postponed_finish"
    INCREASED_PURCHASE_COST = "increased_purchase_cost"


class CostBracket(str, Enum):
    NONE = "none"
    IGNORABLE = "ignorable"
    PROPORTIONAL = "proportional"
    QUITE_HIGH = "quite_high"
    TOO_HIGH = "too_high"


class TimeBracket(str, Enum):
    NONE = "none"
    IGNORABLE = "ignorable"
    PROPORTIONAL = "proportional"
    QUITE_LONG = "quite_long"
    TOO_LONG = "too_long"


class FurtherAction(str, Enum):
    NONE = "none"
    REDUNDANCY = "redundancy"
    HIGHER_QUALITY_COMPONENT = "higher_quality_component"
    NEW_COMPONENT = "new_component"


class QuantityKind(str, Enum):
    """Unit tag for objective values; fixes the comparison polarity."""

    FAILURE_RATE_FIT = "failure_rate_fit"
    FAILURE_RATE_PER_HOUR = "failure_rate_per_hour"
    UNAVAILABILITY = "unavailability"
    MISSION_UNRELIABILITY = "mission_unreliability"
    MDT_HOURS = "mdt_hours"
    RPN = "rpn"
    COST = "cost"
    MTBF_HOURS = "mtbf_hours"
    MTTF_HOURS = "mttf_hours"
    AVAILABILITY = "availability"
    SFF = "sff"
    SCORE = "score"

    @property
    def lower_is_better(self) -> bool:
        return self in _LOWER_IS_BETTER


_LOWER_IS_BETTER = frozenset(
    {
        QuantityKind.FAILURE_RATE_FIT,
        QuantityKind.FAILURE_RATE_PER_HOUR,
        QuantityKind.UNAVAILABILITY,
        QuantityKind.MISSION_UNRELIABILITY,
        QuantityKind.MDT_HOURS,
        QuantityKind.RPN,
        QuantityKind.COST,
    }
)


@dataclass(frozen=True)
class Quantity:
    value: float
    kind: QuantityKind

    def __post_init__(self):
        object.__setattr__(self, "kind", QuantityKind(self.kind))
        if not math.isfinite(self.value):
            raise DomainError(f"quantity value must be finite, got {self.value!r}")


class ObjectiveVerdict(str, Enum):
    MEETS_EXPECTED = "meets_expected"
    WITHIN_LIMITS = "within_limits"
    VIOLATES_UPPER = "violates_upper"
    VIOLATES_LOWER = "violates_lower"
    NO_LIMITS = "no_limits"


# ---------------------------------------------------------------------------
# Core types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DependabilityProperty:
    """One scored property with its strictly positive weight."""

    name: str
    weight: float

    def __post_init__(self):
        if not self.name:
            raise DomainError("property name must be non-empty")
        if not math.isfinite(self.weight) or self.weight <= 0.0:
            raise DomainError(
                f"weight of '{self.name}' must be finite and > 0, got {self.weight!r}"
            )


DEFAULT_PROPERTIES: tuple[DependabilityProperty, ...] = (
    DependabilityProperty("safety", 100.0),
    DependabilityProperty("reliability", 10.0),
    DependabilityProperty("availability", 1.0),
    DependabilityProperty("maintainability", 0.1),
    DependabilityProperty("security", 0.01),
)


@dataclass(frozen=True)
class TradeoffCriteria:
    """A reviewer's full judgment of one property of one alternative.

    ``overall_acceptance`` is the X value entering the DPN sum; the other
    fields document how the reviewer got there. ``actual``/``expected`` and
    the acceptable limits support an objective cross-check of the grade.
    """

    overall_acceptance: float
    actual: Quantity | None = None
    expected: Quantity | None = None
    acceptable_upper_limit: float | None = None
    acceptable_lower_limit: float | None = None
    benefit: Benefit = Benefit.NONE
    drawback: Drawback = Drawback.NONE
    cost: CostBracket = CostBracket.NONE
    time_to_achieve: TimeBracket = TimeBracket.NONE
    further_action: FurtherAction = FurtherAction.NONE
    comment: str = ""

    def __post_init__(self):
        object.__setattr__(self, "benefit", Benefit(self.benefit))
        object.__setattr__(self, "drawback", Drawback(self.drawback))
        object.__setattr__(self, "cost", CostBracket(self.cost))
        object.__setattr__(self, "time_to_achieve", TimeBracket(self.time_to_achieve))
        object.__setattr__(self, "further_action", FurtherAction(self.further_action))
        x = self.overall_acceptance
        if not math.isfinite(x) or not 0.0 <= x <= 1.0:
            raise DomainError(f"overall acceptance must be in [0, 1], got {x!r}")
        lower, upper = self.acceptable_lower_limit, self.acceptable_upper_limit
        if lower is not None and upper is not None and lower > upper:
            raise DomainError(f"acceptable limits are inverted: {lower!r} > {upper!r}")


@dataclass(frozen=True)
class Alternative:
    """One design alternative: optional fault tree plus its evaluations."""

    id: str
    name: str = ""
    tree_id: str | None = None
    qualitative_only: bool = False
    evaluations: Mapping[str, TradeoffCriteria] = field(default_factory=dict)
    description: str = ""

    def __post_init__(self):
        object.__setattr__(self, "evaluations", dict(self.evaluations))


@dataclass(frozen=True)
class DpnResult:
    """Per-property contributions and their weighted total for one alternative."""

    alternative_id: str
    contributions: Mapping[str, float]
    weights: Mapping[str, float]
    total: float
    expected_total: float

    def __post_init__(self):
        object.__setattr__(self, "contributions", dict(self.contributions))
        object.__setattr__(self, "weights", dict(self.weights))


@dataclass(frozen=True)
class ComparisonReport:
    """Side-by-side DPN comparison over a shared property set."""

    properties: tuple[DependabilityProperty, ...]
    alternative_ids: tuple[str, ...]
    alternative_names: Mapping[str, str]
    results: Mapping[str, DpnResult]
    ranking: tuple[str, ...]
    expected_total: float
    fulfillment: Mapping[str, Mapping[str, bool]]
    fulfills_all: Mapping[str, bool]
    rams: Mapping[str, RamsResult] = field(default_factory=dict)
    verdicts: Mapping[str, Mapping[str, ObjectiveVerdict]] = field(default_factory=dict)
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "properties", tuple(self.properties))
        object.__setattr__(self, "alternative_ids", tuple(self.alternative_ids))
        object.__setattr__(self, "alternative_names", dict(self.alternative_names))
        object.__setattr__(self, "results", dict(self.results))
        object.__setattr__(self, "ranking", tuple(self.ranking))
        object.__setattr__(self, "fulfillment", dict(self.fulfillment))
        object.__setattr__(self, "fulfills_all", dict(self.fulfills_all))
        object.__setattr__(self, "rams", dict(self.rams))
        object.__setattr__(
            self, "verdicts", {k: dict(v) for k, v in dict(self.verdicts).items()}
        )
        object.__setattr__(self, "warnings", tuple(self.warnings))

    def totals_series(self) -> dict:
        """Actual-vs-expected totals, one bar pair per alternative."""
        return {
            "alternatives": list(self.alternative_ids),
            "labels": [self.alternative_names[a] for a in self.alternative_ids],
            "actual": [self.results[a].total for a in self.alternative_ids],
            "expected": self.expected_total,
        }

    def contributions_series(self) -> dict:
        """Per-property contribution rows across alternatives."""
        return {
            "properties": [p.name for p in self.properties],
            "weights": [p.weight for p in self.properties],
            "per_alternative": {
                a: [self.results[a].contributions[p.name] for p in self.properties]
                for a in self.alternative_ids
            },
        }


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def _check_properties(
    properties: Sequence[DependabilityProperty],
) -> tuple[DependabilityProperty, ...]:
    properties = tuple(properties)
    if not properties:
        raise DomainError("property set must not be empty")
    names = [p.name for p in properties]
    if len(set(names)) != len(names):
        raise DomainError(f"duplicate property names: {names}")
    return properties


def expected_dpn(properties: Sequence[DependabilityProperty]) -> float:
    """Total of a hypothetical alternative graded totally acceptable everywhere."""
    return sum(p.weight for p in _check_properties(properties))


def compute_dpn(
    alternative: Alternative, properties: Sequence[DependabilityProperty]
) -> DpnResult:
    """Blend the alternative's acceptance grades into its priority number."""
    properties = _check_properties(properties)
    missing = tuple(p.name for p in properties if p.name not in alternative.evaluations)
    if missing:
        raise MissingEvaluationsError(alternative.id, missing)
    contributions = {
        p.name: alternative.evaluations[p.name].overall_acceptance * p.weight
        for p in properties
    }
    return DpnResult(
        alternative_id=alternative.id,
        contributions=contributions,
        weights={p.name: p.weight for p in properties},
        total=sum(contributions[p.name] for p in properties),
        expected_total=expected_dpn(properties),
    )


def objective_check(criteria: TradeoffCriteria) -> ObjectiveVerdict:
    """Judge the objective values independently of the reviewer's grade.

    Precedence: meeting the expected value wins; otherwise the acceptable
    limits decide; with no usable values or limits the verdict is
    ``NO_LIMITS`` (nothing objective to check against).
    """
    actual, expected = criteria.actual, criteria.expected
    if actual is not None and expected is not None:
        if actual.kind != expected.kind:
            raise UnitMismatchError(
                f"cannot compare {actual.kind.value} against {expected.kind.value}"
            )
        if actual.kind.lower_is_better:
            meets = actual.value <= expected.value
        else:
            meets = actual.value >= expected.value
        if meets:
            return ObjectiveVerdict.MEETS_EXPECTED
    if actual is not None:
        upper, lower = criteria.acceptable_upper_limit, criteria.acceptable_lower_limit
        if upper is not None and actual.value > upper:
            return ObjectiveVerdict.VIOLATES_UPPER
        if lower is not None and actual.value < lower:
            return ObjectiveVerdict.VIOLATES_LOWER
        if upper is not None or lower is not None:
            return ObjectiveVerdict.WITHIN_LIMITS
    return ObjectiveVerdict.NO_LIMITS


def _disagreement_text(verdict: ObjectiveVerdict, grade: float) -> str | None:
    if verdict in (ObjectiveVerdict.VIOLATES_UPPER, ObjectiveVerdict.VIOLATES_LOWER):
        if grade >= 0.6:
            side = "upper" if verdict is ObjectiveVerdict.VIOLATES_UPPER else "lower"
            return (
                f"graded {grade:g} although the actual value violates the"
                f" acceptable {side} limit"
            )
    elif verdict is ObjectiveVerdict.MEETS_EXPECTED and grade <= 0.4:
        return f"graded {grade:g} although the actual value meets the expected value"
    return None


def objective_disagreement(criteria: TradeoffCriteria) -> str | None:
    """Warning text when the grade and the objective evidence pull apart.

    The grade stays authoritative (it is a human judgment by design); this
    merely flags the two clear contradictions: a violated limit graded on
    the acceptable half of the scale (X >= 0.6), and a met expectation
    graded on the unacceptable half (X <= 0.4). Returns None otherwise.
    """
    return _disagreement_text(objective_check(criteria), criteria.overall_acceptance)


def compare_alternatives(
    alternatives: Sequence[Alternative],
    properties: Sequence[DependabilityProperty],
    rams: Mapping[str, RamsResult] | None = None,
) -> ComparisonReport:
    """Score all alternatives over one shared property set and rank them.

    Ranking is by total, descending; equal totals keep input order. ``rams``
    optionally attaches each alternative's top-event RAMS result.
    """
    properties = _check_properties(properties)
    alternatives = list(alternatives)
    if not alternatives:
        raise DomainError("need at least one alternative to compare")
    ids = [a.id for a in alternatives]
    if len(set(ids)) != len(ids):
        raise DomainError(f"duplicate alternative ids: {ids}")

    results = {a.id: compute_dpn(a, properties) for a in alternatives}
    ranking = tuple(sorted(ids, key=lambda i: -results[i].total))
    fulfillment = {
        a.id: {
            p.name: math.isclose(
                results[a.id].contributions[p.name], p.weight, rel_tol=1e-12, abs_tol=1e-15
            )
            for p in properties
        }
        for a in alternatives
    }
    verdicts: dict[str, dict[str, ObjectiveVerdict]] = {}
    warnings: list[str] = []
    for a in alternatives:
        per_property: dict[str, ObjectiveVerdict] = {}
        for p in properties:
            criteria = a.evaluations[p.name]
            try:
                verdict = objective_check(criteria)
            except UnitMismatchError as error:
                warnings.append(f"alternative '{a.id}', property '{p.name}': {error}")
                continue
            per_property[p.name] = verdict
            text = _disagreement_text(verdict, criteria.overall_acceptance)
            if text is not None:
                warnings.append(f"alternative '{a.id}', property '{p.name}': {text}")
        verdicts[a.id] = per_property
    return ComparisonReport(
        properties=properties,
        alternative_ids=tuple(ids),
        alternative_names={a.id: a.name or a.id for a in alternatives},
        results=results,
        ranking=ranking,
        expected_total=expected_dpn(properties),
        fulfillment=fulfillment,
        fulfills_all={a: all(flags.values()) for a, flags in fulfillment.items()},
        rams=dict(rams or {}),
        verdicts=verdicts,
        warnings=tuple(warnings),
    )


def detect_conflicts(before: DpnResult, after: DpnResult) -> tuple[tuple[str, str], ...]:
    """Find (improved, worsened) property pairs between two evaluations.

    A pair means the change bought one property at another's expense. Both
    results must share the property set and weights.
    """
    if tuple(before.contributions) != tuple(after.contributions) or any(
        before.weights[name] != after.weights.get(name) for name in before.weights
    ):
        raise DomainError("conflict detection needs identical property sets and weights")
    improved = [
        name
        for name in before.contributions
        if after.contributions[name] > before.contributions[name]
    ]
    worsened = [
        name
        for name in before.contributions
        if after.contributions[name] < before.contributions[name]
    ]
    return tuple((p, q) for p in improved for q in worsened)


def decompose_contributions(
    total: float, properties: Sequence[DependabilityProperty]
) -> dict[str, AcceptanceLevel]:
    """Recover the six-level grade vector hiding in a DPN total.

    Works when the weights are spread far enough apart that no combination
    of lower-weight grades can imitate one step of a higher weight; with the
    default decade weights each property simply owns its own digit group.

    Raises:
        DecompositionUnsupportedError: weights admit ambiguous totals.
        InconsistentTotalError: no quantized grade vector yields ``total``.
    """
    properties = _check_properties(properties)
    ordered = sorted(properties, key=lambda p: -p.weight)
    for i, prop in enumerate(ordered):
        tail = sum(p.weight for p in ordered[i + 1:])
        if tail >= ACCEPTANCE_STEP * prop.weight:
            raise DecompositionUnsupportedError(
                f"weights are too close: everything below '{prop.name}' sums to {tail:g}, "
                f"which reaches one {prop.weight:g}-weight step of {ACCEPTANCE_STEP * prop.weight:g}"
            )
    if not math.isfinite(total):
        raise InconsistentTotalError(f"total must be finite, got {total!r}")

    levels: dict[str, AcceptanceLevel] = {}
    remainder = total
    for prop in ordered:
        step = ACCEPTANCE_STEP * prop.weight
        # 1e-9 relative nudge absorbs float dust on exact level boundaries
        index = min(5, max(0, math.floor(remainder / step + 1e-9)))
        level = AcceptanceLevel.from_value(index * ACCEPTANCE_STEP)
        levels[prop.name] = level
        remainder -= level.value * prop.weight
    if abs(remainder) > 1e-9:
        raise InconsistentTotalError(
            f"{total!r} is not reachable by any six-level grade vector "
            f"(residual {remainder:g})"
        )
    return {p.name: levels[p.name] for p in properties}
