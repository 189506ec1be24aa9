"""Trade-off scoring: DPN totals, decomposition, conflicts, objective checks."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from depra.dpn import (
    DEFAULT_PROPERTIES,
    AcceptanceLevel,
    DependabilityProperty,
    Quantity,
    QuantityKind,
    TradeoffCriteria,
    compare_alternatives,
    compute_dpn,
    decompose_contributions,
    detect_conflicts,
    expected_dpn,
    objective_check,
    objective_disagreement,
)
from depra.errors import (
    DecompositionUnsupportedError,
    DomainError,
    InconsistentTotalError,
    MissingEvaluationsError,
    UnitMismatchError,
)
from depra.project_io import Alternative

FIT = QuantityKind.FAILURE_RATE_FIT
AVAIL = QuantityKind.AVAILABILITY

LEVELS = [level.value for level in AcceptanceLevel]


def alternative(alt_id: str, *grades: float) -> Alternative:
    evaluations = {
        prop.name: TradeoffCriteria(overall_acceptance=grade)
        for prop, grade in zip(DEFAULT_PROPERTIES, grades)
    }
    return Alternative(id=alt_id, name=alt_id, evaluations=evaluations)


grade_vectors = st.lists(st.sampled_from(LEVELS), min_size=5, max_size=5)


# -- acceptance scale ---------------------------------------------------------


def test_six_levels_with_verbatim_labels():
    assert [level.label for level in AcceptanceLevel] == [
        "totally unacceptable",
        "almost unacceptable",
        "predominantly unacceptable",
        "predominantly acceptable",
        "almost acceptable",
        "totally acceptable",
    ]
    assert [level.value for level in AcceptanceLevel] == [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]


def test_from_value_snaps_within_tolerance():
    assert AcceptanceLevel.from_value(0.8) is AcceptanceLevel.ALMOST_ACCEPTABLE
    assert AcceptanceLevel.from_value(0.8 + 1e-12) is AcceptanceLevel.ALMOST_ACCEPTABLE
    with pytest.raises(DomainError):
        AcceptanceLevel.from_value(0.5)


# -- totals -------------------------------------------------------------------


def test_expected_total_for_default_weights():
    assert expected_dpn(DEFAULT_PROPERTIES) == pytest.approx(111.11, abs=1e-9)


def test_reference_grade_vectors():
    assert compute_dpn(alternative("wm", 0.8, 0.8, 0.8, 1, 1), DEFAULT_PROPERTIES).total == (
        pytest.approx(88.91, abs=1e-9)
    )
    assert compute_dpn(alternative("wr", 1, 1, 1, 1, 1), DEFAULT_PROPERTIES).total == (
        pytest.approx(111.11, abs=1e-9)
    )
    assert compute_dpn(alternative("mo", 1, 1, 0.2, 1, 1), DEFAULT_PROPERTIES).total == (
        pytest.approx(110.31, abs=1e-9)
    )


def test_contributions_are_weighted_grades():
    result = compute_dpn(alternative("wm", 0.8, 0.8, 0.8, 1, 1), DEFAULT_PROPERTIES)
    assert result.contributions == {
        "safety": 80.0,
        "reliability": 8.0,
        "availability": 0.8,
        "maintainability": 0.1,
        "security": 0.01,
    }
    assert result.weights == {p.name: p.weight for p in DEFAULT_PROPERTIES}
    assert result.expected_total == pytest.approx(111.11, abs=1e-9)


def test_all_zero_grades_score_zero():
    assert compute_dpn(alternative("z", 0, 0, 0, 0, 0), DEFAULT_PROPERTIES).total == 0.0


def test_missing_evaluations_are_named():
    with pytest.raises(MissingEvaluationsError) as err:
        compute_dpn(alternative("x", 1.0), DEFAULT_PROPERTIES)
    assert err.value.alternative_id == "x"
    assert err.value.missing == ("reliability", "availability", "maintainability", "security")
    assert "reliability" in str(err.value)


@given(grades=grade_vectors)
def test_total_never_exceeds_expected(grades):
    result = compute_dpn(alternative("a", *grades), DEFAULT_PROPERTIES)
    assert result.total <= result.expected_total + 1e-9
    reaches = abs(result.total - result.expected_total) <= 1e-9
    assert reaches == all(g == 1.0 for g in grades)


@given(grades=grade_vectors, index=st.integers(min_value=0, max_value=4))
def test_total_strictly_monotone_in_any_grade(grades, index):
    if grades[index] == 1.0:
        return
    raised = list(grades)
    raised[index] = 1.0
    low = compute_dpn(alternative("a", *grades), DEFAULT_PROPERTIES).total
    high = compute_dpn(alternative("a", *raised), DEFAULT_PROPERTIES).total
    assert high > low


# -- ranking ------------------------------------------------------------------


def test_ranking_sorted_by_total_ties_keep_input_order():
    report = compare_alternatives(
        [
            alternative("b", 1, 1, 1, 1, 1),
            alternative("a", 1, 1, 1, 1, 1),
            alternative("c", 0.8, 1, 1, 1, 1),
        ],
        DEFAULT_PROPERTIES,
    )
    assert report.ranking == ("b", "a", "c")
    assert report.fulfills_all == {"b": True, "a": True, "c": False}
    assert report.fulfillment["c"]["safety"] is False
    assert report.fulfillment["c"]["reliability"] is True


@given(
    vec_a=grade_vectors,
    vec_b=grade_vectors,
    k=st.integers(min_value=-8, max_value=8),
)
def test_ranking_invariant_under_uniform_weight_scaling(vec_a, vec_b, k):
    scale = 2.0**k
    scaled = tuple(
        DependabilityProperty(p.name, p.weight * scale) for p in DEFAULT_PROPERTIES
    )
    base = compare_alternatives(
        [alternative("a", *vec_a), alternative("b", *vec_b)], DEFAULT_PROPERTIES
    )
    rescaled = compare_alternatives(
        [alternative("a", *vec_a), alternative("b", *vec_b)], scaled
    )
    assert base.ranking == rescaled.ranking


# -- decomposition ------------------------------------------------------------


def test_decompose_reference_totals():
    assert decompose_contributions(110.31, DEFAULT_PROPERTIES) == {
        "safety": AcceptanceLevel.TOTALLY_ACCEPTABLE,
        "reliability": AcceptanceLevel.TOTALLY_ACCEPTABLE,
        "availability": AcceptanceLevel.ALMOST_UNACCEPTABLE,
        "maintainability": AcceptanceLevel.TOTALLY_ACCEPTABLE,
        "security": AcceptanceLevel.TOTALLY_ACCEPTABLE,
    }
    assert all(
        level is AcceptanceLevel.TOTALLY_ACCEPTABLE
        for level in decompose_contributions(111.11, DEFAULT_PROPERTIES).values()
    )
    assert decompose_contributions(88.91, DEFAULT_PROPERTIES) == {
        "safety": AcceptanceLevel.ALMOST_ACCEPTABLE,
        "reliability": AcceptanceLevel.ALMOST_ACCEPTABLE,
        "availability": AcceptanceLevel.ALMOST_ACCEPTABLE,
        "maintainability": AcceptanceLevel.TOTALLY_ACCEPTABLE,
        "security": AcceptanceLevel.TOTALLY_ACCEPTABLE,
    }
    assert decompose_contributions(0.0, DEFAULT_PROPERTIES) == {
        p.name: AcceptanceLevel.TOTALLY_UNACCEPTABLE for p in DEFAULT_PROPERTIES
    }


def test_decompose_rejects_unreachable_total():
    with pytest.raises(InconsistentTotalError):
        decompose_contributions(0.001, DEFAULT_PROPERTIES)
    with pytest.raises(InconsistentTotalError):
        decompose_contributions(200.0, DEFAULT_PROPERTIES)


def test_decompose_rejects_ambiguous_weights():
    close = (DependabilityProperty("a", 1.0), DependabilityProperty("b", 0.5))
    with pytest.raises(DecompositionUnsupportedError):
        decompose_contributions(1.0, close)


@given(grades=grade_vectors)
def test_decompose_inverts_compute(grades):
    total = compute_dpn(alternative("a", *grades), DEFAULT_PROPERTIES).total
    levels = decompose_contributions(total, DEFAULT_PROPERTIES)
    assert [levels[p.name].value for p in DEFAULT_PROPERTIES] == list(grades)


# -- conflicts ----------------------------------------------------------------


def test_conflict_example_security_vs_availability():
    before = compute_dpn(alternative("m", 1, 1, 1, 1, 0), DEFAULT_PROPERTIES)
    after = compute_dpn(alternative("m", 1, 1, 0, 1, 1), DEFAULT_PROPERTIES)
    assert before.total == pytest.approx(111.10, abs=1e-9)
    assert after.total == pytest.approx(110.11, abs=1e-9)
    assert detect_conflicts(before, after) == (("security", "availability"),)


def test_no_conflict_with_itself():
    result = compute_dpn(alternative("m", 1, 0.6, 1, 0.2, 0), DEFAULT_PROPERTIES)
    assert detect_conflicts(result, result) == ()


def test_pure_improvement_is_not_a_conflict():
    before = compute_dpn(alternative("m", 0.2, 0.2, 0.2, 0.2, 0.2), DEFAULT_PROPERTIES)
    after = compute_dpn(alternative("m", 1, 1, 1, 1, 1), DEFAULT_PROPERTIES)
    assert detect_conflicts(before, after) == ()
    assert detect_conflicts(after, before) == ()


def test_conflicts_need_matching_property_sets():
    before = compute_dpn(alternative("m", 1, 1, 1, 1, 1), DEFAULT_PROPERTIES)
    other = compute_dpn(
        Alternative(id="m", name="m", evaluations={"safety": TradeoffCriteria(1.0)}),
        DEFAULT_PROPERTIES[:1],
    )
    with pytest.raises(DomainError):
        detect_conflicts(before, other)


@given(vec_a=grade_vectors, vec_b=grade_vectors)
def test_conflict_pairs_are_improved_cross_worsened(vec_a, vec_b):
    before = compute_dpn(alternative("m", *vec_a), DEFAULT_PROPERTIES)
    after = compute_dpn(alternative("m", *vec_b), DEFAULT_PROPERTIES)
    names = [p.name for p in DEFAULT_PROPERTIES]
    improved = {n for n, a, b in zip(names, vec_a, vec_b) if b > a}
    worsened = {n for n, a, b in zip(names, vec_a, vec_b) if b < a}
    pairs = detect_conflicts(before, after)
    assert set(pairs) == {(i, w) for i in improved for w in worsened}


# -- objective checks ---------------------------------------------------------


def check(**kwargs):
    return objective_check(TradeoffCriteria(overall_acceptance=1.0, **kwargs))


def test_objective_check_branches():
    assert check(actual=Quantity(2, FIT), expected=Quantity(10, FIT)).value == "meets_expected"
    assert check(actual=Quantity(10, FIT), expected=Quantity(10, FIT)).value == "meets_expected"
    assert (
        check(actual=Quantity(12, FIT), expected=Quantity(10, FIT), acceptable_upper_limit=20.0).value
        == "within_limits"
    )
    assert (
        check(actual=Quantity(20, FIT), expected=Quantity(10, FIT), acceptable_upper_limit=20.0).value
        == "within_limits"
    )
    assert (
        check(actual=Quantity(25, FIT), expected=Quantity(10, FIT), acceptable_upper_limit=20.0).value
        == "violates_upper"
    )
    assert (
        check(
            actual=Quantity(0.9, AVAIL),
            expected=Quantity(0.999, AVAIL),
            acceptable_lower_limit=0.95,
        ).value
        == "violates_lower"
    )
    assert check(expected=Quantity(10, FIT)).value == "no_limits"
    assert check(actual=Quantity(10, FIT)).value == "no_limits"


def test_objective_check_polarity_by_kind():
    # for availability bigger is better, so exceeding the expectation meets it
    assert (
        check(actual=Quantity(0.999, AVAIL), expected=Quantity(0.99, AVAIL)).value
        == "meets_expected"
    )
    assert (
        check(actual=Quantity(0.9, AVAIL), expected=Quantity(0.99, AVAIL)).value == "no_limits"
    )


def test_objective_check_rejects_unit_mismatch():
    with pytest.raises(UnitMismatchError):
        check(actual=Quantity(1, FIT), expected=Quantity(1, AVAIL))


def test_quantity_kind_polarity():
    lower_better = {
        QuantityKind.FAILURE_RATE_FIT,
        QuantityKind.FAILURE_RATE_PER_HOUR,
        QuantityKind.UNAVAILABILITY,
        QuantityKind.MISSION_UNRELIABILITY,
        QuantityKind.MDT_HOURS,
        QuantityKind.RPN,
        QuantityKind.COST,
    }
    for kind in QuantityKind:
        assert kind.lower_is_better == (kind in lower_better)


# -- subjective vs objective disagreement -------------------------------------


def test_disagreement_on_high_grade_despite_violation():
    criteria = TradeoffCriteria(
        overall_acceptance=0.8,
        actual=Quantity(25, FIT),
        expected=Quantity(10, FIT),
        acceptable_upper_limit=20.0,
    )
    message = objective_disagreement(criteria)
    assert message is not None
    assert "0.8" in message and "upper" in message


def test_disagreement_on_low_grade_despite_meeting():
    criteria = TradeoffCriteria(
        overall_acceptance=0.2,
        actual=Quantity(2, FIT),
        expected=Quantity(10, FIT),
    )
    message = objective_disagreement(criteria)
    assert message is not None
    assert "meets the expected" in message


def test_consistent_grades_raise_no_flag():
    # violating with a low grade and meeting with a high grade both agree
    assert (
        objective_disagreement(
            TradeoffCriteria(
                overall_acceptance=0.2,
                actual=Quantity(25, FIT),
                expected=Quantity(10, FIT),
                acceptable_upper_limit=20.0,
            )
        )
        is None
    )
    assert (
        objective_disagreement(
            TradeoffCriteria(overall_acceptance=1.0, actual=Quantity(2, FIT), expected=Quantity(10, FIT))
        )
        is None
    )
    assert (
        objective_disagreement(TradeoffCriteria(overall_acceptance=0.0)) is None
    )


def test_comparison_report_carries_verdicts_and_warnings():
    overgraded = Alternative(
        id="rosy",
        name="rosy",
        evaluations={
            "safety": TradeoffCriteria(
                overall_acceptance=1.0,
                actual=Quantity(25, FIT),
                expected=Quantity(10, FIT),
                acceptable_upper_limit=20.0,
            ),
            "reliability": TradeoffCriteria(overall_acceptance=1.0),
            "availability": TradeoffCriteria(overall_acceptance=1.0),
            "maintainability": TradeoffCriteria(overall_acceptance=1.0),
            "security": TradeoffCriteria(overall_acceptance=1.0),
        },
    )
    report = compare_alternatives([overgraded], DEFAULT_PROPERTIES)
    assert report.verdicts["rosy"]["safety"].value == "violates_upper"
    assert len(report.warnings) == 1
    assert "rosy" in report.warnings[0] and "safety" in report.warnings[0]


def test_comparison_report_clean_when_grades_agree(example):
    from depra.analysis import project_comparison

    report = project_comparison(example)
    assert report.warnings == ()
    assert report.verdicts["monitoring_1fit"]["availability"].value == "violates_upper"
    assert report.verdicts["monitoring_1fit"]["safety"].value == "meets_expected"
