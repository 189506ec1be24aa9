"""Project-level orchestration: tie trees, tables, and scoring together.

These helpers are what the CLI and the HTTP service call: evaluate the
fault tree behind an alternative, build the cross-alternative comparison
with top-event RAMS attached, and diff two alternatives for trade-off
conflicts.
"""

from __future__ import annotations

from typing import Mapping

from .cft_eval import RamsResult, eval_tree
from .dpn import (
    Alternative,
    ComparisonReport,
    DpnResult,
    compare_alternatives,
    compute_dpn,
    detect_conflicts,
)
from .errors import DomainError, InvalidModelError
from .model import FlatTree, flatten, validate_model
from .project_io import Project


def tree_for_alternative(project: Project, alternative_id: str) -> FlatTree:
    """Flatten the fault tree an alternative references.

    Raises NotFoundError for unknown alternatives, DomainError for
    qualitative-only ones, InvalidModelError when the tree has violations.
    """
    alternative = project.alternative(alternative_id)
    if alternative.tree_id is None:
        raise DomainError(f"alternative '{alternative_id}' is qualitative-only (no fault tree)")
    return flatten(project.fault_trees[alternative.tree_id])


def rams_for_alternative(project: Project, alternative_id: str) -> dict[str, RamsResult]:
    """Per-node RAMS results for one alternative's flattened tree."""
    return eval_tree(tree_for_alternative(project, alternative_id))


def evaluated_alternatives(project: Project) -> tuple[Alternative, ...]:
    """Alternatives carrying an evaluation for every project property."""
    names = [p.name for p in project.properties]
    return tuple(
        a for a in project.alternatives if all(n in a.evaluations for n in names)
    )


def alternative_dpn(project: Project, alternative_id: str) -> DpnResult:
    return compute_dpn(project.alternative(alternative_id), project.properties)


def project_comparison(project: Project) -> ComparisonReport:
    """Compare every fully evaluated alternative of the project.

    Alternatives with incomplete evaluations are left out of the comparison
    (they typically exist for RAMS studies only). Top-event RAMS results are
    attached for every compared alternative whose tree validates; invalid or
    absent trees never block the scoring itself.
    """
    alternatives = evaluated_alternatives(project)
    if not alternatives:
        raise DomainError("no alternative has a complete evaluation set")
    rams: dict[str, RamsResult] = {}
    for alternative in alternatives:
        if alternative.tree_id is None:
            continue
        model = project.fault_trees[alternative.tree_id]
        if validate_model(model).ok:
            tree = flatten(model)
            rams[alternative.id] = eval_tree(tree)[tree.top]
    return compare_alternatives(alternatives, project.properties, rams=rams)


def alternative_conflicts(
    project: Project, from_id: str, to_id: str
) -> tuple[tuple[str, str], ...]:
    """(improved, worsened) property pairs when moving between alternatives."""
    return detect_conflicts(
        alternative_dpn(project, from_id), alternative_dpn(project, to_id)
    )


def fmeda_table(project: Project) -> tuple[Mapping[str, float | str], ...]:
    """Derived FMEDA rows (splits and SFF) for display surfaces."""
    rows = []
    for entry in project.fmeda:
        total = entry.lambda_safe_fit + entry.lambda_dangerous_fit
        rows.append(
            {
                "id": entry.id,
                "element": entry.element,
                "lambda_dangerous_fit": entry.lambda_dangerous_fit,
                "detection_coverage": entry.detection_coverage,
                "lambda_dd_fit": entry.lambda_dd_fit,
                "lambda_du_fit": entry.lambda_du_fit,
                "lambda_safe_fit": entry.lambda_safe_fit,
                "sff": entry.sff if total > 0 else None,
            }
        )
    return tuple(rows)
