#!/usr/bin/env python3
"""Walk the bundled brake warning contact project end to end.

Prints the FMECA revisions, the FMEDA-derived failure rate splits, the
RAMS figures of every modelled alternative, and the weighted trade-off
comparison with its ranking and conflict check. Handy as a smoke test
and as a worked example of the library API.
"""

from __future__ import annotations

from depra.analysis import project_comparison, tree_for_alternative
from depra.case_study import example_project
from depra.cft_eval import top_result
from depra.dpn import detect_conflicts
from depra.risk_tables import compute_rpn, compute_sff, fmeda_split


def main() -> int:
    project = example_project()
    print(f"project: {project.name}")
    print(f"alternatives: {', '.join(a.id for a in project.alternatives)}")

    print("\nFMECA")
    for entry in project.fmeca:
        print(f"  {entry.id}: S={entry.severity} O={entry.occurrence} "
              f"D={entry.detection} RPN={entry.rpn}")
        for alt_id, rev in entry.measures.items():
            rpn = compute_rpn(rev.severity, rev.occurrence, rev.detection)
            print(f"    revised by {alt_id}: S={rev.severity} O={rev.occurrence} "
                  f"D={rev.detection} RPN={rpn}")

    print("\nFMEDA")
    for entry in project.fmeda:
        dd, du = fmeda_split(entry.lambda_dangerous_fit, entry.detection_coverage)
        sff = compute_sff(entry.lambda_safe_fit, dd, du)
        print(f"  {entry.element}: DC={entry.detection_coverage} "
              f"dd={dd:g} FIT du={du:g} FIT SFF={sff:.4f}")

    print("\nRAMS per alternative")
    for alternative in project.alternatives:
        if alternative.tree_id is None:
            print(f"  {alternative.id}: qualitative only")
            continue
        top = top_result(tree_for_alternative(project, alternative.id))
        print(f"  {alternative.id}: {top.failure_rate_fit:.6g} FIT, "
              f"MDT {top.mdt_hours:.6g} h, MTBF {top.mtbf_hours:.6g} h, "
              f"U {top.unavailability:.6g}")

    report = project_comparison(project)
    print("\ntrade-off comparison")
    print(f"  expected total: {report.expected_total:.2f}")
    for alt_id in report.ranking:
        marker = " (meets expected)" if report.fulfills_all[alt_id] else ""
        print(f"  {alt_id}: {report.results[alt_id].total:.2f}{marker}")
    for message in report.warnings:
        print(f"  warning: {message}")

    best, runner_up = report.ranking[0], report.ranking[1]
    pairs = detect_conflicts(report.results[runner_up], report.results[best])
    if pairs:
        joined = ", ".join(f"{up} vs {down}" for up, down in pairs)
        print(f"\nswitching {runner_up} -> {best} trades off: {joined}")
    else:
        print(f"\nswitching {runner_up} -> {best} worsens no property")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
