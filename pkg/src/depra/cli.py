"""Command line front end.

Every subcommand works on a project file. Exit codes: 0 on success, 1 for
domain or validation failures (printed as ``error[<code>]: message`` on
stderr), 2 for usage errors. ``simulate`` also exits 1 when the estimate
misses the analytic value by more than the requested sigma band, so it can
serve as a regression check in shell scripts.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Iterable, Sequence

from .analysis import fmeda_table, project_comparison, tree_for_alternative
from .cft_eval import RamsResult, eval_tree
from .errors import DepraError
from .mc import compare_to_analytic
from .model import validate_model
from .project_io import (
    Project,
    export_results_csv,
    format_real,
    load_project,
)

DEFAULT_PORT = 8080
PORT_ENV_VAR = "DEPRA_PORT"


def _fmt(value: float, full: bool = False) -> str:
    return format_real(value, full_precision=full)


def _render_table(rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(row[col]) for row in rows) for col in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [cell.ljust(widths[col]) for col, cell in enumerate(row)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def _load(path: str) -> Project:
    return load_project(path)


def _alternatives_with_trees(project: Project, chosen: str | None) -> Iterable[str]:
    if chosen is not None:
        return [chosen]
    return [a.id for a in project.alternatives if a.tree_id is not None]


def _print_rams(label: str, result: RamsResult, full: bool) -> None:
    print(label)
    print(f"  failure rate    {_fmt(result.failure_rate_fit, full)} FIT"
          f" ({_fmt(result.failure_rate_per_hour, full)} /h)")
    print(f"  MTBF            {_fmt(result.mtbf_hours, full)} h")
    print(f"  MTTF            {_fmt(result.mttf_hours, full)} h")
    print(f"  MDT             {_fmt(result.mdt_hours, full)} h")
    print(f"  availability    {_fmt(result.availability, full)}")
    print(f"  unavailability  {_fmt(result.unavailability, full)}")
    print(f"  mission         {_fmt(result.mission_time_hours, full)} h,"
          f" unreliability {_fmt(result.mission_unreliability, full)}")


def cmd_validate(args: argparse.Namespace) -> int:
    project = _load(args.file)
    findings = 0
    for tree_id in sorted(project.fault_trees):
        report = validate_model(project.fault_trees[tree_id])
        status = "ok" if report.ok else f"{len(report.violations)} violation(s)"
        if report.warnings:
            status += f", {len(report.warnings)} warning(s)"
        print(f"tree '{tree_id}': {status}")
        for violation in report.violations:
            where = f" at {violation.where}" if violation.where else ""
            print(f"  violation[{violation.code}]{where}: {violation.message}")
            findings += 1
        for warning in report.warnings:
            where = f" at {warning.where}" if warning.where else ""
            print(f"  warning[{warning.code}]{where}: {warning.message}")
    print(f"project '{project.name}': references ok")
    return 1 if findings else 0


def cmd_eval(args: argparse.Namespace) -> int:
    project = _load(args.file)
    for alternative_id in _alternatives_with_trees(project, args.alternative):
        alternative = project.alternative(alternative_id)
        tree = tree_for_alternative(project, alternative_id)
        results = eval_tree(tree)
        title = alternative.name or alternative.id
        _print_rams(f"{alternative.id} ({title}), top event '{tree.top}'",
                    results[tree.top], args.full_precision)
        if args.nodes:
            rows = [("node", "lambda [FIT]", "MDT [h]", "unavailability")]
            for node_id in sorted(results):
                node = results[node_id]
                rows.append((node_id, _fmt(node.failure_rate_fit, args.full_precision),
                             _fmt(node.mdt_hours, args.full_precision),
                             _fmt(node.unavailability, args.full_precision)))
            print(_render_table(rows))
        print()
    return 0


def cmd_fmeda(args: argparse.Namespace) -> int:
    project = _load(args.file)
    rows = [("id", "element", "lambda_d [FIT]", "DC", "dd [FIT]", "du [FIT]",
             "safe [FIT]", "SFF")]
    for entry in fmeda_table(project):
        sff = entry["sff"]
        rows.append((
            str(entry["id"]),
            str(entry["element"]),
            _fmt(float(entry["lambda_dangerous_fit"])),
            _fmt(float(entry["detection_coverage"])),
            _fmt(float(entry["lambda_dd_fit"])),
            _fmt(float(entry["lambda_du_fit"])),
            _fmt(float(entry["lambda_safe_fit"])),
            _fmt(float(sff)) if sff is not None else "-",
        ))
    print(_render_table(rows))
    return 0


def _dpn_rows(project: Project, full: bool) -> list[tuple[str, ...]]:
    report = project_comparison(project)
    header = ["property (weight)"]
    header += [report.alternative_names.get(a) or a for a in report.alternative_ids]
    rows = [tuple(header)]
    for prop in report.properties:
        row = [f"{prop.name} ({_fmt(prop.weight, full)})"]
        for alternative_id in report.alternative_ids:
            contribution = report.results[alternative_id].contributions[prop.name]
            row.append(_fmt(contribution, full))
        rows.append(tuple(row))
    totals = ["DPN"] + [
        _fmt(report.results[a].total, full) for a in report.alternative_ids
    ]
    rows.append(tuple(totals))
    expected = ["expected DPN"] + [
        _fmt(report.expected_total, full) for _ in report.alternative_ids
    ]
    rows.append(tuple(expected))
    return rows


def cmd_dpn(args: argparse.Namespace) -> int:
    project = _load(args.file)
    print(_render_table(_dpn_rows(project, args.full_precision)))
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    project = _load(args.file)
    report = project_comparison(project)
    print(_render_table(_dpn_rows(project, args.full_precision)))
    print()
    ranking = " > ".join(report.ranking)
    print(f"ranking: {ranking}")
    fulfilling = [a for a in report.alternative_ids if report.fulfills_all[a]]
    print("meets expected acceptance:", ", ".join(fulfilling) if fulfilling else "none")
    for warning in report.warnings:
        print(f"warning: {warning}")
    for alternative_id in report.alternative_ids:
        if alternative_id in report.rams:
            print()
            _print_rams(f"{alternative_id} top event", report.rams[alternative_id],
                        args.full_precision)
    if args.csv is not None:
        with open(args.csv, "w", encoding="utf-8", newline="") as handle:
            handle.write(export_results_csv(report, full_precision=args.full_precision))
        print(f"\nwrote {args.csv}")
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    project = _load(args.file)
    tree = tree_for_alternative(project, args.alternative)
    oracle = compare_to_analytic(tree, args.horizon, args.seed, k_sigma=args.k_sigma)
    estimate = oracle.estimate
    print(f"alternative: {args.alternative}, top event '{tree.top}'")
    print(f"horizon {_fmt(estimate.horizon_hours)} h, seed {estimate.seed},"
          f" {estimate.samples} transitions")
    print(f"estimated unavailability {_fmt(estimate.unavailability_hat)}"
          f" (stderr {_fmt(estimate.unavailability_stderr)})")
    print(f"analytic  unavailability {_fmt(oracle.analytic.unavailability)}")
    print(f"estimated failure frequency {_fmt(estimate.failure_frequency_hat)} /h")
    band = args.k_sigma * estimate.unavailability_stderr
    verdict = "within" if oracle.passed else "OUTSIDE"
    print(f"difference {_fmt(oracle.abs_difference)} is {verdict}"
          f" {_fmt(args.k_sigma)} sigma ({_fmt(band)})")
    if estimate.no_events:
        print("note: no failure events in the horizon, estimate is degenerate")
    return 0 if oracle.passed else 1


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    port = args.port
    if port is None:
        env_port = os.environ.get(PORT_ENV_VAR)
        port = int(env_port) if env_port else DEFAULT_PORT
    app = create_app(_load(args.file), path=args.file)
    uvicorn.run(app, host=args.host, port=port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="depra", description="Dependability analysis on component fault trees."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="check a project and its trees")
    p_validate.add_argument("file")
    p_validate.set_defaults(func=cmd_validate)

    p_eval = sub.add_parser("eval", help="RAMS figures for alternatives")
    p_eval.add_argument("file")
    p_eval.add_argument("--alternative", help="restrict to one alternative id")
    p_eval.add_argument("--nodes", action="store_true", help="include per-node table")
    p_eval.add_argument("--full-precision", action="store_true")
    p_eval.set_defaults(func=cmd_eval)

    p_fmeda = sub.add_parser("fmeda", help="derived failure rate splits and SFF")
    p_fmeda.add_argument("file")
    p_fmeda.set_defaults(func=cmd_fmeda)

    p_dpn = sub.add_parser("dpn", help="acceptance table with totals")
    p_dpn.add_argument("file")
    p_dpn.add_argument("--full-precision", action="store_true")
    p_dpn.set_defaults(func=cmd_dpn)

    p_compare = sub.add_parser("compare", help="full comparison report")
    p_compare.add_argument("file")
    p_compare.add_argument("--csv", help="also write the report as CSV to this path")
    p_compare.add_argument("--full-precision", action="store_true")
    p_compare.set_defaults(func=cmd_compare)

    p_sim = sub.add_parser("simulate", help="Monte Carlo cross-check of one tree")
    p_sim.add_argument("file")
    p_sim.add_argument("--alternative", required=True)
    p_sim.add_argument("--horizon", type=float, default=1e7, help="hours, default 1e7")
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--k-sigma", type=float, default=3.0)
    p_sim.set_defaults(func=cmd_simulate)

    p_serve = sub.add_parser("serve", help="serve the project over HTTP")
    p_serve.add_argument("file")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument(
        "--port", type=int, default=None,
        help=f"default: ${PORT_ENV_VAR} if set, else {DEFAULT_PORT}",
    )
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DepraError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error[io]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
