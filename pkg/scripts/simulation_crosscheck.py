#!/usr/bin/env python3
"""Show the Monte Carlo oracle converging on the analytic RAMS figures.

Builds a two-out-of-two structure at rates one can actually observe
(1e-3 /h rather than FIT scale) and sweeps the horizon. The estimate
should wander within a shrinking error bar around the analytic value;
the z column is the disagreement in standard errors.
"""

from __future__ import annotations

import argparse

from depra.cft_eval import eval_tree
from depra.mc import simulate
from depra.model import BasicEvent, FaultTreeModel, Gate, GateKind, flatten


def scaled_pair() -> FaultTreeModel:
    return FaultTreeModel(
        top="both_down",
        basic_events=(
            BasicEvent(id="left", failure_rate_fit=1e6, mdt_hours=24.0),
            BasicEvent(id="right", failure_rate_fit=1e6, mdt_hours=24.0),
        ),
        gates=(Gate(id="both_down", kind=GateKind.AND, inputs=("left", "right")),),
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    tree = flatten(scaled_pair())
    analytic = eval_tree(tree)[tree.top]
    print(f"analytic: U={analytic.unavailability:.6e} "
          f"lambda={analytic.failure_rate_per_hour:.6e} /h "
          f"MDT={analytic.mdt_hours:g} h")
    print(f"{'horizon [h]':>12} {'U estimate':>12} {'stderr':>10} {'z':>6}")
    for horizon in (1e5, 1e6, 1e7, 1e8):
        estimate = simulate(tree, horizon, seed=args.seed)
        if estimate.unavailability_stderr > 0.0:
            z = (estimate.unavailability_hat - analytic.unavailability) \
                / estimate.unavailability_stderr
            z_text = f"{z:+.2f}"
        else:
            z_text = "n/a"
        print(f"{horizon:12.0e} {estimate.unavailability_hat:12.6e} "
              f"{estimate.unavailability_stderr:10.2e} {z_text:>6}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
