"""Monte Carlo cross-check for the analytic tree evaluation.

Every leaf is simulated as an alternating renewal process: exponentially
distributed up intervals with mean 1/lambda followed by exponentially
distributed repairs with mean MDT. The top event is re-evaluated at every
leaf transition, giving the time-averaged top unavailability and the top
failure frequency over one long horizon. The standard error comes from
batch means over equal time windows.

Runs are deterministic: every leaf draws from its own stream derived from
(seed, leaf index), so results do not depend on event interleaving.

Realistic FIT-scale rates would need astronomically long horizons; oracle
comparisons instead run at scaled-up rates and lean on the scale invariance
of the analytic formulas (lambda -> c*lambda with mdt -> mdt/c leaves every
unavailability unchanged).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cft_eval import RamsResult, eval_tree
from .errors import DomainError
from .model import FlatTree, GateKind

DEFAULT_BATCHES = 32


@dataclass(frozen=True)
class SimEstimate:
    """Simulation outcome for one (tree, horizon, seed) triple."""

    unavailability_hat: float
    unavailability_stderr: float
    failure_frequency_hat: float
    horizon_hours: float
    seed: int
    samples: int
    no_events: bool


@dataclass(frozen=True)
class OracleReport:
    """Side-by-side analytic vs simulated top-event unavailability."""

    analytic: RamsResult
    estimate: SimEstimate
    abs_difference: float
    k_sigma: float
    passed: bool


def _leaf_transition_times(
    rng: np.random.Generator, lam: float, mdt: float, horizon: float
) -> np.ndarray:
    """Times at which one leaf toggles state, in (0, horizon]."""
    if lam <= 0.0:
        return np.empty(0)
    mean_cycle = 1.0 / lam + mdt
    chunk = int(horizon / mean_cycle + 10.0 * math.sqrt(horizon / mean_cycle + 1.0) + 10.0)
    pieces: list[np.ndarray] = []
    t = 0.0
    while t <= horizon:
        ups = rng.exponential(1.0 / lam, chunk)
        downs = rng.exponential(mdt, chunk)
        interleaved = np.empty(2 * chunk)
        interleaved[0::2] = ups
        interleaved[1::2] = downs
        cumulative = t + np.cumsum(interleaved)
        pieces.append(cumulative)
        t = float(cumulative[-1])
    times = np.concatenate(pieces)
    return times[times <= horizon]


def simulate(
    tree: FlatTree, horizon_hours: float, seed: int, batches: int = DEFAULT_BATCHES
) -> SimEstimate:
    """Estimate top-event unavailability and failure frequency by simulation."""
    if not math.isfinite(horizon_hours) or horizon_hours <= 0.0:
        raise DomainError(f"horizon must be finite and > 0, got {horizon_hours!r}")
    if batches < 2:
        raise DomainError(f"need at least 2 batches, got {batches}")

    leaves = list(tree.events.values())
    streams = np.random.SeedSequence(seed).spawn(len(leaves))
    per_leaf_times = [
        _leaf_transition_times(
            np.random.Generator(np.random.PCG64(stream)),
            leaf.failure_rate_per_hour,
            leaf.mdt_hours,
            horizon_hours,
        )
        for leaf, stream in zip(leaves, streams)
    ]

    times = np.concatenate(per_leaf_times) if per_leaf_times else np.empty(0)
    owners = np.concatenate(
        [np.full(len(t), i, dtype=np.int32) for i, t in enumerate(per_leaf_times)]
        or [np.empty(0, dtype=np.int32)]
    )
    order = np.argsort(times, kind="stable")
    times = times[order]
    owners = owners[order]
    samples = len(times)
    if samples == 0:
        return SimEstimate(
            unavailability_hat=0.0,
            unavailability_stderr=0.0,
            failure_frequency_hat=0.0,
            horizon_hours=horizon_hours,
            seed=seed,
            samples=0,
            no_events=True,
        )

    # leaf i is down after an odd number of its own transitions
    states: dict[str, np.ndarray] = {}
    for i, leaf in enumerate(leaves):
        counts = np.cumsum(owners == i)
        states[leaf.id] = (counts & 1).astype(bool)
    for node_id in tree.postorder():
        if node_id in states:
            continue
        gate = tree.gates[node_id]
        children = [states[ref] for ref in gate.inputs]
        if gate.kind is GateKind.AND:
            states[node_id] = np.logical_and.reduce(children)
        else:
            states[node_id] = np.logical_or.reduce(children)
    top_down = states[tree.top]

    # segment k = [times[k], times[k+1]); the stretch before the first event is all-up
    durations = np.diff(np.concatenate([times, [horizon_hours]]))
    downtime = float(durations[top_down].sum())
    rising = int(np.count_nonzero(top_down & ~np.concatenate([[False], top_down[:-1]])))

    starts = times[top_down]
    ends = starts + durations[top_down]
    boundaries = np.linspace(0.0, horizon_hours, batches + 1)
    window = horizon_hours / batches
    batch_unavailability = np.empty(batches)
    for j in range(batches):
        lo, hi = boundaries[j], boundaries[j + 1]
        overlap = np.clip(np.minimum(ends, hi) - np.maximum(starts, lo), 0.0, None)
        batch_unavailability[j] = overlap.sum() / window
    stderr = float(batch_unavailability.std(ddof=1) / math.sqrt(batches))

    return SimEstimate(
        unavailability_hat=downtime / horizon_hours,
        unavailability_stderr=stderr,
        failure_frequency_hat=rising / horizon_hours,
        horizon_hours=horizon_hours,
        seed=seed,
        samples=samples,
        no_events=False,
    )


def compare_to_analytic(
    tree: FlatTree, horizon_hours: float, seed: int, k_sigma: float = 3.0
) -> OracleReport:
    """Simulate and test |U_analytic - U_hat| <= k_sigma * stderr.

    With a degenerate horizon (no events observed) the standard error is
    zero and the check only passes when the analytic value is zero too.
    """
    if k_sigma <= 0.0:
        raise DomainError(f"k_sigma must be > 0, got {k_sigma!r}")
    analytic = eval_tree(tree)[tree.top]
    estimate = simulate(tree, horizon_hours, seed)
    difference = abs(analytic.unavailability - estimate.unavailability_hat)
    return OracleReport(
        analytic=analytic,
        estimate=estimate,
        abs_difference=difference,
        k_sigma=k_sigma,
        passed=difference <= k_sigma * estimate.unavailability_stderr,
    )
