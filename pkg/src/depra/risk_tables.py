"""FMECA risk priority numbers and FMEDA diagnostic-coverage splits.

FMECA entries score failure modes with severity/occurrence/detection on
1..10 scales; RPN is their product. Planned mitigation measures attach
revised scores per design alternative.

FMEDA entries split an element's dangerous failure rate by diagnostic
coverage into detected and undetected shares and derive the safe failure
fraction. The two shares can be materialized as fault tree leaves so a
monitoring concept becomes an evaluable tree.
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass, field
from typing import Mapping

from .errors import DomainError
from .model import BasicEvent


def _check_scale(value: int, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{what} must be an integer in 1..10, got {value!r}")
    if not 1 <= value <= 10:
        raise DomainError(f"{what} must be in 1..10, got {value}")
    return value


def compute_rpn(severity: int, occurrence: int, detection: int) -> int:
    """Risk priority number: severity * occurrence * detection, range 1..1000."""
    return (
        _check_scale(severity, "severity")
        * _check_scale(occurrence, "occurrence")
        * _check_scale(detection, "detection")
    )


@dataclass(frozen=True)
class RiskRevision:
    """Re-scored severity/occurrence/detection after applying one measure."""

    severity: int
    occurrence: int
    detection: int
    further_action: str | None = None

    def __post_init__(self):
        # empty text means no action; keep one canonical spelling so that
        # saved and reloaded revisions compare equal
        if not self.further_action:
            object.__setattr__(self, "further_action", None)

    @property
    def rpn(self) -> int:
        return compute_rpn(self.severity, self.occurrence, self.detection)


@dataclass(frozen=True)
class FmecaEntry:
    """One failure mode with its scores and per-measure revisions.

    ``measures`` maps design alternative ids to the revised scores that
    alternative achieves for this failure mode.
    """

    id: str
    description: str
    severity: int
    occurrence: int
    detection: int
    measures: Mapping[str, RiskRevision] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "measures", dict(self.measures))

    @property
    def rpn(self) -> int:
        return compute_rpn(self.severity, self.occurrence, self.detection)


# ---------------------------------------------------------------------------
# FMEDA
# ---------------------------------------------------------------------------


def fmeda_split(lambda_dangerous: float, detection_coverage: float) -> tuple[float, float]:
    """Split a dangerous failure rate into (detected, undetected) shares.

    The larger share is computed by multiplication and the smaller one by
    subtraction, which keeps ``dd + du == lambda_dangerous`` bit-exact.
    """
    if not math.isfinite(lambda_dangerous) or lambda_dangerous < 0.0:
        raise DomainError(
            f"dangerous failure rate must be finite and >= 0, got {lambda_dangerous!r}"
        )
    if not math.isfinite(detection_coverage) or not 0.0 <= detection_coverage <= 1.0:
        raise DomainError(f"detection coverage must be in [0, 1], got {detection_coverage!r}")
    if detection_coverage >= 0.5:
        dd = detection_coverage * lambda_dangerous
        du = lambda_dangerous - dd
    else:
        du = (1.0 - detection_coverage) * lambda_dangerous
        dd = lambda_dangerous - du
    return dd, du


def compute_sff(lambda_safe: float, lambda_dd: float, lambda_du: float) -> float:
    """Safe failure fraction: share of failures that are safe or detected."""
    for name, value in (("safe", lambda_safe), ("detected", lambda_dd), ("undetected", lambda_du)):
        if not math.isfinite(value) or value < 0.0:
            raise DomainError(f"lambda_{name} must be finite and >= 0, got {value!r}")
    total = lambda_safe + lambda_dd + lambda_du
    if total == 0.0:
        raise DomainError("safe failure fraction is undefined for an all-zero rate set")
    return (lambda_safe + lambda_dd) / total


@dataclass(frozen=True)
class FmedaEntry:
    """Failure rate bookkeeping for one element under a monitoring concept."""

    id: str
    element: str
    lambda_dangerous_fit: float
    detection_coverage: float
    lambda_safe_fit: float = 0.0

    @property
    def lambda_dd_fit(self) -> float:
        return fmeda_split(self.lambda_dangerous_fit, self.detection_coverage)[0]

    @property
    def lambda_du_fit(self) -> float:
        return fmeda_split(self.lambda_dangerous_fit, self.detection_coverage)[1]

    @property
    def sff(self) -> float:
        dd, du = fmeda_split(self.lambda_dangerous_fit, self.detection_coverage)
        return compute_sff(self.lambda_safe_fit, dd, du)


def _slug(text: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "_", text.lower()).strip("_")
    return slug or "element"


def derive_cft_leaves(entry: FmedaEntry, mdt_hours: float) -> tuple[BasicEvent, BasicEvent]:
    """Materialize the (undetected, detected) shares as fault tree leaves.

    Leaf ids derive from the element name. A coverage of exactly 0 or 1
    produces a zero-rate leaf; that is allowed here but flagged with a
    warning because such a leaf fails model validation.
    """
    if not math.isfinite(mdt_hours) or mdt_hours <= 0.0:
        raise DomainError(f"mdt_hours must be finite and > 0, got {mdt_hours!r}")
    dd, du = fmeda_split(entry.lambda_dangerous_fit, entry.detection_coverage)
    base = _slug(entry.element)
    du_event = BasicEvent(
        id=f"{base}_du",
        failure_rate_fit=du,
        mdt_hours=mdt_hours,
        name=f"{entry.element} dangerous undetected",
    )
    dd_event = BasicEvent(
        id=f"{base}_dd",
        failure_rate_fit=dd,
        mdt_hours=mdt_hours,
        name=f"{entry.element} dangerous detected",
    )
    for event in (du_event, dd_event):
        if event.failure_rate_fit == 0.0:
            warnings.warn(
                f"zero-rate leaf '{event.id}' (detection coverage "
                f"{entry.detection_coverage:g})",
                UserWarning,
                stacklevel=2,
            )
    return du_event, dd_event
