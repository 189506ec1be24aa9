"""depra: dependability analysis for component fault trees.

The package covers the usual early-design workflow: model a system as
component fault trees, evaluate failure rate / availability / MTBF and
friends on the flattened tree, keep FMECA and FMEDA bookkeeping next to
it, and score competing design alternatives with a weighted acceptance
number so trade-offs become explicit.
"""

from .analysis import (
    alternative_conflicts,
    alternative_dpn,
    evaluated_alternatives,
    fmeda_table,
    project_comparison,
    rams_for_alternative,
    tree_for_alternative,
)
from .cft_eval import RamsResult, eval_and, eval_basic_event, eval_or, eval_tree, top_result
from .dpn import (
    ACCEPTANCE_STEP,
    DEFAULT_PROPERTIES,
    AcceptanceLevel,
    Alternative,
    Benefit,
    ComparisonReport,
    CostBracket,
    DependabilityProperty,
    DpnResult,
    Drawback,
    FurtherAction,
    ObjectiveVerdict,
    Quantity,
    QuantityKind,
    TimeBracket,
    TradeoffCriteria,
    compare_alternatives,
    compute_dpn,
    decompose_contributions,
    detect_conflicts,
    expected_dpn,
    objective_check,
    objective_disagreement,
)
from .errors import (
    DanglingReferenceError,
    DecompositionUnsupportedError,
    DepraError,
    DomainError,
    InconsistentTotalError,
    InvalidModelError,
    MissingEvaluationsError,
    NotFoundError,
    ProjectParseError,
    RevisionConflictError,
    SchemaVersionError,
    StructuralError,
    UnitMismatchError,
)
from .mc import OracleReport, SimEstimate, compare_to_analytic, simulate
from .model import (
    DEFAULT_MISSION_TIME_HOURS,
    FIT_DENOMINATOR,
    BasicEvent,
    ComponentDefinition,
    ComponentInstance,
    FaultTreeModel,
    FlatTree,
    Gate,
    GateKind,
    ValidationReport,
    Violation,
    fit_to_per_hour,
    flatten,
    per_hour_to_fit,
    validate_model,
)
from .project_io import (
    Goal,
    Hazard,
    Project,
    Requirement,
    Scenario,
    dumps_project,
    export_results_csv,
    load_project,
    loads_project,
    save_project,
    validate_project,
)
from .risk_tables import (
    FmecaEntry,
    FmedaEntry,
    RiskRevision,
    compute_rpn,
    compute_sff,
    derive_cft_leaves,
    fmeda_split,
)

__version__ = "0.1.0"

__all__ = [
    "ACCEPTANCE_STEP",
    "DEFAULT_MISSION_TIME_HOURS",
    "DEFAULT_PROPERTIES",
    "FIT_DENOMINATOR",
    "AcceptanceLevel",
    "Alternative",
    "BasicEvent",
    "Benefit",
    "ComparisonReport",
    "ComponentDefinition",
    "ComponentInstance",
    "CostBracket",
    "DanglingReferenceError",
    "DecompositionUnsupportedError",
    "DependabilityProperty",
    "DepraError",
    "DomainError",
    "DpnResult",
    "Drawback",
    "FaultTreeModel",
    "FlatTree",
    "FmecaEntry",
    "FmedaEntry",
    "FurtherAction",
    "Gate",
    "GateKind",
    "Goal",
    "Hazard",
    "InconsistentTotalError",
    "InvalidModelError",
    "MissingEvaluationsError",
    "NotFoundError",
    "ObjectiveVerdict",
    "OracleReport",
    "Project",
    "ProjectParseError",
    "Quantity",
    "QuantityKind",
    "RamsResult",
    "Requirement",
    "RevisionConflictError",
    "RiskRevision",
    "Scenario",
    "SchemaVersionError",
    "SimEstimate",
    "StructuralError",
    "TimeBracket",
    "TradeoffCriteria",
    "UnitMismatchError",
    "ValidationReport",
    "Violation",
    "alternative_conflicts",
    "alternative_dpn",
    "compare_alternatives",
    "compare_to_analytic",
    "compute_dpn",
    "compute_rpn",
    "compute_sff",
    "decompose_contributions",
    "derive_cft_leaves",
    "detect_conflicts",
    "dumps_project",
    "eval_and",
    "eval_basic_event",
    "eval_or",
    "eval_tree",
    "evaluated_alternatives",
    "expected_dpn",
    "export_results_csv",
    "fit_to_per_hour",
    "flatten",
    "fmeda_split",
    "fmeda_table",
    "load_project",
    "loads_project",
    "objective_check",
    "objective_disagreement",
    "per_hour_to_fit",
    "project_comparison",
    "rams_for_alternative",
    "save_project",
    "simulate",
    "top_result",
    "tree_for_alternative",
    "validate_model",
    "validate_project",
]
