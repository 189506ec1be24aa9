/** Wire types for the depra HTTP API, mirrored by hand from its JSON. */

export interface ErrorEnvelope {
  error: { code: string; message: string };
}

export interface QuantityJson {
  value: number;
  kind: string;
}

export interface CriteriaJson {
  overall_acceptance: number;
  actual?: QuantityJson;
  expected?: QuantityJson;
  acceptable_upper_limit?: number;
  acceptable_lower_limit?: number;
  benefit?: string;
  drawback?: string;
  cost?: string;
  time_to_achieve?: string;
  further_action?: string;
  comment?: string;
}

export interface AlternativeJson {
  id: string;
  name?: string;
  description?: string;
  tree_id?: string;
  qualitative_only?: boolean;
  evaluations?: Record<string, CriteriaJson>;
}

export interface PropertyJson {
  name: string;
  weight: number;
}

/** Project blocks the explorer does not edit are left untyped. */
export interface ProjectJson {
  schema_version: string;
  name: string;
  description?: string;
  properties: PropertyJson[];
  alternatives: AlternativeJson[];
  [key: string]: unknown;
}

export interface ProjectResponse {
  revision: number;
  project: ProjectJson;
}

/** Non-finite figures arrive as null. */
export interface RamsJson {
  failure_rate_per_hour: number | null;
  failure_rate_fit: number | null;
  mdt_hours: number | null;
  mtbf_hours: number | null;
  mttf_hours: number | null;
  availability: number | null;
  unavailability: number | null;
  mission_time_hours: number | null;
  mission_unreliability: number | null;
}

export interface RamsResponse {
  revision: number;
  alternative: string;
  top: string;
  nodes: Record<string, RamsJson>;
}

export interface DpnResultJson {
  alternative_id: string;
  contributions: Record<string, number>;
  weights: Record<string, number>;
  total: number;
  expected_total: number;
}

export interface TotalsChartJson {
  alternatives: string[];
  labels: string[];
  actual: number[];
  expected: number;
}

export interface ContributionsChartJson {
  properties: string[];
  weights: number[];
  per_alternative: Record<string, number[]>;
}

export interface ComparisonJson {
  properties: PropertyJson[];
  alternatives: { id: string; name: string }[];
  results: Record<string, DpnResultJson>;
  ranking: string[];
  expected_total: number;
  fulfillment: Record<string, Record<string, boolean>>;
  fulfills_all: Record<string, boolean>;
  rams: Record<string, RamsJson>;
  verdicts: Record<string, Record<string, string>>;
  warnings: string[];
  charts: {
    totals: TotalsChartJson;
    contributions: ContributionsChartJson;
  };
}

export interface DpnResponse {
  revision: number;
  comparison: ComparisonJson;
}

export interface PutEvaluationResponse {
  revision: number;
  result: DpnResultJson | null;
  missing?: string[];
}

export interface PutPropertiesResponse {
  revision: number;
  comparison: ComparisonJson | null;
}

export interface WhatifOverride {
  alternative: string;
  property: string;
  /** Partial criteria; null values clear the key on the server. */
  criteria: Record<string, unknown>;
}

export interface WhatifResponse {
  revision: number;
  comparison: ComparisonJson;
}

export interface ConflictsResponse {
  revision: number;
  from: string;
  to: string;
  pairs: [string, string][];
  before: DpnResultJson;
  after: DpnResultJson;
}

export interface SaveResponse {
  revision: number;
  path: string;
}

/** The six-level acceptance scale, in ascending order. */
export const ACCEPTANCE_LEVELS: readonly { value: number; label: string }[] = [
  { value: 0.0, label: "totally unacceptable" },
  { value: 0.2, label: "almost unacceptable" },
  { value: 0.4, label: "predominantly unacceptable" },
  { value: 0.6, label: "predominantly acceptable" },
  { value: 0.8, label: "almost acceptable" },
  { value: 1.0, label: "totally acceptable" },
];

export const BENEFIT_VALUES = [
  "none",
  "better_life_time",
  "better_reliability_availability",
  "reputation_benefit",
  "better_sale_price",
] as const;

export const DRAWBACK_VALUES = [
  "none",
  "no_certificate",
  "financial_disaster",
  "worse_availability",
  "damage_of_reputation",
  "postponed_finish",
  "increased_purchase_cost",
] as const;

export const COST_VALUES = [
  "none",
  "ignorable",
  "proportional",
  "quite_high",
  "too_high",
] as const;

export const TIME_VALUES = [
  "none",
  "ignorable",
  "proportional",
  "quite_long",
  "too_long",
] as const;

export const FURTHER_ACTION_VALUES = [
  "none",
  "redundancy",
  "higher_quality_component",
  "new_component",
] as const;
