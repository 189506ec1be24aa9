/** Shared fixtures shaped like the server's JSON payloads. */

import type {
  ComparisonJson,
  ConflictsResponse,
  ProjectJson,
  RamsJson,
} from "../src/types.js";

export function ramsFixture(fit: number | null): RamsJson {
  return {
    failure_rate_per_hour: fit === null ? null : fit * 1e-9,
    failure_rate_fit: fit,
    mdt_hours: fit === null ? null : 24,
    mtbf_hours: fit === null ? null : 1e9 / (fit || 1),
    mttf_hours: fit === null ? null : 1e9 / (fit || 1) - 24,
    availability: fit === null ? null : 0.999,
    unavailability: fit === null ? null : 0.001,
    mission_time_hours: 10000,
    mission_unreliability: fit === null ? null : 1e-5,
  };
}

export function comparisonFixture(): ComparisonJson {
  return {
    properties: [
      { name: "safety", weight: 100 },
      { name: "availability", weight: 1 },
    ],
    alternatives: [
      { id: "a", name: "Plan A" },
      { id: "b", name: "Plan B" },
    ],
    results: {
      a: {
        alternative_id: "a",
        contributions: { safety: 80, availability: 0.8 },
        weights: { safety: 100, availability: 1 },
        total: 80.8,
        expected_total: 101,
      },
      b: {
        alternative_id: "b",
        contributions: { safety: 100, availability: 1 },
        weights: { safety: 100, availability: 1 },
        total: 101,
        expected_total: 101,
      },
    },
    ranking: ["b", "a"],
    expected_total: 101,
    fulfillment: {
      a: { safety: false, availability: true },
      b: { safety: true, availability: true },
    },
    fulfills_all: { a: false, b: true },
    rams: {
      a: ramsFixture(2),
      b: ramsFixture(null),
    },
    verdicts: {
      a: { safety: "acceptable", availability: "unacceptable" },
      b: { safety: "acceptable", availability: "acceptable" },
    },
    warnings: [
      "alternative 'a', property 'availability': grade 1.0 disagrees " +
        "with the objective verdict 'unacceptable'",
    ],
    charts: {
      totals: {
        alternatives: ["a", "b"],
        labels: ["Plan A", "Plan B"],
        actual: [80.8, 101],
        expected: 101,
      },
      contributions: {
        properties: ["safety", "availability"],
        weights: [100, 1],
        per_alternative: {
          a: [80, 0.8],
          b: [100, 1],
        },
      },
    },
  };
}

export function projectFixture(): ProjectJson {
  return {
    schema_version: "1",
    name: "Fixture project",
    properties: [
      { name: "safety", weight: 100 },
      { name: "availability", weight: 1 },
    ],
    alternatives: [
      {
        id: "a",
        name: "Plan A",
        qualitative_only: true,
        evaluations: {
          safety: {
            overall_acceptance: 0.8,
            actual: { value: 2, kind: "failure_rate_fit" },
            expected: { value: 10, kind: "failure_rate_fit" },
            acceptable_upper_limit: 10,
            benefit: "better_life_time",
            comment: "ok",
          },
          availability: { overall_acceptance: 1 },
        },
      },
      {
        id: "b",
        name: "Plan B",
        qualitative_only: true,
        evaluations: {
          safety: { overall_acceptance: 1 },
          availability: { overall_acceptance: 1 },
        },
      },
    ],
  };
}

export function conflictFixture(): ConflictsResponse {
  const comparison = comparisonFixture();
  return {
    revision: 1,
    from: "a",
    to: "b",
    pairs: [["availability", "safety"]],
    before: comparison.results.a,
    after: comparison.results.b,
  };
}
