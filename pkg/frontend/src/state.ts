/** Application state and the actions that drive it.
 *
 * One Store instance owns an immutable AppState snapshot; every action
 * talks to the Api, replaces the snapshot, and notifies subscribers.
 * All displayed numbers live in server-produced payloads; the store
 * never derives a total or a grade itself.
 */

import { ApiError, NetworkError, type Api } from "./api.js";
import type {
  ComparisonJson,
  ConflictsResponse,
  CriteriaJson,
  ProjectJson,
  PropertyJson,
  WhatifOverride,
} from "./types.js";

export type Phase = "loading" | "ready" | "unreachable";

export interface AppState {
  phase: Phase;
  connectionError: string | null;
  revision: number;
  project: ProjectJson | null;
  /** Committed comparison as last fetched. */
  comparison: ComparisonJson | null;
  /** Reason the comparison is unavailable (e.g. nothing fully graded). */
  comparisonProblem: string | null;
  /** What-if overrides currently applied, in application order. */
  overrides: WhatifOverride[];
  /** Server-evaluated preview for the overrides, when any are active. */
  preview: ComparisonJson | null;
  /** A write hit a 409; the user must reload before editing further. */
  stale: boolean;
  /** Inline errors keyed by "<alternative>/<property>" or a panel name. */
  formErrors: Record<string, string>;
  notice: string | null;
  conflict: ConflictsResponse | null;
  selectedAlternative: string | null;
  selectedProperty: string | null;
}

function initialState(): AppState {
  return {
    phase: "loading",
    connectionError: null,
    revision: 0,
    project: null,
    comparison: null,
    comparisonProblem: null,
    overrides: [],
    preview: null,
    stale: false,
    formErrors: {},
    notice: null,
    conflict: null,
    selectedAlternative: null,
    selectedProperty: null,
  };
}

export function evaluationKey(alternativeId: string, propertyName: string): string {
  return `${alternativeId}/${propertyName}`;
}

/** The comparison the UI should show: preview while what-if is active. */
export function displayedComparison(state: AppState): ComparisonJson | null {
  return state.preview ?? state.comparison;
}

export class Store {
  private state: AppState = initialState();
  private listeners = new Set<() => void>();

  constructor(private readonly api: Api) {}

  getState(): AppState {
    return this.state;
  }

  subscribe(listener: () => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private set(patch: Partial<AppState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener();
  }

  /** Initial load and the retry button both land here. */
  async load(): Promise<void> {
    this.set({ phase: "loading", connectionError: null });
    try {
      const project = await this.api.getProject();
      const patch: Partial<AppState> = {
        phase: "ready",
        project: project.project,
        revision: project.revision,
        stale: false,
      };
      try {
        const dpn = await this.api.getDpn();
        patch.comparison = dpn.comparison;
        patch.comparisonProblem = null;
        patch.revision = dpn.revision;
      } catch (error) {
        if (!(error instanceof ApiError)) throw error;
        patch.comparison = null;
        patch.comparisonProblem = error.message;
      }
      if (!this.state.selectedAlternative && project.project.alternatives.length) {
        patch.selectedAlternative = project.project.alternatives[0].id;
      }
      if (!this.state.selectedProperty && project.project.properties.length) {
        patch.selectedProperty = project.project.properties[0].name;
      }
      this.set(patch);
      if (this.state.overrides.length > 0) await this.refreshPreview();
    } catch (error) {
      if (error instanceof NetworkError) {
        this.set({ phase: "unreachable", connectionError: error.message });
        return;
      }
      throw error;
    }
  }

  select(alternativeId: string | null, propertyName: string | null): void {
    this.set({
      selectedAlternative: alternativeId ?? this.state.selectedAlternative,
      selectedProperty: propertyName ?? this.state.selectedProperty,
    });
  }

  clearNotice(): void {
    if (this.state.notice !== null) this.set({ notice: null });
  }

  /** Commit one evaluation; totals and charts refresh from the server. */
  async submitEvaluation(
    alternativeId: string,
    propertyName: string,
    criteria: CriteriaJson,
  ): Promise<void> {
    const key = evaluationKey(alternativeId, propertyName);
    const formErrors = { ...this.state.formErrors };
    delete formErrors[key];
    this.set({ formErrors, notice: null });
    try {
      const response = await this.api.putEvaluation(
        alternativeId,
        propertyName,
        criteria,
        this.state.revision,
      );
      const missing = response.missing ?? [];
      this.set({
        revision: response.revision,
        notice:
          missing.length > 0
            ? `saved; '${alternativeId}' still lacks grades for: ${missing.join(", ")}`
            : `saved evaluation of '${propertyName}' for '${alternativeId}'`,
      });
      await this.load();
    } catch (error) {
      this.fail(error, key);
    }
  }

  /** Replace the property weights; ranking refreshes from the response. */
  async submitWeights(properties: PropertyJson[]): Promise<void> {
    const formErrors = { ...this.state.formErrors };
    delete formErrors["properties"];
    this.set({ formErrors, notice: null });
    try {
      const response = await this.api.putProperties(properties, this.state.revision);
      this.set({ revision: response.revision, notice: "weights updated" });
      await this.load();
    } catch (error) {
      this.fail(error, "properties");
    }
  }

  /** Add or replace one what-if override and fetch the preview. */
  async addOverride(override: WhatifOverride): Promise<void> {
    const rest = this.state.overrides.filter(
      (o) =>
        o.alternative !== override.alternative || o.property !== override.property,
    );
    this.set({ overrides: [...rest, override] });
    await this.refreshPreview();
  }

  /** Drop the what-if state; the committed view is shown again. */
  discardOverrides(): void {
    const formErrors = { ...this.state.formErrors };
    delete formErrors["whatif"];
    this.set({ overrides: [], preview: null, formErrors });
  }

  private async refreshPreview(): Promise<void> {
    if (this.state.overrides.length === 0) {
      this.set({ preview: null });
      return;
    }
    try {
      const response = await this.api.whatif(this.state.overrides);
      const formErrors = { ...this.state.formErrors };
      delete formErrors["whatif"];
      this.set({ preview: response.comparison, formErrors });
    } catch (error) {
      this.fail(error, "whatif");
    }
  }

  async loadConflicts(fromId: string, toId: string): Promise<void> {
    const formErrors = { ...this.state.formErrors };
    delete formErrors["conflicts"];
    this.set({ formErrors });
    try {
      const response = await this.api.conflicts(fromId, toId);
      this.set({ conflict: response });
    } catch (error) {
      this.fail(error, "conflicts");
    }
  }

  async saveProject(): Promise<void> {
    try {
      const response = await this.api.save();
      this.set({ notice: `project written to ${response.path}` });
    } catch (error) {
      this.fail(error, "save");
    }
  }

  /** After a 409 the reload button re-fetches everything. */
  async reload(): Promise<void> {
    this.set({ stale: false, conflict: null });
    await this.load();
  }

  private fail(error: unknown, key: string): void {
    if (error instanceof NetworkError) {
      this.set({ phase: "unreachable", connectionError: error.message });
      return;
    }
    if (error instanceof ApiError) {
      if (error.status === 409) {
        this.set({ stale: true });
        return;
      }
      this.set({
        formErrors: { ...this.state.formErrors, [key]: error.message },
      });
      return;
    }
    throw error;
  }
}
