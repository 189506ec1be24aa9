/** DOM rendering. renderApp wipes the root and rebuilds it from state.
 *
 * The tool is small enough that full re-render on every state change
 * stays simple and fast; no virtual DOM, no framework. Handlers are
 * injected through the Actions interface so views stay testable.
 */

import { contributionsChartSvg, totalsChartSvg } from "./charts.js";
import { enumLabel, formatRams, formatTotal } from "./format.js";
import {
  displayedComparison,
  evaluationKey,
  type AppState,
} from "./state.js";
import {
  ACCEPTANCE_LEVELS,
  BENEFIT_VALUES,
  COST_VALUES,
  DRAWBACK_VALUES,
  FURTHER_ACTION_VALUES,
  TIME_VALUES,
  type ComparisonJson,
  type CriteriaJson,
  type ProjectJson,
  type PropertyJson,
  type WhatifOverride,
} from "./types.js";

export interface Actions {
  retry(): void;
  reload(): void;
  select(alternativeId: string | null, propertyName: string | null): void;
  submitEvaluation(
    alternativeId: string,
    propertyName: string,
    criteria: CriteriaJson,
  ): void;
  submitWeights(properties: PropertyJson[]): void;
  addOverride(override: WhatifOverride): void;
  discardOverrides(): void;
  loadConflicts(fromId: string, toId: string): void;
  save(): void;
  baseUrl(): string;
  setBaseUrl(url: string): void;
}

type Attrs = Record<string, string | boolean | undefined>;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Attrs = {},
  children: (Node | string)[] = [],
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (value === undefined || value === false) continue;
    if (value === true) node.setAttribute(key, "");
    else node.setAttribute(key, value);
  }
  for (const child of children) {
    node.append(typeof child === "string" ? document.createTextNode(child) : child);
  }
  return node;
}

function option(value: string, label: string): HTMLOptionElement {
  return el("option", { value }, [label]);
}

function formError(state: AppState, key: string): HTMLElement | null {
  const message = state.formErrors[key];
  if (!message) return null;
  return el("p", { class: "form-error", "data-key": key }, [message]);
}

// -- banners ----------------------------------------------------------------

function unreachableBanner(state: AppState, actions: Actions): HTMLElement {
  const retry = el("button", { id: "retry", type: "button" }, ["Retry"]);
  retry.addEventListener("click", () => actions.retry());
  return el("div", { id: "banner-unreachable", class: "banner error" }, [
    el("span", {}, [
      `Server unreachable: ${state.connectionError ?? "no response"}`,
    ]),
    retry,
  ]);
}

function staleBanner(actions: Actions): HTMLElement {
  const reload = el("button", { id: "reload", type: "button" }, ["Reload"]);
  reload.addEventListener("click", () => actions.reload());
  return el("div", { id: "banner-stale", class: "banner warn" }, [
    el("span", {}, [
      "The project changed on the server since this page loaded. " +
        "Reload to pick up the latest revision before editing further.",
    ]),
    reload,
  ]);
}

// -- header -------------------------------------------------------------------

function header(state: AppState, actions: Actions): HTMLElement {
  const urlInput = el("input", {
    id: "base-url",
    type: "text",
    value: actions.baseUrl(),
    "aria-label": "server base URL",
  });
  const applyUrl = el("button", { id: "apply-base-url", type: "button" }, [
    "Connect",
  ]);
  applyUrl.addEventListener("click", () =>
    actions.setBaseUrl((urlInput as HTMLInputElement).value),
  );
  const save = el("button", { id: "save-project", type: "button" }, [
    "Save project",
  ]);
  save.addEventListener("click", () => actions.save());

  const children: Node[] = [
    el("h1", { id: "project-name" }, [state.project?.name ?? "depra"]),
    el("div", { class: "toolbar" }, [urlInput, applyUrl, save]),
  ];
  if (state.notice) {
    children.push(el("p", { class: "notice" }, [state.notice]));
  }
  const saveError = formError(state, "save");
  if (saveError) children.push(saveError);
  return el("header", {}, children);
}

// -- comparison ---------------------------------------------------------------

function comparisonTable(
  comparison: ComparisonJson,
  previewActive: boolean,
): HTMLElement {
  const head = el("tr", {}, [
    el("th", {}, ["#"]),
    el("th", {}, ["alternative"]),
    el("th", {}, ["DPN"]),
    el("th", {}, [""]),
  ]);
  const names: Record<string, string> = {};
  for (const alternative of comparison.alternatives) {
    names[alternative.id] = alternative.name || alternative.id;
  }
  const rows = comparison.ranking.map((id, index) =>
    el("tr", { "data-alternative": id }, [
      el("td", {}, [String(index + 1)]),
      el("td", {}, [names[id] ?? id]),
      el("td", { class: "total", "data-alternative": id }, [
        formatTotal(comparison.results[id].total),
      ]),
      el("td", { class: "flag" }, [
        comparison.fulfills_all[id] ? "meets expected" : "",
      ]),
    ]),
  );
  const caption = previewActive
    ? `what-if preview, expected ${formatTotal(comparison.expected_total)}`
    : `expected ${formatTotal(comparison.expected_total)}`;
  return el("table", { class: "comparison" }, [
    el("caption", { class: previewActive ? "preview-flag" : "" }, [caption]),
    head,
    ...rows,
  ]);
}

function ramsBlock(comparison: ComparisonJson): HTMLElement {
  const entries = Object.entries(comparison.rams);
  const rows = entries.map(([id, rams]) =>
    el("tr", { "data-alternative": id }, [
      el("td", {}, [id]),
      el("td", {}, [formatRams(rams.failure_rate_fit)]),
      el("td", {}, [formatRams(rams.mdt_hours)]),
      el("td", {}, [formatRams(rams.availability)]),
    ]),
  );
  return el("table", { class: "rams" }, [
    el("tr", {}, [
      el("th", {}, ["alternative"]),
      el("th", {}, ["failure rate [FIT]"]),
      el("th", {}, ["MDT [h]"]),
      el("th", {}, ["availability"]),
    ]),
    ...rows,
  ]);
}

function comparisonSection(state: AppState, actions: Actions): HTMLElement {
  const shown = displayedComparison(state);
  const children: Node[] = [el("h2", {}, ["Comparison"])];
  if (!shown) {
    children.push(
      el("p", { class: "muted" }, [
        state.comparisonProblem ?? "No comparison available.",
      ]),
    );
    return el("section", { id: "comparison" }, children);
  }
  children.push(comparisonTable(shown, state.preview !== null));

  const highlightUp = state.conflict?.pairs.map((pair) => pair[0]) ?? [];
  const highlightDown = state.conflict?.pairs.map((pair) => pair[1]) ?? [];
  const labels: Record<string, string> = {};
  for (const alternative of shown.alternatives) {
    labels[alternative.id] = alternative.name || alternative.id;
  }
  const charts = el("div", { class: "charts" });
  charts.innerHTML =
    totalsChartSvg(shown.charts.totals) +
    contributionsChartSvg(shown.charts.contributions, labels, {
      up: highlightUp,
      down: highlightDown,
    });
  children.push(charts);

  if (shown.warnings.length > 0) {
    children.push(
      el(
        "ul",
        { class: "warnings" },
        shown.warnings.map((warning) => el("li", {}, [warning])),
      ),
    );
  }
  children.push(el("h3", {}, ["RAMS figures"]), ramsBlock(shown));

  if (state.overrides.length > 0) {
    const discard = el(
      "button",
      { id: "discard-whatif", type: "button" },
      ["Discard what-if"],
    );
    discard.addEventListener("click", () => actions.discardOverrides());
    children.push(
      el("div", { class: "whatif-bar" }, [
        el("span", {}, [
          `${state.overrides.length} what-if override(s) active`,
        ]),
        discard,
      ]),
    );
  }
  const whatifError = formError(state, "whatif");
  if (whatifError) children.push(whatifError);
  return el("section", { id: "comparison" }, children);
}

// -- evaluation editor ----------------------------------------------------------

function storedCriteria(
  project: ProjectJson,
  alternativeId: string,
  propertyName: string,
): CriteriaJson | undefined {
  const alternative = project.alternatives.find((a) => a.id === alternativeId);
  return alternative?.evaluations?.[propertyName];
}

function enumSelect(
  id: string,
  values: readonly string[],
  current: string,
): HTMLSelectElement {
  const node = el(
    "select",
    { id },
    values.map((value) => option(value, enumLabel(value))),
  ) as HTMLSelectElement;
  node.value = current;
  return node;
}

/** Full criteria to PUT: stored quantities plus the form's picks. */
function criteriaFromForm(
  existing: CriteriaJson | undefined,
  root: HTMLElement,
): CriteriaJson {
  const pick = (id: string) =>
    (root.querySelector(`#${id}`) as HTMLSelectElement).value;
  const criteria: CriteriaJson = {
    ...(existing ?? { overall_acceptance: 0 }),
  };
  criteria.overall_acceptance = Number(pick("acceptance-select"));
  const enums: [keyof CriteriaJson, string][] = [
    ["benefit", pick("benefit-select")],
    ["drawback", pick("drawback-select")],
    ["cost", pick("cost-select")],
    ["time_to_achieve", pick("time-select")],
    ["further_action", pick("action-select")],
  ];
  const record = criteria as unknown as Record<string, unknown>;
  for (const [key, value] of enums) {
    if (value === "none") delete record[key];
    else record[key] = value;
  }
  const comment = (root.querySelector("#comment-input") as HTMLInputElement).value;
  if (comment === "") delete criteria.comment;
  else criteria.comment = comment;
  return criteria;
}

function quantityLine(label: string, criteria: CriteriaJson): HTMLElement | null {
  const parts: string[] = [];
  if (criteria.actual) {
    parts.push(`actual ${criteria.actual.value} ${enumLabel(criteria.actual.kind)}`);
  }
  if (criteria.expected) {
    parts.push(
      `expected ${criteria.expected.value} ${enumLabel(criteria.expected.kind)}`,
    );
  }
  if (criteria.acceptable_upper_limit !== undefined) {
    parts.push(`upper limit ${criteria.acceptable_upper_limit}`);
  }
  if (criteria.acceptable_lower_limit !== undefined) {
    parts.push(`lower limit ${criteria.acceptable_lower_limit}`);
  }
  if (parts.length === 0) return null;
  return el("p", { class: "quantities" }, [`${label}: ${parts.join(", ")}`]);
}

function editorSection(state: AppState, actions: Actions): HTMLElement {
  const project = state.project;
  if (!project) return el("section", { id: "editor" });
  const alternativeId =
    state.selectedAlternative ?? project.alternatives[0]?.id ?? "";
  const propertyName =
    state.selectedProperty ?? project.properties[0]?.name ?? "";

  const altSelect = el(
    "select",
    { id: "alt-select", "aria-label": "alternative" },
    project.alternatives.map((a) => option(a.id, a.name || a.id)),
  ) as HTMLSelectElement;
  altSelect.value = alternativeId;
  altSelect.addEventListener("change", () => actions.select(altSelect.value, null));
  const propSelect = el(
    "select",
    { id: "prop-select", "aria-label": "property" },
    project.properties.map((p) => option(p.name, p.name)),
  ) as HTMLSelectElement;
  propSelect.value = propertyName;
  propSelect.addEventListener("change", () =>
    actions.select(null, propSelect.value),
  );

  const existing = storedCriteria(project, alternativeId, propertyName);
  const grade = existing?.overall_acceptance;
  const acceptance = el(
    "select",
    { id: "acceptance-select", "aria-label": "overall acceptance" },
    ACCEPTANCE_LEVELS.map((level) => option(String(level.value), level.label)),
  ) as HTMLSelectElement;
  if (grade !== undefined) acceptance.value = String(grade);

  const shown = displayedComparison(state);
  const verdict = shown?.verdicts[alternativeId]?.[propertyName];
  const verdictBadge = el(
    "span",
    { class: "verdict-badge", "data-verdict": verdict ?? "none" },
    [verdict ? `objective check: ${enumLabel(verdict)}` : "no objective check"],
  );

  const pairNeedle = `alternative '${alternativeId}', property '${propertyName}'`;
  const disagreements = (shown?.warnings ?? []).filter((warning) =>
    warning.includes(pairNeedle),
  );

  const form = el("div", { class: "evaluation-form" });
  const rows: Node[] = [
    el("div", { class: "field" }, [
      el("label", { for: "acceptance-select" }, ["overall acceptance"]),
      acceptance,
      verdictBadge,
    ]),
  ];
  for (const warning of disagreements) {
    rows.push(el("p", { class: "disagreement" }, [warning]));
  }
  const stored = existing ? quantityLine("recorded", existing) : null;
  if (stored) rows.push(stored);
  rows.push(
    el("div", { class: "field" }, [
      el("label", { for: "benefit-select" }, ["benefit"]),
      enumSelect("benefit-select", BENEFIT_VALUES, existing?.benefit ?? "none"),
    ]),
    el("div", { class: "field" }, [
      el("label", { for: "drawback-select" }, ["drawback"]),
      enumSelect("drawback-select", DRAWBACK_VALUES, existing?.drawback ?? "none"),
    ]),
    el("div", { class: "field" }, [
      el("label", { for: "cost-select" }, ["cost"]),
      enumSelect("cost-select", COST_VALUES, existing?.cost ?? "none"),
    ]),
    el("div", { class: "field" }, [
      el("label", { for: "time-select" }, ["time to achieve"]),
      enumSelect("time-select", TIME_VALUES, existing?.time_to_achieve ?? "none"),
    ]),
    el("div", { class: "field" }, [
      el("label", { for: "action-select" }, ["further action"]),
      enumSelect(
        "action-select",
        FURTHER_ACTION_VALUES,
        existing?.further_action ?? "none",
      ),
    ]),
    el("div", { class: "field" }, [
      el("label", { for: "comment-input" }, ["comment"]),
      el("input", {
        id: "comment-input",
        type: "text",
        value: existing?.comment ?? "",
      }),
    ]),
  );

  const submit = el(
    "button",
    { id: "submit-evaluation", type: "button", disabled: state.stale },
    ["Save grade"],
  );
  submit.addEventListener("click", () =>
    actions.submitEvaluation(
      alternativeId,
      propertyName,
      criteriaFromForm(existing, form),
    ),
  );
  const previewButton = el(
    "button",
    { id: "preview-evaluation", type: "button" },
    ["Preview only"],
  );
  previewButton.addEventListener("click", () =>
    actions.addOverride({
      alternative: alternativeId,
      property: propertyName,
      criteria: criteriaFromForm(existing, form) as unknown as Record<
        string,
        unknown
      >,
    }),
  );
  rows.push(el("div", { class: "buttons" }, [submit, previewButton]));
  const inlineError = formError(
    state,
    evaluationKey(alternativeId, propertyName),
  );
  if (inlineError) rows.push(inlineError);
  form.append(...rows);

  return el("section", { id: "editor" }, [
    el("h2", {}, ["Evaluation"]),
    el("div", { class: "picker" }, [altSelect, propSelect]),
    form,
  ]);
}

// -- weights ----------------------------------------------------------------

function weightsSection(state: AppState, actions: Actions): HTMLElement {
  const project = state.project;
  if (!project) return el("section", { id: "weights" });
  const inputs = project.properties.map((property) =>
    el("div", { class: "field" }, [
      el("label", {}, [property.name]),
      el("input", {
        type: "number",
        step: "any",
        min: "0",
        "data-property": property.name,
        value: String(property.weight),
      }),
    ]),
  );
  const apply = el("button", { id: "apply-weights", type: "button" }, [
    "Apply weights",
  ]);
  const section = el("section", { id: "weights" }, [
    el("h2", {}, ["Weights"]),
    ...inputs,
    apply,
  ]);
  apply.addEventListener("click", () => {
    const updated: PropertyJson[] = project.properties.map((property) => {
      const input = section.querySelector(
        `input[data-property="${property.name}"]`,
      ) as HTMLInputElement;
      return { name: property.name, weight: Number(input.value) };
    });
    actions.submitWeights(updated);
  });
  const error = formError(state, "properties");
  if (error) section.append(error);
  return section;
}

// -- conflicts ----------------------------------------------------------------

function conflictsSection(state: AppState, actions: Actions): HTMLElement {
  const project = state.project;
  if (!project) return el("section", { id: "conflicts" });
  const ids = project.alternatives.map((a) => a.id);
  const fromDefault = state.conflict?.from ?? ids[0] ?? "";
  const toDefault = state.conflict?.to ?? ids[1] ?? ids[0] ?? "";
  const fromSelect = el(
    "select",
    { id: "conflict-from" },
    ids.map((id) => option(id, id)),
  ) as HTMLSelectElement;
  fromSelect.value = fromDefault;
  const toSelect = el(
    "select",
    { id: "conflict-to" },
    ids.map((id) => option(id, id)),
  ) as HTMLSelectElement;
  toSelect.value = toDefault;
  const check = el("button", { id: "check-conflicts", type: "button" }, [
    "Check switch",
  ]);
  check.addEventListener("click", () =>
    actions.loadConflicts(fromSelect.value, toSelect.value),
  );
  const children: Node[] = [
    el("h2", {}, ["Conflicts"]),
    el("div", { class: "picker" }, [
      el("span", {}, ["from"]),
      fromSelect,
      el("span", {}, ["to"]),
      toSelect,
      check,
    ]),
  ];
  const conflict = state.conflict;
  if (conflict) {
    children.push(
      el("p", { class: "conflict-totals" }, [
        `${conflict.from} ${formatTotal(conflict.before.total)} to ` +
          `${conflict.to} ${formatTotal(conflict.after.total)}`,
      ]),
    );
    if (conflict.pairs.length === 0) {
      children.push(
        el("p", { class: "conflict-pairs", "data-empty": "true" }, [
          "no property is traded off by this switch",
        ]),
      );
    } else {
      children.push(
        el(
          "ul",
          { class: "conflict-pairs" },
          conflict.pairs.map(([improved, worsened]) =>
            el("li", { "data-up": improved, "data-down": worsened }, [
              `${improved} improves at the expense of ${worsened}`,
            ]),
          ),
        ),
      );
    }
  }
  const error = formError(state, "conflicts");
  if (error) children.push(error);
  return el("section", { id: "conflicts" }, children);
}

// -- root ----------------------------------------------------------------------

export function renderApp(
  root: HTMLElement,
  state: AppState,
  actions: Actions,
): void {
  root.textContent = "";
  const children: Node[] = [];
  if (state.phase === "unreachable") {
    children.push(unreachableBanner(state, actions));
  }
  if (state.stale) children.push(staleBanner(actions));
  children.push(header(state, actions));
  if (state.phase === "loading") {
    children.push(el("p", { class: "muted" }, ["loading project..."]));
  }
  if (state.project) {
    children.push(
      comparisonSection(state, actions),
      editorSection(state, actions),
      weightsSection(state, actions),
      conflictsSection(state, actions),
    );
  }
  root.append(...children);
}
