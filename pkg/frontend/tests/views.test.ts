import { describe, expect, it, vi } from "vitest";

import { formatTotal } from "../src/format.js";
import type { AppState } from "../src/state.js";
import { renderApp, type Actions } from "../src/views.js";
import { ACCEPTANCE_LEVELS } from "../src/types.js";
import {
  comparisonFixture,
  conflictFixture,
  projectFixture,
} from "./fixtures.js";

function makeState(patch: Partial<AppState> = {}): AppState {
  return {
    phase: "ready",
    connectionError: null,
    revision: 1,
    project: projectFixture(),
    comparison: comparisonFixture(),
    comparisonProblem: null,
    overrides: [],
    preview: null,
    stale: false,
    formErrors: {},
    notice: null,
    conflict: null,
    selectedAlternative: "a",
    selectedProperty: "safety",
    ...patch,
  };
}

function makeActions() {
  return {
    retry: vi.fn(),
    reload: vi.fn(),
    select: vi.fn(),
    submitEvaluation: vi.fn(),
    submitWeights: vi.fn(),
    addOverride: vi.fn(),
    discardOverrides: vi.fn(),
    loadConflicts: vi.fn(),
    save: vi.fn(),
    baseUrl: () => "http://example.test:1",
    setBaseUrl: vi.fn(),
  } satisfies Actions;
}

function render(state: AppState) {
  const root = document.createElement("div");
  document.body.appendChild(root);
  const actions = makeActions();
  renderApp(root, state, actions);
  return { root, actions };
}

describe("comparison view", () => {
  it("lists alternatives in ranking order with server-formatted totals", () => {
    const state = makeState();
    const { root } = render(state);
    const rows = [...root.querySelectorAll(".comparison tr[data-alternative]")];
    expect(rows.map((row) => row.getAttribute("data-alternative"))).toEqual([
      "b",
      "a",
    ]);
    const comparison = state.comparison!;
    for (const id of comparison.ranking) {
      const cell = root.querySelector(`.comparison td.total[data-alternative="${id}"]`);
      expect(cell?.textContent).toBe(formatTotal(comparison.results[id].total));
    }
    const flags = [...root.querySelectorAll(".comparison td.flag")].map(
      (cell) => cell.textContent,
    );
    expect(flags).toEqual(["meets expected", ""]);
  });

  it("explains a missing comparison instead of showing stale charts", () => {
    const { root } = render(
      makeState({
        comparison: null,
        comparisonProblem: "no alternative is fully graded",
      }),
    );
    expect(root.querySelector("#comparison")?.textContent).toContain(
      "no alternative is fully graded",
    );
    expect(root.querySelector(".comparison")).toBeNull();
  });

  it("shows server warnings under the charts", () => {
    const { root } = render(makeState());
    expect(root.querySelector("ul.warnings")?.textContent).toContain(
      "disagrees with the objective verdict",
    );
  });

  it("flags the preview and offers to discard it", () => {
    const preview = comparisonFixture();
    preview.results.b.total = 99;
    preview.charts.totals.actual = [80.8, 99];
    const state = makeState({
      preview,
      overrides: [
        { alternative: "b", property: "safety", criteria: { overall_acceptance: 0.6 } },
      ],
    });
    const { root, actions } = render(state);
    expect(root.querySelector("caption.preview-flag")).not.toBeNull();
    const total = root.querySelector('.comparison td.total[data-alternative="b"]');
    expect(total?.textContent).toBe("99.00");
    const discard = root.querySelector("#discard-whatif") as HTMLButtonElement;
    expect(discard).not.toBeNull();
    discard.click();
    expect(actions.discardOverrides).toHaveBeenCalled();
  });
});

describe("evaluation editor", () => {
  it("offers exactly the six acceptance levels, labelled verbatim", () => {
    const { root } = render(makeState());
    const options = [
      ...root.querySelectorAll("#acceptance-select option"),
    ] as HTMLOptionElement[];
    expect(options.map((o) => o.textContent)).toEqual([
      "totally unacceptable",
      "almost unacceptable",
      "predominantly unacceptable",
      "predominantly acceptable",
      "almost acceptable",
      "totally acceptable",
    ]);
    expect(options.map((o) => o.value)).toEqual(
      ACCEPTANCE_LEVELS.map((level) => String(level.value)),
    );
  });

  it("shows the objective verdict beside the grade and any disagreement", () => {
    const { root } = render(
      makeState({ selectedAlternative: "a", selectedProperty: "availability" }),
    );
    expect(root.querySelector(".verdict-badge")?.textContent).toBe(
      "objective check: unacceptable",
    );
    expect(root.querySelector(".disagreement")?.textContent).toContain(
      "alternative 'a', property 'availability'",
    );
  });

  it("keeps stored quantities when submitting the full criteria", () => {
    const { root, actions } = render(makeState());
    (root.querySelector("#acceptance-select") as HTMLSelectElement).value = "1";
    (root.querySelector("#benefit-select") as HTMLSelectElement).value = "none";
    (root.querySelector("#comment-input") as HTMLInputElement).value = "";
    (root.querySelector("#submit-evaluation") as HTMLButtonElement).click();
    expect(actions.submitEvaluation).toHaveBeenCalledWith("a", "safety", {
      overall_acceptance: 1,
      actual: { value: 2, kind: "failure_rate_fit" },
      expected: { value: 10, kind: "failure_rate_fit" },
      acceptable_upper_limit: 10,
    });
  });

  it("routes the preview button to a what-if override", () => {
    const { root, actions } = render(makeState());
    (root.querySelector("#preview-evaluation") as HTMLButtonElement).click();
    expect(actions.addOverride).toHaveBeenCalledWith({
      alternative: "a",
      property: "safety",
      criteria: expect.objectContaining({
        overall_acceptance: 0.8,
        benefit: "better_life_time",
        comment: "ok",
      }),
    });
  });

  it("shows an inline error for the selected evaluation", () => {
    const { root } = render(
      makeState({ formErrors: { "a/safety": "grade must be on the scale" } }),
    );
    const error = root.querySelector('.form-error[data-key="a/safety"]');
    expect(error?.textContent).toBe("grade must be on the scale");
  });
});

describe("banners", () => {
  it("offers a reload after a revision conflict and blocks submits", () => {
    const { root, actions } = render(makeState({ stale: true }));
    expect(root.querySelector("#banner-stale")).not.toBeNull();
    const submit = root.querySelector("#submit-evaluation") as HTMLButtonElement;
    expect(submit.hasAttribute("disabled")).toBe(true);
    (root.querySelector("#reload") as HTMLButtonElement).click();
    expect(actions.reload).toHaveBeenCalled();
  });

  it("shows the unreachable banner with a retry button", () => {
    const { root, actions } = render(
      makeState({
        phase: "unreachable",
        connectionError: "connection refused",
        project: null,
        comparison: null,
      }),
    );
    const banner = root.querySelector("#banner-unreachable");
    expect(banner?.textContent).toContain("connection refused");
    (root.querySelector("#retry") as HTMLButtonElement).click();
    expect(actions.retry).toHaveBeenCalled();
  });
});

describe("weights and conflicts", () => {
  it("submits edited weights for every property", () => {
    const { root, actions } = render(makeState());
    const input = root.querySelector(
      '#weights input[data-property="safety"]',
    ) as HTMLInputElement;
    input.value = "50";
    (root.querySelector("#apply-weights") as HTMLButtonElement).click();
    expect(actions.submitWeights).toHaveBeenCalledWith([
      { name: "safety", weight: 50 },
      { name: "availability", weight: 1 },
    ]);
  });

  it("renders conflict pairs and highlights them in the chart", () => {
    const { root, actions } = render(makeState({ conflict: conflictFixture() }));
    const pair = root.querySelector(".conflict-pairs li");
    expect(pair?.getAttribute("data-up")).toBe("availability");
    expect(pair?.getAttribute("data-down")).toBe("safety");
    expect(pair?.textContent).toBe(
      "availability improves at the expense of safety",
    );
    const highlighted = root.querySelector(
      '.contribution.conflict-up[data-property="availability"]',
    );
    expect(highlighted).not.toBeNull();
    expect(root.querySelector(".conflict-totals")?.textContent).toContain(
      "a 80.80 to b 101.00",
    );
    (root.querySelector("#check-conflicts") as HTMLButtonElement).click();
    expect(actions.loadConflicts).toHaveBeenCalledWith("a", "b");
  });
});

describe("header", () => {
  it("shows the project name, the notice line, and the base URL", () => {
    const { root, actions } = render(
      makeState({ notice: "weights updated" }),
    );
    expect(root.querySelector("#project-name")?.textContent).toBe(
      "Fixture project",
    );
    expect(root.querySelector(".notice")?.textContent).toBe("weights updated");
    const url = root.querySelector("#base-url") as HTMLInputElement;
    expect(url.value).toBe("http://example.test:1");
    url.value = "http://other.test:2";
    (root.querySelector("#apply-base-url") as HTMLButtonElement).click();
    expect(actions.setBaseUrl).toHaveBeenCalledWith("http://other.test:2");
  });
});
