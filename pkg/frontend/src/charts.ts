/** SVG charts built from the server's ready-made chart payloads.
 *
 * Both builders return markup strings. Pixel geometry is computed here,
 * but every number shown as text is a server value passed through the
 * shared formatter, never something recomputed from grades or weights.
 */

import { formatTotal } from "./format.js";
import type { ContributionsChartJson, TotalsChartJson } from "./types.js";

const WIDTH = 640;
const BAR_HEIGHT = 22;
const GAP = 8;
const LABEL_WIDTH = 180;
const VALUE_WIDTH = 70;

const PALETTE = [
  "#3c6e9f",
  "#8a5d9f",
  "#3f8f6a",
  "#b0803a",
  "#a05252",
  "#58788a",
  "#7a7a4a",
];

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function propertyColor(index: number): string {
  return PALETTE[index % PALETTE.length];
}

/** One bar per alternative plus a dashed marker at the expected total. */
export function totalsChartSvg(totals: TotalsChartJson): string {
  const count = totals.alternatives.length;
  const plotWidth = WIDTH - LABEL_WIDTH - VALUE_WIDTH;
  const height = count * (BAR_HEIGHT + GAP) + GAP + 18;
  const maxValue = Math.max(totals.expected, ...totals.actual, 1e-12);
  const scale = (value: number) => (value / maxValue) * plotWidth;

  const parts: string[] = [];
  totals.alternatives.forEach((id, i) => {
    const y = GAP + i * (BAR_HEIGHT + GAP);
    const value = totals.actual[i];
    parts.push(
      `<text x="${LABEL_WIDTH - 8}" y="${y + BAR_HEIGHT - 6}" text-anchor="end" ` +
        `class="chart-label">${escapeXml(totals.labels[i])}</text>`,
      `<rect x="${LABEL_WIDTH}" y="${y}" width="${scale(value).toFixed(1)}" ` +
        `height="${BAR_HEIGHT}" class="total-bar" data-alternative="${escapeXml(id)}" ` +
        `data-value="${value}" fill="${PALETTE[0]}"></rect>`,
      `<text x="${LABEL_WIDTH + scale(value) + 6}" y="${y + BAR_HEIGHT - 6}" ` +
        `class="chart-value">${formatTotal(value)}</text>`,
    );
  });
  const expectedX = LABEL_WIDTH + scale(totals.expected);
  parts.push(
    `<line x1="${expectedX}" y1="0" x2="${expectedX}" y2="${height - 16}" ` +
      `class="expected-marker" data-expected="${totals.expected}" ` +
      `stroke="#555" stroke-dasharray="4 3"></line>`,
    `<text x="${expectedX}" y="${height - 4}" text-anchor="middle" class="chart-label">` +
      `expected ${formatTotal(totals.expected)}</text>`,
  );
  return (
    `<svg viewBox="0 0 ${WIDTH} ${height}" class="totals-chart" role="img" ` +
    `aria-label="priority totals">${parts.join("")}</svg>`
  );
}

export interface ContributionHighlights {
  /** Property names to mark as improved / worsened (conflict view). */
  up?: string[];
  down?: string[];
}

/** Stacked per-property contribution bars, one row per alternative. */
export function contributionsChartSvg(
  chart: ContributionsChartJson,
  alternativeLabels: Record<string, string>,
  highlights: ContributionHighlights = {},
): string {
  const ids = Object.keys(chart.per_alternative);
  const plotWidth = WIDTH - LABEL_WIDTH - VALUE_WIDTH;
  const legendHeight = 20;
  const height = ids.length * (BAR_HEIGHT + GAP) + GAP + legendHeight + 8;
  let maxTotal = 1e-12;
  for (const id of ids) {
    const sum = chart.per_alternative[id].reduce((a, b) => a + b, 0);
    if (sum > maxTotal) maxTotal = sum;
  }
  const scale = (value: number) => (value / maxTotal) * plotWidth;

  const up = new Set(highlights.up ?? []);
  const down = new Set(highlights.down ?? []);
  const parts: string[] = [];
  ids.forEach((id, row) => {
    const y = GAP + row * (BAR_HEIGHT + GAP);
    parts.push(
      `<text x="${LABEL_WIDTH - 8}" y="${y + BAR_HEIGHT - 6}" text-anchor="end" ` +
        `class="chart-label">${escapeXml(alternativeLabels[id] ?? id)}</text>`,
    );
    let x = LABEL_WIDTH;
    chart.properties.forEach((property, column) => {
      const value = chart.per_alternative[id][column];
      const width = scale(value);
      const marks = up.has(property)
        ? " conflict-up"
        : down.has(property)
          ? " conflict-down"
          : "";
      parts.push(
        `<rect x="${x.toFixed(1)}" y="${y}" width="${width.toFixed(1)}" ` +
          `height="${BAR_HEIGHT}" class="contribution${marks}" ` +
          `data-alternative="${escapeXml(id)}" data-property="${escapeXml(property)}" ` +
          `data-value="${value}" fill="${propertyColor(column)}">` +
          `<title>${escapeXml(`${property}: ${value}`)}</title></rect>`,
      );
      x += width;
    });
  });
  const legendY = height - legendHeight + 6;
  let legendX = LABEL_WIDTH;
  chart.properties.forEach((property, column) => {
    parts.push(
      `<rect x="${legendX}" y="${legendY - 10}" width="10" height="10" ` +
        `fill="${propertyColor(column)}"></rect>`,
      `<text x="${legendX + 14}" y="${legendY}" class="chart-label legend-entry" ` +
        `data-property="${escapeXml(property)}">${escapeXml(property)}</text>`,
    );
    legendX += 14 + 8 * property.length + 16;
  });
  return (
    `<svg viewBox="0 0 ${WIDTH} ${height}" class="contributions-chart" role="img" ` +
    `aria-label="per-property contributions">${parts.join("")}</svg>`
  );
}
