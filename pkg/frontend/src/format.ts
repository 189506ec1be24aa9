/** Number formatting for display. Values themselves come from the server. */

/** Priority totals are shown with two decimals, like 110.31. */
export function formatTotal(value: number): string {
  return value.toFixed(2);
}

/** RAMS figures use six significant digits; null means not finite. */
export function formatRams(value: number | null): string {
  if (value === null) return "infinite";
  if (value === 0) return "0";
  return Number(value.toPrecision(6)).toString();
}

/** Wire enum values read fine with the underscores swapped for spaces. */
export function enumLabel(value: string): string {
  return value.replace(/_/g, " ");
}
