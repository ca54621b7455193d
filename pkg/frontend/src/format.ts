/**
 * Display formatting: significant-digit rounding and the parameter/metric
 * metadata the panel and plane views render from. Unit scaling here is
 * display-only (powers of ten); all modeled values come from the service.
 */

export const DISPLAY_SIG_DIGITS = 3;

/** Format with a fixed number of significant digits; plain notation where
 * reasonable, scientific for extreme magnitudes. */
export function formatSig(value: number | null | undefined, digits = DISPLAY_SIG_DIGITS): string {
  if (value === null || value === undefined) return "∞";
  if (Number.isNaN(value)) return "–";
  if (!Number.isFinite(value)) return "∞";
  if (value === 0) return "0";
  const magnitude = Math.floor(Math.log10(Math.abs(value)));
  if (magnitude < -4 || magnitude >= 7) {
    return value.toExponential(digits - 1);
  }
  const rounded = Number(value.toPrecision(digits));
  // toPrecision keeps trailing zeros; Number() drops them for display
  return String(rounded);
}

export interface ParamMeta {
  key: string;
  section: "machine" | "workload";
  label: string;
  /** Divider turning the SI value into the display unit (e.g. 1e-9 for ns). */
  displayScale: number;
  unit: string;
  /** Suffix appended when submitting edits, so the service re-parses the
   * value in the same unit the user saw (e.g. "10" in a ns field -> "10ns"). */
  submitSuffix?: string;
}

export const PARAM_METAS: ParamMeta[] = [
  { key: "xbs", section: "machine", label: "crossbars", displayScale: 1, unit: "" },
  { key: "rows", section: "machine", label: "rows / crossbar", displayScale: 1, unit: "" },
  { key: "cols", section: "machine", label: "cols / crossbar", displayScale: 1, unit: "" },
  {
    key: "cycle_time", section: "machine", label: "cycle time",
    displayScale: 1e-9, unit: "ns", submitSuffix: "ns",
  },
  {
    key: "ebit_pim", section: "machine", label: "switch energy / bit",
    displayScale: 1e-12, unit: "pJ", submitSuffix: "pJ",
  },
  {
    key: "bw", section: "machine", label: "memory bandwidth",
    displayScale: 1e9, unit: "Gbps", submitSuffix: "Gbps",
  },
  {
    key: "ebit_cpu", section: "machine", label: "transfer energy / bit",
    displayScale: 1e-12, unit: "pJ", submitSuffix: "pJ",
  },
  { key: "oc", section: "workload", label: "operation cycles", displayScale: 1, unit: "" },
  { key: "pac", section: "workload", label: "alignment cycles", displayScale: 1, unit: "" },
  { key: "dio_cpu", section: "workload", label: "DIO, CPU-only", displayScale: 1, unit: "bits" },
  {
    key: "dio_combined", section: "workload", label: "DIO, combined",
    displayScale: 1, unit: "bits",
  },
];

export interface MetricMeta {
  key: string;
  label: string;
  unit: string;
  group: "pim" | "cpu" | "combined";
}

export const METRIC_METAS: MetricMeta[] = [
  { key: "tp_pim_gops", label: "PIM throughput", unit: "GOPS", group: "pim" },
  { key: "tp_cpu_gops", label: "CPU throughput", unit: "GOPS", group: "cpu" },
  { key: "tp_combined_gops", label: "combined throughput", unit: "GOPS", group: "combined" },
  { key: "p_pim_w", label: "PIM power", unit: "W", group: "pim" },
  { key: "p_cpu_w", label: "CPU power", unit: "W", group: "cpu" },
  { key: "p_combined_w", label: "combined power", unit: "W", group: "combined" },
  { key: "epc_pim_jgop", label: "PIM energy", unit: "J/GOP", group: "pim" },
  { key: "epc_cpu_jgop", label: "CPU energy", unit: "J/GOP", group: "cpu" },
  { key: "epc_combined_jgop", label: "combined energy", unit: "J/GOP", group: "combined" },
];

export function metricLabel(key: string): string {
  const meta = METRIC_METAS.find((m) => m.key === key);
  return meta ? `${meta.label} [${meta.unit}]` : key;
}

/** SI parameter value -> string in the panel's display unit. */
export function paramToDisplay(meta: ParamMeta, siValue: number | undefined): string {
  if (siValue === undefined) return "";
  return formatSig(siValue / meta.displayScale, 6);
}

/** User text in the panel -> value submitted to the service. Unit fields
 * get their display suffix appended so the service parses them; text that
 * already carries a suffix passes through untouched. */
export function displayToSubmit(meta: ParamMeta, text: string): number | string {
  const trimmed = text.trim();
  if (meta.submitSuffix && /^[+-]?[0-9.]+(e[+-]?[0-9]+)?$/i.test(trimmed)) {
    return `${trimmed}${meta.submitSuffix}`;
  }
  if (!meta.submitSuffix) {
    const numeric = Number(trimmed);
    if (!Number.isNaN(numeric) && trimmed !== "") return numeric;
  }
  return trimmed;
}
