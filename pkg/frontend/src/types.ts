/**
 * Types mirroring the model service's JSON contract.
 */

export interface MachineParams {
  xbs: number;
  rows: number;
  cols: number;
  cycle_time: number;
  ebit_pim: number;
  bw: number;
  ebit_cpu: number;
  tdp_pim?: number;
  tdp_cpu?: number;
}

export interface WorkloadParams {
  oc: number;
  pac: number;
  dio_cpu: number;
  dio_combined: number;
  label: string;
}

export interface ResolvedParams {
  machine: MachineParams;
  workload: WorkloadParams;
}

/** Metric ids match the service's CSV column names (tp_pim_gops, ...). */
export type MetricsDict = Record<string, number | null>;

export interface EvaluateResponse {
  params: ResolvedParams;
  result: MetricsDict;
  tdp_flags: string[];
}

export interface FieldError {
  field: string;
  message: string;
}

export interface ErrorResponse {
  errors: FieldError[];
}

export interface SweepAxis {
  param: string;
  values: number[];
}

export interface SweepResponse {
  params: ResolvedParams;
  axes: SweepAxis[];
  metrics: string[];
  /** Row-major: values[i][j][k] for 2 axes, values[i][k] for 1 axis. */
  values: unknown[];
}

export interface ContourLine {
  metric: string;
  level: number;
  points: [number, number][];
  coefficients: { cc: number; dio: number; rhs: number };
}

export interface ContourResponse {
  machine: MachineParams;
  lines: ContourLine[];
}

export interface CrossoverResponse {
  metric: string;
  dominant: string | null;
  slope_per_gbps: number | null;
  points: [number, number][];
}

export interface ScenarioSummary {
  id: string;
  description: string;
  citation: string;
  expectations: number;
}

export interface ScenarioListResponse {
  scenarios: ScenarioSummary[];
}

export interface ScenarioCheck {
  field: string;
  expected: number;
  computed: number | null;
  compared: number | null;
  passed: boolean;
  citation: string;
}

export interface ScenarioRunResponse {
  scenario: string;
  passed: boolean;
  checks: ScenarioCheck[];
  params: ResolvedParams;
  result: MetricsDict;
}

/** Values the parameter panel may submit: the service parses unit-suffixed
 * strings ("10ns", "0.29fJ") itself, so raw user text passes through. */
export type ParamValue = number | string;

export interface WorkloadEdit {
  oc?: ParamValue;
  pac?: ParamValue;
  dio_cpu?: ParamValue;
  dio_combined?: ParamValue;
  label?: string;
}

export interface MachineEdit {
  xbs?: ParamValue;
  rows?: ParamValue;
  cols?: ParamValue;
  cycle_time?: ParamValue;
  ebit_pim?: ParamValue;
  bw?: ParamValue;
  ebit_cpu?: ParamValue;
  tdp_pim?: ParamValue;
  tdp_cpu?: ParamValue;
}
