/**
 * Session state: named configuration columns, the active exploration plane,
 * pinned iso-levels, and scenario preset badges.
 *
 * Every displayed number originates from a service response; edits merge
 * into a pending batch, debounce, and resolve last-write-wins per column
 * via sequencing tokens.
 */

import type { ApiClient, EvaluateBody, SweepAxisSpec } from "./api.js";
import { ServiceError } from "./api.js";
import type {
  ContourLine,
  CrossoverResponse,
  EvaluateResponse,
  FieldError,
  MachineEdit,
  MetricsDict,
  ResolvedParams,
  ScenarioCheck,
  SweepResponse,
  WorkloadEdit,
} from "./types.js";

export interface ColumnState {
  id: number;
  name: string;
  /** Resolved (defaulted) parameters as the service reported them. */
  params: ResolvedParams;
  result: MetricsDict;
  tdpFlags: string[];
  /** Pending service round trip (readouts are stale while true). */
  pending: boolean;
  /** Inline field errors from the last rejected edit, never dropped. */
  errors: FieldError[];
  /** Expected-vs-computed badges when the column came from a preset. */
  badges: ScenarioCheck[] | null;
  scenarioId: string | null;
}

export type PlaneKind = "cc_dio" | "xbs_bw";

export interface ProbeState {
  x: number;
  y: number;
  params: ResolvedParams;
  result: MetricsDict;
}

export interface PlaneState {
  kind: PlaneKind;
  metric: string;
  grid: SweepResponse | null;
  isoLines: ContourLine[];
  crossover: CrossoverResponse | null;
  pinnedLevels: number[];
  probe: ProbeState | null;
  stale: boolean;
  banner: string | null;
}

interface PendingEdit {
  machine: MachineEdit;
  workload: WorkloadEdit;
  timer: ReturnType<typeof setTimeout> | null;
  resolvers: (() => void)[];
}

export const PLANE_AXES: Record<PlaneKind, [SweepAxisSpec, SweepAxisSpec]> = {
  cc_dio: [
    { param: "cc", min: 10, max: 1e5, points: 48, scale: "log" },
    { param: "dio_combined", min: 1, max: 256, points: 48, scale: "log" },
  ],
  xbs_bw: [
    { param: "xbs", min: 512, max: 65536, points: 48, scale: "log" },
    { param: "bw", min: 250e9, max: 16e12, points: 48, scale: "log" },
  ],
};

export class SessionStore {
  private readonly client: ApiClient;
  private readonly debounceMs: number;
  private readonly listeners = new Set<() => void>();
  private nextColumnId = 1;
  private readonly seqByColumn = new Map<number, number>();
  private readonly pendingEdits = new Map<number, PendingEdit>();

  columns: ColumnState[] = [];
  activeColumnId: number | null = null;
  plane: PlaneState = {
    kind: "cc_dio",
    metric: "tp_combined_gops",
    grid: null,
    isoLines: [],
    crossover: null,
    pinnedLevels: [],
    probe: null,
    stale: true,
    banner: null,
  };

  constructor(client: ApiClient, debounceMs = 150) {
    this.client = client;
    this.debounceMs = debounceMs;
  }

  subscribe(listener: () => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  get activeColumn(): ColumnState | null {
    return this.columns.find((c) => c.id === this.activeColumnId) ?? null;
  }

  column(id: number): ColumnState | null {
    return this.columns.find((c) => c.id === id) ?? null;
  }

  /** Evaluate a config and append it as a new comparison column. */
  async addColumn(name: string, body: EvaluateBody): Promise<ColumnState> {
    const response = await this.client.evaluate(body);
    const column = this.appendColumn(name, response, null, null);
    this.notify();
    return column;
  }

  private appendColumn(
    name: string,
    response: EvaluateResponse,
    badges: ScenarioCheck[] | null,
    scenarioId: string | null,
  ): ColumnState {
    const column: ColumnState = {
      id: this.nextColumnId++,
      name,
      params: response.params,
      result: response.result,
      tdpFlags: response.tdp_flags ?? [],
      pending: false,
      errors: [],
      badges,
      scenarioId,
    };
    this.columns.push(column);
    this.activeColumnId = column.id;
    this.seqByColumn.set(column.id, 0);
    return column;
  }

  /** Load a published preset: params, results, and pass/fail badges. */
  async loadPreset(scenarioId: string): Promise<ColumnState> {
    const run = await this.client.runScenario(scenarioId);
    const column = this.appendColumn(
      scenarioId,
      { params: run.params, result: run.result, tdp_flags: [] },
      run.checks,
      scenarioId,
    );
    this.notify();
    return column;
  }

  removeColumn(id: number): void {
    this.columns = this.columns.filter((c) => c.id !== id);
    if (this.activeColumnId === id) {
      this.activeColumnId = this.columns.length ? this.columns[this.columns.length - 1].id : null;
      this.plane.stale = true;
    }
    this.notify();
  }

  setActiveColumn(id: number): void {
    if (this.activeColumnId !== id && this.column(id)) {
      this.activeColumnId = id;
      this.plane.stale = true;
      this.notify();
    }
  }

  /**
   * Edit one parameter of a column. Edits within the debounce window merge
   * into one request; a newer request supersedes an in-flight older one
   * (last write wins). The returned promise settles when this edit's batch
   * has been applied or superseded.
   */
  editParameter(
    columnId: number,
    section: "machine" | "workload",
    key: string,
    value: number | string,
  ): Promise<void> {
    const column = this.column(columnId);
    if (!column) return Promise.resolve();
    let pending = this.pendingEdits.get(columnId);
    if (!pending) {
      pending = { machine: {}, workload: {}, timer: null, resolvers: [] };
      this.pendingEdits.set(columnId, pending);
    }
    (pending[section] as Record<string, number | string>)[key] = value;
    column.pending = true;
    this.notify();
    const done = new Promise<void>((resolve) => pending!.resolvers.push(resolve));
    if (pending.timer !== null) clearTimeout(pending.timer);
    pending.timer = setTimeout(() => void this.flushEdits(columnId), this.debounceMs);
    return done;
  }

  private async flushEdits(columnId: number): Promise<void> {
    const column = this.column(columnId);
    const pending = this.pendingEdits.get(columnId);
    this.pendingEdits.delete(columnId);
    if (!column || !pending) {
      pending?.resolvers.forEach((resolve) => resolve());
      return;
    }
    const seq = (this.seqByColumn.get(columnId) ?? 0) + 1;
    this.seqByColumn.set(columnId, seq);

    // Re-submit the column's resolved params with the edits layered on top;
    // the service re-validates and recomputes everything.
    const body: EvaluateBody = {
      machine: { ...column.params.machine, ...pending.machine },
      workload: { ...column.params.workload, ...pending.workload },
    };
    try {
      const response = await this.client.evaluate(body);
      if (this.seqByColumn.get(columnId) === seq) {
        column.params = response.params;
        column.result = response.result;
        column.tdpFlags = response.tdp_flags ?? [];
        column.errors = [];
        column.pending = false;
        column.badges = null; // edits invalidate preset expectations
        if (columnId === this.activeColumnId) this.plane.stale = true;
      }
    } catch (err) {
      if (this.seqByColumn.get(columnId) === seq) {
        column.pending = false;
        column.errors =
          err instanceof ServiceError && err.fieldErrors.length
            ? err.fieldErrors
            : [{ field: "", message: String(err) }];
      }
    } finally {
      pending.resolvers.forEach((resolve) => resolve());
      this.notify();
    }
  }

  setPlane(kind: PlaneKind): void {
    if (this.plane.kind !== kind) {
      this.plane = { ...this.plane, kind, grid: null, isoLines: [], crossover: null, stale: true, probe: null };
      this.notify();
    }
  }

  pinLevel(level: number): void {
    if (!this.plane.pinnedLevels.includes(level)) {
      this.plane.pinnedLevels = [...this.plane.pinnedLevels, level].sort((a, b) => a - b);
      this.plane.stale = true;
      this.notify();
    }
  }

  unpinLevel(level: number): void {
    this.plane.pinnedLevels = this.plane.pinnedLevels.filter((l) => l !== level);
    this.plane.stale = true;
    this.notify();
  }

  /** Fetch the heatmap grid, iso-lines, and crossover curve for the active
   * column's configuration. */
  async refreshPlane(): Promise<void> {
    const column = this.activeColumn;
    if (!column) return;
    const axes = PLANE_AXES[this.plane.kind];
    const body: EvaluateBody = {
      machine: { ...column.params.machine },
      workload: { ...column.params.workload },
    };
    try {
      const grid = await this.client.sweep(body, [...axes], [this.plane.metric]);
      let isoLines: ContourLine[] = [];
      if (this.plane.kind === "cc_dio" && this.plane.pinnedLevels.length) {
        const metric = this.plane.metric === "p_combined_w" ? "p_combined" : "tp_combined";
        const contour = await this.client.contour(
          body.machine ?? {},
          metric,
          this.plane.pinnedLevels,
          { points: 64 },
        );
        isoLines = contour.lines;
      }
      let crossover: CrossoverResponse | null = null;
      if (this.plane.kind === "xbs_bw") {
        crossover = await this.client.crossover(body, {
          metric: this.plane.metric === "p_combined_w" ? "power" : "throughput",
          bw_min_gbps: 250,
          bw_max_gbps: 16000,
          points: 48,
        });
      }
      this.plane = { ...this.plane, grid, isoLines, crossover, stale: false, banner: null };
    } catch (err) {
      this.plane = { ...this.plane, stale: true, banner: String(err) };
    }
    this.notify();
  }

  /**
   * Probe one plane point. The readout is a direct service evaluation of
   * the probed coordinates, never an interpolation of the heatmap.
   */
  async probe(x: number, y: number): Promise<ProbeState | null> {
    const column = this.activeColumn;
    if (!column) return null;
    const machine: MachineEdit = { ...column.params.machine };
    const workload: WorkloadEdit = { ...column.params.workload };
    if (this.plane.kind === "cc_dio") {
      workload.oc = x;
      workload.pac = 0;
      workload.dio_combined = y;
    } else {
      machine.xbs = x;
      machine.bw = y;
    }
    try {
      const response = await this.client.evaluate({ machine, workload });
      const probe: ProbeState = { x, y, params: response.params, result: response.result };
      this.plane = { ...this.plane, probe };
      this.notify();
      return probe;
    } catch {
      return null;
    }
  }

  /** Pin the current probe as a new comparison column. */
  async pinProbeAsColumn(): Promise<ColumnState | null> {
    const probe = this.plane.probe;
    const column = this.activeColumn;
    if (!probe || !column) return null;
    const name =
      this.plane.kind === "cc_dio"
        ? `${column.name} @ cc=${Math.round(probe.x)}, dio=${probe.y.toPrecision(3)}`
        : `${column.name} @ xbs=${Math.round(probe.x)}, bw=${(probe.y / 1e9).toPrecision(3)}G`;
    const added = await this.addColumn(name, {
      machine: { ...probe.params.machine },
      workload: { ...probe.params.workload },
    });
    return added;
  }

  /** Current columns as a config-file JSON document list for export. */
  exportColumns(): string {
    const docs = this.columns.map((c) => ({
      machine: c.params.machine,
      workload: c.params.workload,
    }));
    return JSON.stringify(docs.length === 1 ? docs[0] : docs, null, 2);
  }
}
