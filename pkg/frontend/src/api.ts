/**
 * Thin typed client for the model service. Every number the UI shows comes
 * through here; there is no client-side re-derivation.
 */

import type {
  ContourResponse,
  CrossoverResponse,
  ErrorResponse,
  EvaluateResponse,
  FieldError,
  MachineEdit,
  ScenarioListResponse,
  ScenarioRunResponse,
  SweepResponse,
  WorkloadEdit,
} from "./types.js";

export class ServiceError extends Error {
  readonly status: number;
  readonly fieldErrors: FieldError[];

  constructor(status: number, fieldErrors: FieldError[]) {
    super(
      fieldErrors.map((e) => (e.field ? `${e.field}: ${e.message}` : e.message)).join("; ") ||
        `service error ${status}`,
    );
    this.status = status;
    this.fieldErrors = fieldErrors;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface EvaluateBody {
  machine?: MachineEdit;
  workload?: WorkloadEdit;
  scenario?: string;
}

export interface SweepAxisSpec {
  param: string;
  min: number;
  max: number;
  points: number;
  scale: "linear" | "log";
}

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl = "", fetchFn: FetchLike = (input, init) => fetch(input, init)) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchFn = fetchFn;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      let fieldErrors: FieldError[] = [];
      try {
        const body = (await response.json()) as ErrorResponse;
        fieldErrors = body.errors ?? [];
      } catch {
        // non-JSON error body: fall through with the bare status
      }
      throw new ServiceError(response.status, fieldErrors);
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  evaluate(body: EvaluateBody): Promise<EvaluateResponse> {
    return this.post<EvaluateResponse>("/evaluate", body);
  }

  sweep(
    body: EvaluateBody,
    axes: SweepAxisSpec[],
    metrics?: string[],
  ): Promise<SweepResponse> {
    return this.post<SweepResponse>("/sweep", {
      ...body,
      sweep: metrics ? { axes, metrics } : { axes },
    });
  }

  contour(
    machine: MachineEdit,
    metric: "tp_combined" | "p_combined",
    levels: number[],
    options: { cc_min?: number; cc_max?: number; points?: number } = {},
  ): Promise<ContourResponse> {
    return this.post<ContourResponse>("/contour", {
      machine,
      contour: { metric, levels, ...options },
    });
  }

  crossover(
    body: EvaluateBody,
    options: {
      metric?: "throughput" | "power";
      bw_min_gbps?: number;
      bw_max_gbps?: number;
      points?: number;
    } = {},
  ): Promise<CrossoverResponse> {
    return this.post<CrossoverResponse>("/crossover", { ...body, crossover: options });
  }

  listScenarios(): Promise<ScenarioListResponse> {
    return this.request<ScenarioListResponse>("/scenarios");
  }

  runScenario(id: string): Promise<ScenarioRunResponse> {
    return this.request<ScenarioRunResponse>(`/scenarios/${id}/run`);
  }
}
