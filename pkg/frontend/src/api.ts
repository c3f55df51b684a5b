// Typed client for the /v1 diagnosis service. All numbers shown anywhere in
// the UI come from these responses; the client never computes medicine.

export type AttributeKind = "numeric" | "nominal" | "binary";

export interface SchemaAttribute {
  name: string;
  kind: AttributeKind;
  role: string;
  description: string;
  labels?: string[];
  range?: [number, number] | null;
}

export interface SchemaResponse {
  attributes: SchemaAttribute[];
  decision: string;
  threshold: number;
  fingerprint: string;
}

export interface RuleTerm {
  attribute: string;
  labels: string[];
}

export interface RuleInfo {
  id: number;
  text: string;
  support: number;
  weight: number;
  consequent: string;
  terms: RuleTerm[];
}

export interface Activation {
  rule_id: number;
  activation: number;
  weight: number;
}

export interface DiagnoseResponse {
  percentage: number | null;
  label: string;
  uncovered: boolean;
  activations: Activation[];
}

export interface SweepPoint {
  value: number;
  percentage: number | null;
  label: string;
}

export type WireValue = number | string | null;
export type WireAttributes = Record<string, WireValue>;

export interface SweepRequest {
  attribute: string;
  from: number;
  to: number;
  steps: number;
}

/** Field-addressable request failure; status 0 means the network died. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly field: string | null,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }

  get isNetwork(): boolean {
    return this.status === 0;
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function toApiError(resp: Response): Promise<ApiError> {
  let field: string | null = null;
  let message = `request failed with status ${resp.status}`;
  try {
    const body = await resp.json();
    const detail = body?.detail;
    if (Array.isArray(detail) && detail.length > 0) {
      field = typeof detail[0].field === "string" ? detail[0].field : null;
      message = String(detail[0].message ?? message);
    } else if (typeof detail === "string") {
      message = detail;
    }
  } catch {
    // non-JSON error body; keep the status message
  }
  return new ApiError(resp.status, field, message);
}

export class Client {
  constructor(
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
    private readonly base: string = "",
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let resp: Response;
    try {
      resp = await this.fetchFn(this.base + path, init);
    } catch (err) {
      throw new ApiError(0, null, `network failure: ${String(err)}`);
    }
    if (!resp.ok) {
      throw await toApiError(resp);
    }
    return (await resp.json()) as T;
  }

  getSchema(): Promise<SchemaResponse> {
    return this.request<SchemaResponse>("/v1/schema");
  }

  async getRules(): Promise<RuleInfo[]> {
    const body = await this.request<{ rules: RuleInfo[] }>("/v1/rules");
    return body.rules;
  }

  diagnose(attributes: WireAttributes): Promise<DiagnoseResponse> {
    return this.request<DiagnoseResponse>("/v1/diagnose", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ attributes }),
    });
  }

  whatif(attributes: WireAttributes, sweep: SweepRequest): Promise<SweepPoint[]> {
    return this.request<SweepPoint[]>("/v1/whatif", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ attributes, sweep }),
    });
  }
}
