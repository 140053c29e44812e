/** Thin client for the property service. Every call returns the server
 * payload untouched; CSV requests hand back the raw byte stream. */

import type {
  ActivityResponse,
  ApiErrorBody,
  BoilingResponse,
  FitResponse,
  ValidateResponse,
  VaporPressureResponse,
  VleResponse,
} from "./types.js";

export class ServiceError extends Error {
  readonly status: number;
  readonly body: ApiErrorBody;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.name = "ServiceError";
    this.status = status;
    this.body = body;
  }
}

export class TransportError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "TransportError";
  }
}

async function request(
  base: string,
  path: string,
  init: RequestInit,
): Promise<Response> {
  let response: Response;
  try {
    response = await fetch(base.replace(/\/$/, "") + path, init);
  } catch (exc) {
    throw new TransportError(`service unreachable: ${String(exc)}`);
  }
  if (!response.ok) {
    let body: ApiErrorBody;
    try {
      const parsed = (await response.json()) as { error?: ApiErrorBody };
      body = parsed.error ?? { code: "unknown", message: "unrecognised error payload" };
    } catch {
      body = { code: "unknown", message: `HTTP ${response.status}` };
    }
    throw new ServiceError(response.status, body);
  }
  return response;
}

async function postJson<T>(base: string, path: string, payload: unknown): Promise<T> {
  const response = await request(base, path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
  });
  return (await response.json()) as T;
}

/** POST with `Accept: text/csv` and return the exact response bytes.
 * The bytes are never decoded into rows here; downloads re-use them as-is. */
async function postCsv(base: string, path: string, payload: unknown): Promise<Uint8Array> {
  const response = await request(base, path, {
    method: "POST",
    headers: { "Content-Type": "application/json", Accept: "text/csv" },
    body: JSON.stringify(payload),
  });
  return new Uint8Array(await response.arrayBuffer());
}

export interface VleRequest {
  smiles: [string, string];
  model: string;
  T_K?: number;
  p_Pa?: number;
}

export interface ActivityRequest {
  smiles: [string, string];
  model: string;
  T_K: number;
}

export interface FitRequest {
  smiles: [string, string];
  model: string;
  variant: number;
  T_K?: number;
  T_range_K?: [number, number];
}

export class ServiceClient {
  constructor(readonly base: string) {}

  models(): Promise<{ models: string[] }> {
    return request(this.base, "/v1/models", { method: "GET" }).then(
      (r) => r.json() as Promise<{ models: string[] }>,
    );
  }

  validateSmiles(smiles: string[]): Promise<ValidateResponse> {
    return postJson(this.base, "/v1/validate-smiles", { smiles });
  }

  vaporPressure(smiles: string, T_K: number): Promise<VaporPressureResponse> {
    return postJson(this.base, "/v1/vapor-pressure", { smiles, T_K });
  }

  boilingTemperature(smiles: string, p_Pa: number): Promise<BoilingResponse> {
    return postJson(this.base, "/v1/boiling-temperature", { smiles, p_Pa });
  }

  activity(req: ActivityRequest): Promise<ActivityResponse> {
    return postJson(this.base, "/v1/activity", req);
  }

  activityCsv(req: ActivityRequest): Promise<Uint8Array> {
    return postCsv(this.base, "/v1/activity", req);
  }

  vle(req: VleRequest): Promise<VleResponse> {
    return postJson(this.base, "/v1/vle", req);
  }

  vleCsv(req: VleRequest): Promise<Uint8Array> {
    return postCsv(this.base, "/v1/vle", req);
  }

  fitNrtl(req: FitRequest): Promise<FitResponse> {
    return postJson(this.base, "/v1/fit-nrtl", req);
  }

  fitNrtlCsv(req: FitRequest): Promise<Uint8Array> {
    return postCsv(this.base, "/v1/fit-nrtl", req);
  }
}

/** Serialises concurrent submissions: each begun request gets a token and
 * only the most recently issued token is allowed to apply its response. */
export class RequestGate {
  private counter = 0;

  begin(): number {
    this.counter += 1;
    return this.counter;
  }

  isCurrent(token: number): boolean {
    return token === this.counter;
  }
}
