/** Test doubles shared across suites.
 *
 * Fixtures under tests/fixtures/ are byte-for-byte payloads recorded from
 * the property service (see scripts/capture_fixtures.py). The fetch stub
 * routes requests to those recordings and keeps a call log.
 */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

// Under a browser-like test environment the runner rewrites module URLs,
// so only trust import.meta.url when it still points at a real file.
const FIXTURE_DIR = import.meta.url.startsWith("file:")
  ? join(dirname(fileURLToPath(import.meta.url)), "fixtures")
  : join(process.cwd(), "tests", "fixtures");

export function fixtureBytes(name: string): Uint8Array {
  return new Uint8Array(readFileSync(join(FIXTURE_DIR, name)));
}

export function fixtureText(name: string): string {
  return new TextDecoder().decode(fixtureBytes(name));
}

export function fixtureJson<T>(name: string): T {
  return JSON.parse(fixtureText(name)) as T;
}

export interface RecordedCall {
  method: string;
  url: string;
  path: string;
  accept: string | null;
  body: unknown;
}

export interface RouteResult {
  status?: number;
  bytes?: Uint8Array;
  json?: unknown;
  /** Resolve the response only when this promise settles. */
  waitFor?: Promise<void>;
}

export type Route = (call: RecordedCall) => RouteResult | null;

interface ResponseLike {
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
  arrayBuffer(): Promise<ArrayBuffer>;
}

function makeResponse(status: number, bytes: Uint8Array): ResponseLike {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: async () => JSON.parse(new TextDecoder().decode(bytes)),
    arrayBuffer: async () =>
      bytes.buffer.slice(bytes.byteOffset, bytes.byteOffset + bytes.byteLength) as ArrayBuffer,
  };
}

export interface FetchStub {
  calls: RecordedCall[];
  restore(): void;
}

/** Replace global fetch with a router over canned responses. */
export function installFetch(route: Route): FetchStub {
  const calls: RecordedCall[] = [];
  const previous = (globalThis as { fetch?: unknown }).fetch;
  (globalThis as { fetch: unknown }).fetch = async (
    input: string,
    init?: { method?: string; headers?: Record<string, string>; body?: string },
  ) => {
    const url = String(input);
    const headers = init?.headers ?? {};
    const accept =
      Object.entries(headers).find(([k]) => k.toLowerCase() === "accept")?.[1] ?? null;
    const call: RecordedCall = {
      method: init?.method ?? "GET",
      url,
      path: new URL(url).pathname,
      accept,
      body: init?.body !== undefined ? JSON.parse(init.body) : null,
    };
    calls.push(call);
    const result = route(call);
    if (result === null) {
      throw new TypeError(`no route for ${call.method} ${url}`);
    }
    if (result.waitFor !== undefined) await result.waitFor;
    const status = result.status ?? 200;
    const bytes =
      result.bytes ?? new TextEncoder().encode(JSON.stringify(result.json ?? {}));
    return makeResponse(status, bytes);
  };
  return {
    calls,
    restore() {
      (globalThis as { fetch?: unknown }).fetch = previous;
    },
  };
}

/** A promise with its resolver exposed, for staged response timing. */
export function deferred(): { promise: Promise<void>; resolve(): void } {
  let resolve!: () => void;
  const promise = new Promise<void>((r) => {
    resolve = r;
  });
  return { promise, resolve };
}
