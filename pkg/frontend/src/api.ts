/** Typed client for the query service.
 *
 * Concurrent in-flight requests for the same parameter tuple are
 * deduplicated, and every logical fetch carries a sequence number so
 * callers can discard responses that arrive after a newer request
 * (slider scrubbing produces many overlapping fetches).  A 202 answer
 * is retried after its Retry-After delay until the result is ready.
 */

import type {
  FieldsPayload,
  MapPayload,
  NeighborsPayload,
  TermsPayload,
} from "./types.js";

export type FetchLike = (url: string) => Promise<{
  status: number;
  headers: { get(name: string): string | null };
  json(): Promise<unknown>;
}>;

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

const sleep = (ms: number) => new Promise<void>((resolve) => setTimeout(resolve, ms));

export class ApiClient {
  private inflight = new Map<string, Promise<unknown>>();
  private sequence = 0;

  constructor(
    private baseUrl: string = "",
    private fetcher: FetchLike = (url) => fetch(url),
    private maxRetries: number = 30,
  ) {}

  nextSequence(): number {
    this.sequence += 1;
    return this.sequence;
  }

  isCurrent(sequence: number): boolean {
    return sequence === this.sequence;
  }

  private getJson<T>(path: string): Promise<T> {
    const pending = this.inflight.get(path);
    if (pending) return pending as Promise<T>;
    const promise = this.request<T>(path).finally(() => {
      this.inflight.delete(path);
    });
    this.inflight.set(path, promise);
    return promise;
  }

  private async request<T>(path: string): Promise<T> {
    for (let attempt = 0; ; attempt++) {
      const response = await this.fetcher(this.baseUrl + path);
      if (response.status === 202) {
        if (attempt >= this.maxRetries) {
          throw new ApiError(202, "computation still pending, gave up retrying");
        }
        const retryAfter = Number(response.headers.get("Retry-After") ?? "1");
        await sleep(Math.max(0.05, retryAfter) * 1000);
        continue;
      }
      const body = (await response.json()) as T & { error?: string };
      if (response.status !== 200) {
        throw new ApiError(response.status, body?.error ?? `HTTP ${response.status}`);
      }
      return body;
    }
  }

  terms(prefix: string): Promise<TermsPayload> {
    const params = new URLSearchParams({ prefix });
    return this.getJson(`/terms?${params}`);
  }

  neighbors(
    term: string,
    alpha: number,
    s: number,
    window: [number, number],
  ): Promise<NeighborsPayload> {
    const params = new URLSearchParams({
      term,
      alpha: String(alpha),
      s: String(s),
      y1: String(window[0]),
      y2: String(window[1]),
    });
    return this.getJson(`/neighbors?${params}`);
  }

  fields(
    alpha: number,
    s: number,
    k: number,
    window: [number, number],
  ): Promise<FieldsPayload> {
    const params = new URLSearchParams({
      alpha: String(alpha),
      s: String(s),
      k: String(k),
      y1: String(window[0]),
      y2: String(window[1]),
    });
    return this.getJson(`/fields?${params}`);
  }

  map(
    alpha: number,
    s: number,
    k: number,
    window: [number, number],
    filter: [number, number] = [6, 20],
  ): Promise<MapPayload> {
    const params = new URLSearchParams({
      alpha: String(alpha),
      s: String(s),
      k: String(k),
      y1: String(window[0]),
      y2: String(window[1]),
      min_terms: String(filter[0]),
      max_terms: String(filter[1]),
    });
    return this.getJson(`/map?${params}`);
  }
}
