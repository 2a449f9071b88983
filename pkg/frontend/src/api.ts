import type { ApiError, EvaluateResponse, Scenario } from "./types.js";

export type FetchLike = (url: string, init: RequestInit) => Promise<{
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}>;

export interface RequesterOptions {
  baseUrl?: string;
  /** Debounce delay in ms; contract is ≤ 100. */
  debounceMs?: number;
  fetchFn?: FetchLike;
  setTimeoutFn?: (cb: () => void, ms: number) => unknown;
  clearTimeoutFn?: (handle: unknown) => void;
}

export interface RequestOutcome {
  response: EvaluateResponse | null;
  /** Server validation text (verbatim) or network failure description. */
  error: string | null;
}

/**
 * Debounce-and-discard requester: rapid schedule() calls collapse into one
 * POST for the newest scenario, and any response that is not the latest
 * issued request is dropped. onResult therefore fires at most once per
 * settled burst, always with the latest outcome.
 */
export class EvaluateRequester {
  private readonly baseUrl: string;
  private readonly debounceMs: number;
  private readonly fetchFn: FetchLike;
  private readonly setTimeoutFn: (cb: () => void, ms: number) => unknown;
  private readonly clearTimeoutFn: (handle: unknown) => void;

  private pendingScenario: Scenario | null = null;
  private timerHandle: unknown = null;
  private requestSeq = 0;

  constructor(
    private readonly onResult: (outcome: RequestOutcome) => void,
    options: RequesterOptions = {},
  ) {
    this.baseUrl = options.baseUrl ?? "";
    this.debounceMs = options.debounceMs ?? 75;
    if (this.debounceMs > 100) {
      throw new Error("debounce must be at most 100 ms");
    }
    this.fetchFn = options.fetchFn ?? ((url, init) => fetch(url, init));
    this.setTimeoutFn = options.setTimeoutFn ?? ((cb, ms) => setTimeout(cb, ms));
    this.clearTimeoutFn = options.clearTimeoutFn ?? ((h) => clearTimeout(h as number));
  }

  /** Queue a scenario; only the newest one at timer expiry is sent. */
  schedule(scenario: Scenario): void {
    this.pendingScenario = scenario;
    if (this.timerHandle !== null) {
      this.clearTimeoutFn(this.timerHandle);
    }
    this.timerHandle = this.setTimeoutFn(() => this.flush(), this.debounceMs);
  }

  /** Send immediately, bypassing the debounce (used by the t-play ticker). */
  sendNow(scenario: Scenario): void {
    this.pendingScenario = scenario;
    if (this.timerHandle !== null) {
      this.clearTimeoutFn(this.timerHandle);
      this.timerHandle = null;
    }
    this.flush();
  }

  private flush(): void {
    this.timerHandle = null;
    const scenario = this.pendingScenario;
    if (scenario === null) return;
    this.pendingScenario = null;
    const seq = ++this.requestSeq;
    this.fetchFn(`${this.baseUrl}/api/evaluate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(scenario),
    })
      .then(async (res) => {
        const body = (await res.json()) as EvaluateResponse | ApiError;
        if (seq !== this.requestSeq) return; // superseded: discard
        if (!res.ok) {
          this.onResult({ response: null, error: (body as ApiError).error });
        } else {
          this.onResult({ response: body as EvaluateResponse, error: null });
        }
      })
      .catch((err: unknown) => {
        if (seq !== this.requestSeq) return;
        this.onResult({ response: null, error: `network failure: ${String(err)}` });
      });
  }
}
