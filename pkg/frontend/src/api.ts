import type { CheckReport, ExampleInfo } from "./types";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin client for the local check service. */
export class CheckClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async check(source: string): Promise<CheckReport> {
    const response = await this.fetchImpl(`${this.baseUrl}/check`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ source }),
    });
    // 422 (timed out) still carries a report-shaped body.
    if (!response.ok && response.status !== 422) {
      throw new Error(`check failed: HTTP ${response.status}`);
    }
    return (await response.json()) as CheckReport;
  }

  async examples(): Promise<ExampleInfo[]> {
    const response = await this.fetchImpl(`${this.baseUrl}/examples`);
    if (!response.ok) {
      throw new Error(`examples failed: HTTP ${response.status}`);
    }
    const payload = (await response.json()) as { examples: ExampleInfo[] };
    return payload.examples;
  }

  async health(): Promise<boolean> {
    try {
      const response = await this.fetchImpl(`${this.baseUrl}/health`);
      return response.ok;
    } catch {
      return false;
    }
  }
}
