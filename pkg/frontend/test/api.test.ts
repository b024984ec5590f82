import { describe, expect, it, vi } from "vitest";

import { CheckClient } from "../src/api";
import type { CheckReport } from "../src/types";

import impPP from "./fixtures/imp_p_p.json";

const VERIFIED = impPP as { source: string; response: CheckReport };

function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

describe("CheckClient", () => {
  it("posts the source and returns the report", async () => {
    const fetchImpl = vi.fn(async (input: string, init?: RequestInit) => {
      expect(input).toBe("http://127.0.0.1:7878/check");
      expect(init?.method).toBe("POST");
      expect(JSON.parse(init?.body as string)).toEqual({ source: VERIFIED.source });
      return jsonResponse(VERIFIED.response);
    });
    const client = new CheckClient("http://127.0.0.1:7878", fetchImpl);
    const report = await client.check(VERIFIED.source);
    expect(report.verdict).toBe("verified");
    expect(report.steps.map((s) => s.rule)).toEqual(["Imp_R", "Ext", "Basic"]);
  });

  it("accepts a 422 timeout body as a report", async () => {
    const timedOut = {
      verdict: "warning",
      diagnostics: [{ start: 0, end: 0, line: 1, col: 1, message: "check timed out" }],
      renderedGoal: null,
      promotedLayout: null,
      isabelleTheory: null,
      steps: [],
      countermodel: null,
    };
    const client = new CheckClient("", async () => jsonResponse(timedOut, 422));
    const report = await client.check("anything");
    expect(report.diagnostics[0].message).toBe("check timed out");
  });

  it("throws on other HTTP errors", async () => {
    const client = new CheckClient("", async () => jsonResponse({ error: "nope" }, 500));
    await expect(client.check("x")).rejects.toThrow("HTTP 500");
  });

  it("fetches the example list", async () => {
    const payload = {
      examples: [{ name: "imp_p_p", title: "p → p", description: "", source: "Imp p p" }],
    };
    const client = new CheckClient("", async () => jsonResponse(payload));
    const examples = await client.examples();
    expect(examples).toHaveLength(1);
    expect(examples[0].name).toBe("imp_p_p");
  });

  it("health reports false when unreachable", async () => {
    const client = new CheckClient("", async () => {
      throw new Error("ECONNREFUSED");
    });
    expect(await client.health()).toBe(false);
  });
});
