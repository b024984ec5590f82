import { describe, expect, it } from "vitest";

import { toEditorDiagnostics } from "../src/decorations";
import type { CheckReport } from "../src/types";

import missingExt from "./fixtures/missing_ext.json";
import parseError from "./fixtures/parse_error.json";

type Fixture = { source: string; response: CheckReport };

const MISSING_EXT = missingExt as Fixture;
const PARSE_ERROR = parseError as Fixture;

describe("toEditorDiagnostics", () => {
  it("underlines the Basic step of the missing-Ext proof as a warning", () => {
    const ranges = toEditorDiagnostics(MISSING_EXT.response, MISSING_EXT.source.length);
    expect(ranges).toHaveLength(1);
    const [range] = ranges;
    expect(range.severity).toBe("warning");
    expect(MISSING_EXT.source.slice(range.from, range.to)).toBe("Basic");
  });

  it("marks parse errors as errors", () => {
    const ranges = toEditorDiagnostics(PARSE_ERROR.response, PARSE_ERROR.source.length);
    expect(ranges[0].severity).toBe("error");
  });

  it("widens zero-width spans so the underline stays visible", () => {
    const report: CheckReport = {
      verdict: "parse-error",
      diagnostics: [{ start: 0, end: 0, line: 1, col: 1, message: "empty input" }],
      renderedGoal: null,
      promotedLayout: null,
      isabelleTheory: null,
      steps: [],
      countermodel: null,
    };
    const [range] = toEditorDiagnostics(report, 5);
    expect(range.to).toBe(range.from + 1);
  });

  it("clamps spans that outrun a shrunken document", () => {
    const report: CheckReport = {
      ...(MISSING_EXT.response as CheckReport),
      diagnostics: [{ start: 100, end: 120, line: 1, col: 1, message: "late" }],
    };
    const [range] = toEditorDiagnostics(report, 10);
    expect(range.from).toBeLessThanOrEqual(10);
    expect(range.to).toBeLessThanOrEqual(10);
  });
});
