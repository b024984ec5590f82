import type { Diagnostic } from "@codemirror/lint";
import type { CheckReport } from "./types";

/**
 * Editor underline ranges for the latest response, clamped to the current
 * document. Parse errors underline in red, check warnings in yellow; a
 * zero-width span (e.g. the empty-input diagnostic) is widened to one
 * character so it stays visible.
 */
export function toEditorDiagnostics(report: CheckReport, docLength: number): Diagnostic[] {
  return report.diagnostics.map((diag) => {
    const from = Math.min(diag.start, docLength);
    let to = Math.min(diag.end, docLength);
    if (to <= from) {
      to = Math.min(from + 1, docLength);
    }
    return {
      from,
      to,
      severity: report.verdict === "parse-error" ? "error" : "warning",
      message: diag.message,
    } satisfies Diagnostic;
  });
}
