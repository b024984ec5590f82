// The JSON check API contract. The editor displays these values verbatim
// and computes nothing of its own.

export type Verdict = "verified" | "warning" | "parse-error";

export interface DiagnosticInfo {
  start: number;
  end: number;
  line: number;
  col: number;
  message: string;
}

export interface StepInfo {
  rule: string;
  start: number;
  end: number;
  line: number;
  col: number;
  annotations: string[] | null;
  frontier: string[][];
}

export interface CheckReport {
  verdict: Verdict;
  diagnostics: DiagnosticInfo[];
  renderedGoal: { symbolic: string; parenthesized: string } | null;
  promotedLayout: string | null;
  isabelleTheory: string | null;
  steps: StepInfo[];
  countermodel: unknown;
}

export interface ExampleInfo {
  name: string;
  title: string;
  description: string;
  source: string;
}
