import type { CheckClient } from "./api";
import type { CheckReport } from "./types";

export const DEBOUNCE_MS = 350;

export interface StoreState {
  content: string;
  report: CheckReport | null;
  checking: boolean;
  offline: boolean;
}

export type Listener = (state: StoreState) => void;

/**
 * The editor's view model. Every edit bumps a generation counter and
 * schedules a check 350 ms after the last keystroke; only the newest
 * generation's response is ever applied, so stale answers are discarded.
 * The service is the single source of truth: verdicts, layouts and
 * renders are stored verbatim.
 */
export class EditorStore {
  private state: StoreState = {
    content: "",
    report: null,
    checking: false,
    offline: false,
  };

  private generation = 0;
  private appliedGeneration = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private listeners: Listener[] = [];

  constructor(
    private readonly client: Pick<CheckClient, "check">,
    private readonly clipboard: (text: string) => Promise<void> | void,
    private readonly debounceMs: number = DEBOUNCE_MS,
  ) {}

  getState(): StoreState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private update(partial: Partial<StoreState>): void {
    this.state = { ...this.state, ...partial };
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  /** Called on every keystroke; schedules a debounced check. */
  setContent(content: string): void {
    if (content === this.state.content) {
      return;
    }
    this.generation += 1;
    this.update({ content });
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    const scheduled = this.generation;
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.runCheck(scheduled);
    }, this.debounceMs);
  }

  /** Check immediately (used for the initial load). */
  checkNow(): Promise<void> {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    return this.runCheck(this.generation);
  }

  private async runCheck(generation: number): Promise<void> {
    this.update({ checking: true });
    let report: CheckReport;
    try {
      report = await this.client.check(this.state.content);
    } catch {
      if (generation >= this.appliedGeneration) {
        this.update({ checking: false, offline: true });
      }
      return;
    }
    if (generation < this.appliedGeneration || generation < this.generation) {
      // A newer edit exists or a newer response already landed.
      if (generation >= this.generation) {
        this.update({ checking: false });
      }
      return;
    }
    this.appliedGeneration = generation;
    this.update({ report, checking: false, offline: false });
  }

  /** The verdict banner text, verbatim from the latest response. */
  get verdict(): string | null {
    return this.state.report?.verdict ?? null;
  }

  canCopyResult(): boolean {
    const report = this.state.report;
    return report !== null && report.verdict === "verified" && report.isabelleTheory !== null;
  }

  /** Put the exported theory on the clipboard; only in the verified state. */
  async copyResult(): Promise<boolean> {
    const report = this.state.report;
    if (report === null || report.verdict !== "verified" || report.isabelleTheory === null) {
      return false;
    }
    await this.clipboard(report.isabelleTheory);
    return true;
  }
}
