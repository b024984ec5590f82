import { foldService } from "@codemirror/language";
import type { EditorState } from "@codemirror/state";
import { RULE_NAMES } from "./language";

const RULE_LINE = new RegExp(`^(${RULE_NAMES.join("|")})\\b`);

export interface FoldRange {
  from: number; // offset of the end of the rule line
  to: number; // offset of the end of the step's last block line
}

/**
 * Foldable regions, one per proof step: the indented sequent lines (and
 * "+" branch separators) following a rule-name line collapse onto it.
 */
export function computeFoldRanges(text: string): FoldRange[] {
  const lines = text.split("\n");
  const ranges: FoldRange[] = [];
  let offset = 0;
  const lineStarts: number[] = [];
  for (const line of lines) {
    lineStarts.push(offset);
    offset += line.length + 1;
  }
  for (let i = 0; i < lines.length; i++) {
    if (!RULE_LINE.test(lines[i])) {
      continue;
    }
    let last = i;
    for (let j = i + 1; j < lines.length; j++) {
      const line = lines[j];
      if (/^\s+\S/.test(line) || line.trim() === "+") {
        last = j;
      } else {
        break;
      }
    }
    if (last > i) {
      ranges.push({
        from: lineStarts[i] + lines[i].length,
        to: lineStarts[last] + lines[last].length,
      });
    }
  }
  return ranges;
}

/** CodeMirror fold service backed by computeFoldRanges. */
export const proofFolding = foldService.of(
  (state: EditorState, lineStart: number, lineEnd: number) => {
    for (const range of computeFoldRanges(state.doc.toString())) {
      if (range.from >= lineStart && range.from <= lineEnd) {
        return range;
      }
    }
    return null;
  },
);
