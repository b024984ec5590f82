import { describe, expect, it } from "vitest";

import { classify, tokenStep, type TokenKind } from "../src/language";

/** Minimal stream over one line, mirroring the editor's interface. */
class Line {
  pos = 0;
  constructor(private readonly text: string) {}

  eatSpace(): boolean {
    const start = this.pos;
    while (this.pos < this.text.length && /\s/.test(this.text[this.pos])) {
      this.pos++;
    }
    return this.pos > start;
  }

  skipToEnd(): void {
    this.pos = this.text.length;
  }

  match(pattern: RegExp): RegExpMatchArray | null {
    const hit = this.text.slice(this.pos).match(pattern);
    if (hit && hit.index === 0) {
      this.pos += hit[0].length;
      return hit;
    }
    return null;
  }

  next(): string | undefined {
    return this.pos < this.text.length ? this.text[this.pos++] : undefined;
  }

  peek(): string | undefined {
    return this.text[this.pos];
  }

  done(): boolean {
    return this.pos >= this.text.length;
  }
}

function tokensOf(line: string): Array<[string, TokenKind]> {
  const stream = new Line(line);
  const out: Array<[string, TokenKind]> = [];
  while (!stream.done()) {
    const start = stream.pos;
    const kind = tokenStep(stream);
    if (stream.pos === start) {
      stream.next();
      continue;
    }
    if (kind !== null) {
      out.push([line.slice(start, stream.pos), kind]);
    }
  }
  return out;
}

describe("token classification", () => {
  it("marks every rule name as a rule", () => {
    for (const rule of ["Basic", "Imp_R", "Uni_L", "Extra", "Ext", "NegNeg"]) {
      expect(classify(rule)).toBe("rule");
    }
  });

  it("marks connectives and Var", () => {
    expect(classify("Imp")).toBe("connective");
    expect(classify("Uni")).toBe("connective");
    expect(classify("Var")).toBe("var");
    expect(classify("p")).toBe("name");
  });

  it("tokenizes a rule line with an annotation", () => {
    expect(tokensOf("Exi_R [f[a, Var 0]]")).toEqual([
      ["Exi_R", "rule"],
      ["[", "bracket"],
      ["f", "name"],
      ["[", "bracket"],
      ["a", "name"],
      [",", "bracket"],
      ["Var", "var"],
      ["0", "number"],
      ["]", "bracket"],
      ["]", "bracket"],
    ]);
  });

  it("treats # as a comment to end of line", () => {
    expect(tokensOf("# Imp p p")).toEqual([["# Imp p p", "comment"]]);
  });

  it("marks the branch separator", () => {
    expect(tokensOf("+")).toEqual([["+", "branch"]]);
  });
});
