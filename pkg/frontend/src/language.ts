import { HighlightStyle, StreamLanguage, syntaxHighlighting } from "@codemirror/language";
import { tags } from "@lezer/highlight";

export const RULE_NAMES = [
  "Basic",
  "Imp_R",
  "Imp_L",
  "Dis_R",
  "Dis_L",
  "Con_R",
  "Con_L",
  "Exi_R",
  "Exi_L",
  "Uni_R",
  "Uni_L",
  "Extra",
  "Ext",
  "NegNeg",
] as const;

export const CONNECTIVES = ["Imp", "Dis", "Con", "Neg", "Uni", "Exi"] as const;

const ruleSet = new Set<string>(RULE_NAMES);
const connectiveSet = new Set<string>(CONNECTIVES);

export type TokenKind =
  | "comment"
  | "rule"
  | "connective"
  | "var"
  | "number"
  | "bracket"
  | "branch"
  | "name"
  | null;

/** Classify the token starting at the stream head; used by the editor mode. */
export function classify(word: string): TokenKind {
  if (ruleSet.has(word)) {
    return "rule";
  }
  if (connectiveSet.has(word)) {
    return "connective";
  }
  if (word === "Var") {
    return "var";
  }
  return "name";
}

interface StreamLike {
  eatSpace(): boolean;
  skipToEnd(): void;
  match(pattern: RegExp): RegExpMatchArray | boolean | null;
  next(): string | undefined | void;
  peek(): string | undefined | void;
}

/** One token step over a stream; shared by the mode and the tests. */
export function tokenStep(stream: StreamLike): TokenKind {
  if (stream.eatSpace()) {
    return null;
  }
  const head = stream.peek();
  if (head === "#") {
    stream.skipToEnd();
    return "comment";
  }
  const word = stream.match(/^[A-Za-z][A-Za-z0-9_]*/);
  if (word && word !== true) {
    return classify(word[0]);
  }
  if (stream.match(/^\d+/)) {
    return "number";
  }
  const ch = stream.next();
  if (ch === "[" || ch === "]" || ch === "(" || ch === ")" || ch === ",") {
    return "bracket";
  }
  if (ch === "+") {
    return "branch";
  }
  return null;
}

const TOKEN_TO_TAG: Record<Exclude<TokenKind, null>, string> = {
  comment: "comment",
  rule: "keyword",
  connective: "typeName",
  var: "atom",
  number: "number",
  bracket: "bracket",
  branch: "operator",
  name: "variableName",
};

export const proofLanguage = StreamLanguage.define<unknown>({
  name: "minicalc",
  token(stream) {
    const kind = tokenStep(stream);
    return kind === null ? null : TOKEN_TO_TAG[kind];
  },
});

export const proofHighlighting = syntaxHighlighting(
  HighlightStyle.define([
    { tag: tags.comment, color: "#6a737d", fontStyle: "italic" },
    { tag: tags.keyword, color: "#8f4bc2", fontWeight: "bold" },
    { tag: tags.typeName, color: "#005cc5" },
    { tag: tags.atom, color: "#d73a49" },
    { tag: tags.number, color: "#b08800" },
    { tag: tags.operator, color: "#22863a", fontWeight: "bold" },
    { tag: tags.variableName, color: "#24292e" },
  ]),
);
