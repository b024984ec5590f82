import { foldGutter } from "@codemirror/language";
import { setDiagnostics } from "@codemirror/lint";
import { EditorState } from "@codemirror/state";
import { EditorView, keymap, lineNumbers } from "@codemirror/view";
import { defaultKeymap, history, historyKeymap } from "@codemirror/commands";

import { CheckClient } from "./api";
import { toEditorDiagnostics } from "./decorations";
import { proofFolding } from "./folding";
import { proofHighlighting, proofLanguage, RULE_NAMES } from "./language";
import { EditorStore, type StoreState } from "./store";
import type { ExampleInfo } from "./types";
import fallbackExamples from "./examples-fallback.json";

const RULE_DESCRIPTIONS: Record<string, string> = {
  Basic: "closes a goal whose head's negation occurs in the tail",
  Imp_R: "introduction of implication",
  Imp_L: "introduction of negation of implication (two branches)",
  Dis_R: "introduction of disjunction",
  Dis_L: "introduction of negation of disjunction (two branches)",
  Con_R: "introduction of conjunction (two branches)",
  Con_L: "introduction of negation of conjunction",
  Exi_R: "introduction of existential quantifier, takes a term [t]",
  Exi_L: "introduction of negation of existential quantifier, fresh constant",
  Uni_R: "introduction of universal quantifier, fresh constant",
  Uni_L: "introduction of negation of universal quantifier, takes a term [t]",
  Extra: "drops one extra copy of a formula already in the goal",
  Ext: "reorders, weakens or contracts: every stated formula must occur in the goal",
  NegNeg: "removes a double negation at the head",
};

const START_TEXT = `Imp p p

Imp_R
  Neg p
  p
Ext
  p
  Neg p
Basic
`;

function element<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function main(): void {
  const client = new CheckClient("");
  const store = new EditorStore(client, (text) => navigator.clipboard.writeText(text));

  const root = document.getElementById("app");
  if (!root) {
    throw new Error("missing #app container");
  }

  // ---- skeleton ----
  const offlineBanner = element("div", "offline-banner", "check service unreachable — editing offline");
  offlineBanner.hidden = true;

  const editorPane = element("section", "editor-pane");
  const outputPane = element("section", "output-pane");
  const panes = element("div", "panes");
  panes.append(editorPane, outputPane);

  const toolbar = element("header", "toolbar");
  const title = element("span", "app-title", "MiniCalc proof editor");
  const helpButton = element("button", "", "Help and Example Proofs");
  const copyButton = element("button", "", "Copy Result to Clipboard");
  copyButton.disabled = true;
  const copyNote = element("span", "copy-note", "");
  toolbar.append(title, helpButton, copyButton, copyNote);

  root.append(toolbar, offlineBanner, panes);

  // ---- output pane ----
  const banner = element("div", "verdict-banner", "…");
  const diagnosticsList = element("ul", "diagnostics");
  const goalHeading = element("h2", "", "Goal");
  const goalParen = element("pre", "goal-render");
  const goalSymbolic = element("pre", "goal-render");
  const layoutHeading = element("h2", "", "Promoted layout");
  const layout = element("pre", "promoted-layout");
  outputPane.append(banner, diagnosticsList, goalHeading, goalParen, goalSymbolic, layoutHeading, layout);

  // ---- help view ----
  const helpView = element("dialog", "help-view");
  const helpTitle = element("h2", "", "How to write a proof");
  const helpText = element("p");
  helpText.textContent =
    "A proof is a goal formula followed by rule applications. Terms: " +
    "functions, constants and variables (Var 0 is bound by the innermost " +
    "quantifier). Formulas: predicates like P[Var 0], and Imp, Dis, Con, " +
    "Neg, Uni, Exi. Any layout will do; the promoted layout on the right " +
    "is the canonical one. The result can be verified in Isabelle: copy " +
    "it to the clipboard once the proof is verified.";
  const ruleHeading = element("h3", "", "The rules");
  const ruleTable = element("table", "rule-table");
  for (const rule of RULE_NAMES) {
    const row = element("tr");
    row.append(element("td", "rule-name", rule), element("td", "", RULE_DESCRIPTIONS[rule]));
    ruleTable.append(row);
  }
  const examplesHeading = element("h3", "", "Example proofs");
  const examplesList = element("ul", "examples-list");
  const closeHelp = element("button", "", "Close");
  closeHelp.addEventListener("click", () => helpView.close());
  helpView.append(helpTitle, helpText, ruleHeading, ruleTable, examplesHeading, examplesList, closeHelp);
  root.append(helpView);

  function renderExamples(examples: ExampleInfo[], note?: string): void {
    examplesList.replaceChildren();
    if (note) {
      examplesList.append(element("li", "examples-note", note));
    }
    for (const example of examples) {
      const item = element("li");
      const load = element("button", "example-load", `${example.name} — ${example.title}`);
      load.addEventListener("click", () => {
        view.dispatch({
          changes: { from: 0, to: view.state.doc.length, insert: example.source },
        });
        helpView.close();
      });
      item.append(load, element("span", "example-desc", ` ${example.description}`));
      examplesList.append(item);
    }
  }

  helpButton.addEventListener("click", () => {
    helpView.showModal();
    client
      .examples()
      .then((examples) => renderExamples(examples))
      .catch(() =>
        renderExamples(
          (fallbackExamples as { examples: ExampleInfo[] }).examples,
          "service unreachable — showing the bundled copies",
        ),
      );
  });

  copyButton.addEventListener("click", () => {
    void store.copyResult().then((copied) => {
      copyNote.textContent = copied ? "copied" : "";
      if (copied) {
        setTimeout(() => {
          copyNote.textContent = "";
        }, 1500);
      }
    });
  });

  // ---- editor ----
  const view = new EditorView({
    parent: editorPane,
    state: EditorState.create({
      doc: START_TEXT,
      extensions: [
        lineNumbers(),
        history(),
        keymap.of([...defaultKeymap, ...historyKeymap]),
        proofLanguage,
        proofHighlighting,
        proofFolding,
        foldGutter(),
        EditorView.updateListener.of((update) => {
          if (update.docChanged) {
            store.setContent(update.state.doc.toString());
          }
        }),
      ],
    }),
  });

  // ---- store -> view ----
  function render(state: StoreState): void {
    offlineBanner.hidden = !state.offline;
    const report = state.report;
    if (!report) {
      return;
    }
    banner.textContent = report.verdict;
    banner.dataset.verdict = report.verdict;

    diagnosticsList.replaceChildren(
      ...report.diagnostics.map((diag) =>
        element("li", "", `line ${diag.line}, column ${diag.col}: ${diag.message}`),
      ),
    );
    goalParen.textContent = report.renderedGoal?.parenthesized ?? "";
    goalSymbolic.textContent = report.renderedGoal?.symbolic ?? "";
    layout.textContent = report.promotedLayout ?? "";
    copyButton.disabled = !store.canCopyResult();

    // Underline exactly the spans of the latest response; stale
    // decorations never survive, since this runs per applied report.
    view.dispatch(setDiagnostics(view.state, toEditorDiagnostics(report, view.state.doc.length)));
  }

  store.subscribe(render);
  store.setContent(START_TEXT);
  void store.checkNow();
}

main();
