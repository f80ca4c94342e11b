/**
 * Browser entry point: wires the workbench state to the page controls.
 *
 * The slider is clamped to the most recently fetched attainable interval,
 * so out-of-range targets cannot be requested; every number on screen is
 * the verbatim text of a service response.
 */

import { ApiClient, SEMANTICS_KINDS, SemanticsKind } from "./api.js";
import { renderTraceChart } from "./chart.js";
import { DEMO_DOCUMENT } from "./demo.js";
import { renderGraph } from "./graph.js";
import { Workbench, WorkbenchState } from "./state.js";

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

function fmtEdge(source: string, target: string): string {
  return `(${source}, ${target})`;
}

export function startApp(): void {
  const workbench = new Workbench(new ApiClient(""));

  const semanticsSelect = el<HTMLSelectElement>("semantics");
  const topicSelect = el<HTMLSelectElement>("topic");
  const slider = el<HTMLInputElement>("target");
  const targetText = el<HTMLSpanElement>("target-value");
  const intervalLabel = el<HTMLSpanElement>("interval");
  const runButton = el<HTMLButtonElement>("run");
  const acceptButton = el<HTMLButtonElement>("accept");
  const discardButton = el<HTMLButtonElement>("discard");
  const message = el<HTMLDivElement>("message");
  const graphBox = el<HTMLDivElement>("graph");
  const strengthsBox = el<HTMLDivElement>("strengths");
  const graesBox = el<HTMLDivElement>("graes");
  const diffBox = el<HTMLDivElement>("diff");
  const chartBox = el<HTMLDivElement>("chart");
  const fileInput = el<HTMLInputElement>("file");
  const demoButton = el<HTMLButtonElement>("load-demo");

  for (const kind of SEMANTICS_KINDS) {
    const option = document.createElement("option");
    option.value = kind;
    option.textContent = kind;
    if (kind === "mlp") option.selected = true;
    semanticsSelect.appendChild(option);
  }

  function render(state: WorkbenchState): void {
    message.textContent = state.message ?? "";
    runButton.disabled = state.running || !state.topic || !state.interval;
    acceptButton.disabled = !state.pendingOutcome;
    discardButton.disabled = !state.pendingOutcome;
    semanticsSelect.disabled = state.running;
    topicSelect.disabled = state.running || !state.graph;

    if (state.graph) {
      const current = new Set(Array.from(topicSelect.options).map((o) => o.value));
      const wanted = state.graph.arguments.map((a) => a.id);
      if (wanted.length !== current.size - 1 || wanted.some((id) => !current.has(id))) {
        topicSelect.innerHTML = '<option value="">(select topic)</option>';
        for (const id of wanted) {
          const option = document.createElement("option");
          option.value = id;
          option.textContent = id;
          topicSelect.appendChild(option);
        }
      }
      topicSelect.value = state.topic ?? "";
      graphBox.innerHTML = renderGraph(state.graph, state.strengths, state.graes, state.topic);
    } else {
      graphBox.innerHTML = "<p>load a graph document to begin</p>";
    }

    if (state.interval) {
      slider.disabled = state.running;
      slider.min = state.interval.min.text;
      slider.max = state.interval.max.text;
      slider.step = "any";
      intervalLabel.textContent = `attainable: [${state.interval.min.text}, ${state.interval.max.text}]`;
      if (slider.value === "" || Number(slider.value) < state.interval.min.value || Number(slider.value) > state.interval.max.value) {
        slider.value = String((state.interval.min.value + state.interval.max.value) / 2);
      }
      targetText.textContent = slider.value;
    } else {
      slider.disabled = true;
      intervalLabel.textContent = "";
      targetText.textContent = "";
    }

    if (state.strengths) {
      const rows = [...state.strengths.strengths.entries()]
        .map(([id, strength]) => {
          const text = strength === null ? "⊥" : strength.text;
          return `<tr><td>${id}</td><td data-strength="${id}">${text}</td></tr>`;
        })
        .join("");
      strengthsBox.innerHTML = `<table><thead><tr><th>argument</th><th>strength</th></tr></thead><tbody>${rows}</tbody></table>`;
    } else {
      strengthsBox.innerHTML = "";
    }

    if (state.graes) {
      const rows = state.graes.scores
        .map(
          (row) =>
            `<tr><td>${fmtEdge(row.source, row.target)}</td><td>${row.polarity}</td>` +
            `<td>${row.weight.text}</td><td data-score="${row.source}->${row.target}">${row.score.text}</td></tr>`,
        )
        .join("");
      graesBox.innerHTML =
        `<table><thead><tr><th>edge</th><th>polarity</th><th>weight</th>` +
        `<th>attribution</th></tr></thead><tbody>${rows}</tbody></table>`;
    } else {
      graesBox.innerHTML = "";
    }

    if (state.pendingOutcome) {
      const rows = state.diff
        .map(
          (row) =>
            `<tr><td>${fmtEdge(row.source, row.target)}</td>` +
            `<td>${row.oldWeight.text}</td><td>${row.newWeight.text}</td></tr>`,
        )
        .join("");
      diffBox.innerHTML =
        `<p>proposed strength <strong data-final-strength>${state.pendingOutcome.finalStrength.text}</strong> ` +
        `after ${state.pendingOutcome.iterationsUsed} iterations ` +
        `(${state.pendingOutcome.attemptsUsed} attempt(s))</p>` +
        `<table><thead><tr><th>edge</th><th>old</th><th>new</th></tr></thead><tbody>${rows}</tbody></table>`;
    } else {
      diffBox.innerHTML = "";
    }

    chartBox.innerHTML = renderTraceChart(state.trace, state.topic ? slider.value : null);
  }

  workbench.onChange = render;

  const guard = (work: Promise<void>) =>
    work.catch((error: unknown) => {
      workbench.state.message = error instanceof Error ? error.message : String(error);
      render(workbench.state);
    });

  demoButton.addEventListener("click", () => guard(workbench.loadDocument(DEMO_DOCUMENT)));
  fileInput.addEventListener("change", () => {
    const file = fileInput.files?.[0];
    if (!file) return;
    guard(file.text().then((text) => workbench.loadDocument(text)));
  });
  semanticsSelect.addEventListener("change", () =>
    guard(workbench.selectSemantics(semanticsSelect.value as SemanticsKind)),
  );
  topicSelect.addEventListener("change", () => {
    if (topicSelect.value) guard(workbench.selectTopic(topicSelect.value));
  });
  slider.addEventListener("input", () => {
    targetText.textContent = slider.value;
  });
  runButton.addEventListener("click", () => guard(workbench.runContest(slider.value)));
  acceptButton.addEventListener("click", () => guard(workbench.accept()));
  discardButton.addEventListener("click", () => workbench.discard());

  render(workbench.state);
}

startApp();
