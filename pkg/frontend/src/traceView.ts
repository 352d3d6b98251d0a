/** Collapsible Thought/Action/Observation rendering.
 *
 * Step records from the API are rendered verbatim: no reordering, no
 * synthesis, text shown exactly as returned.
 */

import type { TraceStep } from "./types";

const STEP_LABELS: Record<TraceStep["type"], string> = {
  thought: "Thought",
  action: "Action",
  observation: "Observation",
  final: "Answer",
};

export function renderTrace(steps: TraceStep[]): HTMLDetailsElement {
  const details = document.createElement("details");
  details.className = "trace";
  // collapsed by default; the summary is the only toggle
  const summary = document.createElement("summary");
  summary.textContent = `Trace (${steps.length} steps)`;
  details.appendChild(summary);

  const list = document.createElement("ol");
  list.className = "trace-steps";
  for (const step of steps) {
    const item = document.createElement("li");
    item.className = `trace-step trace-${step.type}`;

    const label = document.createElement("span");
    label.className = "trace-label";
    label.textContent =
      step.type === "action" && step.tool ? `${STEP_LABELS.action}[${step.tool}]` : STEP_LABELS[step.type];
    item.appendChild(label);

    const text = document.createElement("pre");
    text.className = "trace-text";
    text.textContent = step.text;
    item.appendChild(text);

    list.appendChild(item);
  }
  details.appendChild(list);
  return details;
}
