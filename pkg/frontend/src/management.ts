/** Knowledge-management dashboard: review pending records, trigger
 * verification, inspect evidence, edit, accept, or reject.
 *
 * No optimistic updates: every action re-renders its row from the server's
 * response, and conflicts (409) refetch the authoritative record.
 */

import { ApiClient, ApiError } from "./api";
import { renderTripleDiff, slotText } from "./diff";
import { legalActions, type QueueAction } from "./transitions";
import type { PendingRecord, PendingStatus, TripleSlots } from "./types";

const FILTERS: readonly (PendingStatus | "all")[] = [
  "all",
  "pending",
  "verified",
  "edited",
  "accepted",
  "rejected",
];

export interface ManagementView {
  root: HTMLElement;
  refresh(): Promise<void>;
  focusRecord(id: string): Promise<void>;
}

export function createManagementView(client: ApiClient): ManagementView {
  const root = document.createElement("section");
  root.className = "management-view";

  const toolbar = document.createElement("div");
  toolbar.className = "toolbar";
  const filter = document.createElement("select");
  filter.className = "status-filter";
  for (const status of FILTERS) {
    const option = document.createElement("option");
    option.value = status;
    option.textContent = status;
    filter.appendChild(option);
  }
  const refreshButton = document.createElement("button");
  refreshButton.textContent = "Refresh";
  toolbar.append(filter, refreshButton);
  root.appendChild(toolbar);

  const toast = document.createElement("div");
  toast.className = "toast";
  toast.hidden = true;
  root.appendChild(toast);

  const list = document.createElement("div");
  list.className = "pending-list";
  root.appendChild(list);

  function showToast(message: string): void {
    toast.textContent = message;
    toast.hidden = false;
  }

  async function refresh(): Promise<void> {
    toast.hidden = true;
    const status = filter.value === "all" ? undefined : filter.value;
    let records: PendingRecord[];
    try {
      records = await client.listPending(status);
    } catch (error) {
      showToast(error instanceof ApiError ? `${error.code}: ${error.message}` : String(error));
      return;
    }
    list.replaceChildren();
    if (records.length === 0) {
      const empty = document.createElement("p");
      empty.className = "empty";
      empty.textContent = "No records.";
      list.appendChild(empty);
      return;
    }
    for (const record of records) {
      list.appendChild(renderRow(record));
    }
  }

  function replaceRow(previous: HTMLElement, record: PendingRecord, expand = true): void {
    const next = renderRow(record, expand);
    previous.replaceWith(next);
  }

  async function refetchRow(row: HTMLElement, id: string): Promise<void> {
    try {
      replaceRow(row, await client.getPending(id));
    } catch {
      await refresh();
    }
  }

  function renderRow(record: PendingRecord, expand = false): HTMLElement {
    const row = document.createElement("article");
    row.className = "pending-row";
    row.dataset.recordId = record.id;
    row.dataset.status = record.status;

    const header = document.createElement("header");
    const idChip = document.createElement("span");
    idChip.className = "record-id";
    idChip.textContent = record.id;
    const statusChip = document.createElement("span");
    statusChip.className = `status-chip status-${record.status}`;
    statusChip.textContent = record.status;
    const question = document.createElement("span");
    question.className = "record-question";
    question.textContent = record.question;
    header.append(idChip, statusChip, question);
    row.appendChild(header);

    const details = document.createElement("details");
    details.className = "record-details";
    details.open = expand;
    const summary = document.createElement("summary");
    summary.textContent = "Details";
    details.appendChild(summary);

    const gaps = document.createElement("p");
    gaps.className = "record-gaps";
    gaps.textContent =
      "Missing: " +
      record.incomplete.map((t) => `(${t.map(slotText).join("; ")})`).join("  ");
    details.appendChild(gaps);

    if (record.corrected) {
      details.appendChild(
        renderTripleDiff("Model completion", record.completed, "Verified correction", record.corrected),
      );
    } else if (record.edited) {
      details.appendChild(
        renderTripleDiff("Model completion", record.completed, "Manual edit", record.edited),
      );
    } else {
      const completed = document.createElement("p");
      completed.className = "record-completed";
      completed.textContent =
        "Completed: " + record.completed.map((t) => `(${t.map(slotText).join("; ")})`).join("  ");
      details.appendChild(completed);
    }

    if (record.evidence.length > 0) {
      const panel = document.createElement("details");
      panel.className = "evidence-panel";
      panel.open = expand;
      const evidenceSummary = document.createElement("summary");
      evidenceSummary.textContent = `Evidence (${record.evidence.length} documents)`;
      panel.appendChild(evidenceSummary);
      const items = document.createElement("ol");
      items.className = "evidence-list";
      for (const item of record.evidence) {
        const li = document.createElement("li");
        li.className = "evidence-item";
        const meta = document.createElement("span");
        meta.className = "evidence-meta";
        meta.textContent = `${item.doc_id}#${item.chunk_index} · ${item.score.toFixed(3)}`;
        const text = document.createElement("p");
        text.className = "evidence-text";
        text.textContent = item.text;
        li.append(meta, text);
        items.appendChild(li);
      }
      panel.appendChild(items);
      details.appendChild(panel);
    }

    row.appendChild(details);
    row.appendChild(renderActions(record, row));
    return row;
  }

  function renderActions(record: PendingRecord, row: HTMLElement): HTMLElement {
    const bar = document.createElement("div");
    bar.className = "actions";
    const enabled = legalActions(record.status);
    for (const action of ["verify", "edit", "accept", "reject"] as const) {
      const button = document.createElement("button");
      button.textContent = action;
      button.dataset.action = action;
      button.disabled = !enabled.includes(action);
      button.addEventListener("click", () => void runAction(action, record, row));
      bar.appendChild(button);
    }
    return bar;
  }

  async function runAction(action: QueueAction, record: PendingRecord, row: HTMLElement): Promise<void> {
    if (action === "edit") {
      openEditDialog(record, row);
      return;
    }
    try {
      if (action === "verify") {
        replaceRow(row, await client.verify(record.id));
      } else if (action === "accept") {
        const result = await client.accept(record.id);
        replaceRow(row, result.record);
      } else {
        replaceRow(row, await client.reject(record.id));
      }
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        showToast(`${record.id} already finalized`);
        await refetchRow(row, record.id);
      } else if (error instanceof ApiError) {
        showToast(`${error.code}: ${error.message}`);
      } else {
        showToast(String(error));
      }
    }
  }

  function openEditDialog(record: PendingRecord, row: HTMLElement): void {
    const existing = row.querySelector(".edit-dialog");
    if (existing) {
      existing.remove();
      return;
    }
    const dialog = document.createElement("form");
    dialog.className = "edit-dialog";
    const base = record.corrected ?? record.edited ?? record.completed;
    const inputs: HTMLInputElement[][] = [];
    for (const triple of base) {
      const line = document.createElement("div");
      line.className = "edit-line";
      const fields: HTMLInputElement[] = [];
      triple.forEach((slot, i) => {
        const field = document.createElement("input");
        field.value = slotText(slot);
        field.dataset.slot = String(i);
        fields.push(field);
        line.appendChild(field);
      });
      inputs.push(fields);
      dialog.appendChild(line);
    }
    const problem = document.createElement("p");
    problem.className = "edit-problem";
    problem.hidden = true;
    dialog.appendChild(problem);
    const save = document.createElement("button");
    save.type = "submit";
    save.textContent = "Save";
    dialog.appendChild(save);

    dialog.addEventListener("submit", (event) => {
      event.preventDefault();
      const triples: TripleSlots[] = [];
      for (const fields of inputs) {
        const slots = fields.map((f) => f.value.trim());
        // client-side mirror of the server's incomplete-triple rejection
        if (slots.some((s) => s === "?" || s === "")) {
          problem.textContent = "Every slot must be filled in (no ? placeholders).";
          problem.hidden = false;
          return;
        }
        triples.push(slots as unknown as TripleSlots);
      }
      void submitEdit(triples);
    });

    async function submitEdit(triples: TripleSlots[]): Promise<void> {
      try {
        replaceRow(row, await client.edit(record.id, triples));
      } catch (error) {
        if (error instanceof ApiError && error.status === 409) {
          showToast(`${record.id} already finalized`);
          await refetchRow(row, record.id);
        } else if (error instanceof ApiError) {
          problem.textContent = `${error.code}: ${error.message}`;
          problem.hidden = false;
        } else {
          problem.textContent = String(error);
          problem.hidden = false;
        }
      }
    }

    row.appendChild(dialog);
  }

  filter.addEventListener("change", () => void refresh());
  refreshButton.addEventListener("click", () => void refresh());

  async function focusRecord(id: string): Promise<void> {
    filter.value = "all";
    await refresh();
    const row = list.querySelector<HTMLElement>(`[data-record-id="${id}"]`);
    if (row) {
      row.querySelector<HTMLDetailsElement>(".record-details")!.open = true;
      row.scrollIntoView?.({ block: "center" });
    }
  }

  return { root, refresh, focusRecord };
}
