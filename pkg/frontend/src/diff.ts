/** Side-by-side triple diff: model completions vs verified corrections,
 * changed slots highlighted. */

import type { TripleSlots } from "./types";

export function slotText(slot: string | null): string {
  return slot === null ? "?" : slot;
}

export function renderTripleDiff(
  leftLabel: string,
  left: TripleSlots[],
  rightLabel: string,
  right: TripleSlots[],
): HTMLTableElement {
  const table = document.createElement("table");
  table.className = "triple-diff";

  const head = table.createTHead().insertRow();
  for (const label of [leftLabel, rightLabel]) {
    const cell = document.createElement("th");
    cell.colSpan = 3;
    cell.textContent = label;
    head.appendChild(cell);
  }

  const body = table.createTBody();
  const rows = Math.max(left.length, right.length);
  for (let i = 0; i < rows; i++) {
    const row = body.insertRow();
    const a = left[i] ?? [null, null, null];
    const b = right[i] ?? [null, null, null];
    for (const [source, other, side] of [
      [a, b, "left"],
      [b, a, "right"],
    ] as const) {
      for (let slot = 0; slot < 3; slot++) {
        const cell = row.insertCell();
        cell.textContent = slotText(source[slot as 0 | 1 | 2]);
        cell.className = `diff-${side}`;
        if (source[slot as 0 | 1 | 2] !== other[slot as 0 | 1 | 2]) {
          cell.classList.add("diff-changed");
        }
      }
    }
  }
  return table;
}
