/** Client-side mirror of the review queue's state machine.
 *
 * Buttons are enabled exactly for the legal transitions; the server remains
 * the authority and a 409 still refreshes the row.
 */

import type { PendingStatus } from "./types";

export type QueueAction = "verify" | "edit" | "accept" | "reject";

export const ALL_ACTIONS: readonly QueueAction[] = ["verify", "edit", "accept", "reject"];

const LEGAL: Record<PendingStatus, readonly QueueAction[]> = {
  pending: ["verify", "edit", "accept", "reject"],
  verified: ["edit", "accept", "reject"],
  edited: ["accept", "reject"],
  accepted: [],
  rejected: [],
};

export function legalActions(status: PendingStatus): readonly QueueAction[] {
  return LEGAL[status];
}

export function isLegal(status: PendingStatus, action: QueueAction): boolean {
  return LEGAL[status].includes(action);
}
