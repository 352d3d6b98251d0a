/** Wire types mirroring the service's response bodies. */

export type TraceStepType = "thought" | "action" | "observation" | "final";

export interface TraceStep {
  type: TraceStepType;
  text: string;
  tool: string | null;
}

export interface AskResponse {
  trace_id: string;
  route: "kg_hit" | "kg_miss" | "direct_only";
  final_answer: string;
  pending_ids: string[];
  steps: TraceStep[];
}

/** [subject, predicate, object]; null marks an unknown slot. */
export type TripleSlots = [string | null, string | null, string | null];

export interface Evidence {
  doc_id: string;
  chunk_index: number;
  score: number;
  text: string;
}

export interface HistoryEntry {
  action: string;
  actor: string;
  ts: string;
}

export type PendingStatus = "pending" | "verified" | "edited" | "accepted" | "rejected";

export interface PendingRecord {
  id: string;
  question: string;
  incomplete: TripleSlots[];
  completed: TripleSlots[];
  corrected: TripleSlots[] | null;
  edited: TripleSlots[] | null;
  evidence: Evidence[];
  status: PendingStatus;
  history: HistoryEntry[];
  created_at: string;
  outcomes: string[];
}

export interface KgStats {
  entities: number;
  edges: number;
  attributes: number;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  trace?: { steps: TraceStep[] } | null;
}
