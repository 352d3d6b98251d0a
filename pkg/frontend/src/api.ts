/** Thin typed client over the documented HTTP API; no state of its own. */

import type { ApiErrorBody, AskResponse, KgStats, PendingRecord, TripleSlots } from "./types";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export class ApiClient {
  constructor(readonly baseUrl: string = "") {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let code = "http_error";
      let message = response.statusText;
      try {
        const parsed = (await response.json()) as ApiErrorBody;
        code = parsed.code ?? code;
        message = parsed.message ?? message;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, code, message);
    }
    return (await response.json()) as T;
  }

  ask(question: string): Promise<AskResponse> {
    return this.request("POST", "/api/ask", { question });
  }

  listPending(status?: string): Promise<PendingRecord[]> {
    const query = status ? `?status=${encodeURIComponent(status)}` : "";
    return this.request("GET", `/api/pending${query}`);
  }

  getPending(id: string): Promise<PendingRecord> {
    return this.request("GET", `/api/pending/${id}`);
  }

  accept(id: string): Promise<{ record: PendingRecord; outcomes: string[] }> {
    return this.request("POST", `/api/pending/${id}/accept`);
  }

  verify(id: string): Promise<PendingRecord> {
    return this.request("POST", `/api/pending/${id}/verify`);
  }

  edit(id: string, triples: TripleSlots[]): Promise<PendingRecord> {
    return this.request("POST", `/api/pending/${id}/edit`, { triples });
  }

  reject(id: string): Promise<PendingRecord> {
    return this.request("POST", `/api/pending/${id}/reject`);
  }

  stats(): Promise<KgStats> {
    return this.request("GET", "/api/kg/stats");
  }
}
