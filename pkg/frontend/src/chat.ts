/** QA chat: submit a question, render the answer card with a route badge and
 * a collapsible trace. Miss cards link to the pending record they created. */

import { ApiClient, ApiError } from "./api";
import { renderTrace } from "./traceView";
import type { AskResponse } from "./types";

export const ROUTE_BADGES: Record<AskResponse["route"], string> = {
  kg_hit: "KG",
  kg_miss: "Model knowledge",
  direct_only: "Direct",
};

export interface ChatView {
  root: HTMLElement;
}

export function createChatView(
  client: ApiClient,
  onViewPending: (recordId: string) => void,
): ChatView {
  const root = document.createElement("section");
  root.className = "chat-view";

  const history = document.createElement("div");
  history.className = "chat-history";
  root.appendChild(history);

  const form = document.createElement("form");
  form.className = "chat-form";
  const input = document.createElement("input");
  input.type = "text";
  input.placeholder = "Ask a knowledge question…";
  input.className = "chat-input";
  const submit = document.createElement("button");
  submit.type = "submit";
  submit.textContent = "Ask";
  submit.disabled = true;
  form.append(input, submit);
  root.appendChild(form);

  input.addEventListener("input", () => {
    submit.disabled = input.value.trim() === "";
  });

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const question = input.value.trim();
    if (!question) {
      return; // disabled button mirrors this; no request on empty input
    }
    void submitQuestion(question);
  });

  async function submitQuestion(question: string): Promise<void> {
    submit.disabled = true;
    try {
      const response = await client.ask(question);
      history.appendChild(renderAnswerCard(question, response, onViewPending));
      input.value = "";
    } catch (error) {
      // input kept as-is so the user can retry
      history.appendChild(renderErrorCard(question, error));
    } finally {
      submit.disabled = input.value.trim() === "";
    }
  }

  return { root };
}

export function renderAnswerCard(
  question: string,
  response: AskResponse,
  onViewPending: (recordId: string) => void,
): HTMLElement {
  const card = document.createElement("article");
  card.className = "answer-card";
  card.dataset.route = response.route;

  const header = document.createElement("header");
  const q = document.createElement("span");
  q.className = "card-question";
  q.textContent = question;
  const badge = document.createElement("span");
  badge.className = `route-badge route-${response.route}`;
  badge.textContent = ROUTE_BADGES[response.route];
  header.append(q, badge);
  card.appendChild(header);

  const answer = document.createElement("p");
  answer.className = "card-answer";
  answer.textContent = response.final_answer;
  card.appendChild(answer);

  card.appendChild(renderTrace(response.steps));

  for (const pendingId of response.pending_ids) {
    const link = document.createElement("a");
    link.href = "#";
    link.className = "pending-link";
    link.textContent = `View pending ${pendingId}`;
    link.addEventListener("click", (event) => {
      event.preventDefault();
      onViewPending(pendingId);
    });
    card.appendChild(link);
  }
  return card;
}

function renderErrorCard(question: string, error: unknown): HTMLElement {
  const card = document.createElement("article");
  card.className = "answer-card error-card";
  const title = document.createElement("p");
  title.textContent = question;
  card.appendChild(title);
  const message = document.createElement("p");
  message.className = "error-message";
  if (error instanceof ApiError) {
    message.textContent = `${error.code}: ${error.message}`;
  } else {
    message.textContent = String(error);
  }
  card.appendChild(message);
  return card;
}
