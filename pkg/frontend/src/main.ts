/** App shell: view switcher between the chat and the review dashboard. */

import { ApiClient } from "./api";
import { createChatView } from "./chat";
import { createManagementView } from "./management";
import "./style.css";

function apiBase(): string {
  const param = new URLSearchParams(window.location.search).get("api");
  return param ?? import.meta.env.VITE_API_BASE ?? "";
}

export function mountApp(root: HTMLElement, client: ApiClient): void {
  const nav = document.createElement("nav");
  nav.className = "topnav";
  const chatTab = document.createElement("button");
  chatTab.textContent = "Chat";
  const manageTab = document.createElement("button");
  manageTab.textContent = "Knowledge Management";
  nav.append(chatTab, manageTab);

  const outlet = document.createElement("main");

  const management = createManagementView(client);
  const chat = createChatView(client, (recordId) => {
    void showManagement(recordId);
  });

  function showChat(): void {
    chatTab.classList.add("active");
    manageTab.classList.remove("active");
    outlet.replaceChildren(chat.root);
  }

  async function showManagement(focusId?: string): Promise<void> {
    manageTab.classList.add("active");
    chatTab.classList.remove("active");
    outlet.replaceChildren(management.root);
    if (focusId) {
      await management.focusRecord(focusId);
    } else {
      await management.refresh();
    }
  }

  chatTab.addEventListener("click", showChat);
  manageTab.addEventListener("click", () => void showManagement());

  root.append(nav, outlet);
  showChat();
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  mountApp(document.getElementById("app")!, new ApiClient(apiBase()));
}
