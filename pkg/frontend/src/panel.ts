/** Completion panel: share card plus post-solve paper links. */

import { fetchReveal, postResult, type Game, type RevealRecord } from "./api.js";
import { el } from "./dom.js";
import type { ClientSession } from "./session.js";

function recordLine(record: RevealRecord): HTMLElement {
  const item = el("li", { class: "reveal-paper" }, [
    el("span", { class: "reveal-title", text: record.title }),
    ` — ${record.authors.join(", ")} (${record.venue} ${record.year})`,
  ]);
  const link = record.doi ? `https://doi.org/${record.doi}` : record.url;
  if (link) {
    item.append(" ");
    item.append(el("a", { href: link, target: "_blank", rel: "noopener", text: "[paper]" }));
  }
  return item;
}

export async function showCompletion(
  container: HTMLElement,
  session: ClientSession,
  startedAt: number,
): Promise<void> {
  const card = session.shareText();
  const panel = el("section", { class: "completion", "data-role": "completion" });
  panel.append(el("h2", { text: "Solved!" }));
  panel.append(el("pre", { class: "share-card", "data-role": "share-card", text: card }));

  const copyButton = el("button", { class: "copy", text: "Copy result" });
  const copyStatus = el("span", { class: "copy-status", "data-role": "copy-status" });
  copyButton.addEventListener("click", async () => {
    try {
      await navigator.clipboard.writeText(card);
      copyStatus.textContent = "copied!";
    } catch {
      copyStatus.textContent = "clipboard unavailable — select the text above";
    }
  });
  panel.append(el("div", {}, [copyButton, " ", copyStatus]));

  container.append(panel);

  void postResult({
    game: session.game,
    seed_hex: session.seedHex,
    mistakes: session.mistakes,
    duration_ms: Math.max(0, Math.round(performance.now() - startedAt)),
  }).catch(() => undefined); // telemetry only, never disturb the player

  try {
    const list = el("ul", { class: "reveal-list", "data-role": "reveal" });
    if (session.game === "colon") {
      const revealed = await fetchReveal("colon", session.seedHex);
      for (const record of revealed.papers) list.append(recordLine(record));
    } else {
      const revealed = await fetchReveal("authored", session.seedHex);
      for (const group of revealed.groups) {
        list.append(el("li", { class: "reveal-group", text: group.author }));
        for (const record of group.papers) list.append(recordLine(record));
      }
    }
    panel.append(el("h3", { text: "The papers" }));
    panel.append(list);
  } catch {
    panel.append(el("p", { class: "error", text: "could not load paper details" }));
  }
}
