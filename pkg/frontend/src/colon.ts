/** Colon board: four fixed prefixes, four shuffled suffixes.
 *
 * Pick one of each and submit; correct pairs lock in place. Locked
 * pieces are unclickable, so the server never sees an already-locked
 * guess from this client.
 */

import { submitGuess, type ColonView } from "./api.js";
import { clear, el } from "./dom.js";
import { showCompletion } from "./panel.js";
import { ClientSession } from "./session.js";

export function renderColon(container: HTMLElement, view: ColonView): ClientSession {
  const session = new ClientSession("colon", view.seed);
  const startedAt = performance.now();

  let selectedPrefix: number | null = null;
  let selectedSuffix: number | null = null;
  const lockedPrefixes = new Set<number>();
  const lockedSuffixes = new Set<number>();

  clear(container);
  const board = el("section", { class: "colon-board" });
  board.append(el("h2", { text: "Colon — reconnect the split titles" }));

  const status = el("p", { class: "status", "data-role": "status", text: "pick a prefix and a suffix" });
  const mistakesLine = el("p", { class: "mistakes", "data-role": "mistakes", text: "Mistakes: 0" });

  const prefixColumn = el("div", { class: "column prefixes" });
  const suffixColumn = el("div", { class: "column suffixes" });
  const prefixButtons: HTMLButtonElement[] = [];
  const suffixButtons: HTMLButtonElement[] = [];

  const submitButton = el("button", {
    class: "submit", "data-role": "submit", text: "Connect", disabled: "",
  });

  function refreshControls(): void {
    prefixButtons.forEach((button, index) => {
      button.disabled = lockedPrefixes.has(index) || session.pending;
      button.setAttribute("aria-pressed", String(selectedPrefix === index));
    });
    suffixButtons.forEach((button, index) => {
      button.disabled = lockedSuffixes.has(index) || session.pending;
      button.setAttribute("aria-pressed", String(selectedSuffix === index));
    });
    submitButton.disabled =
      session.pending || selectedPrefix === null || selectedSuffix === null;
    mistakesLine.textContent = `Mistakes: ${session.mistakes}`;
  }

  view.prefixes.forEach((prefix, index) => {
    const button = el("button", {
      class: "piece prefix", "data-role": "prefix", "data-index": String(index),
      text: `${prefix}:`,
    });
    button.addEventListener("click", () => {
      selectedPrefix = selectedPrefix === index ? null : index;
      refreshControls();
    });
    prefixButtons.push(button);
    prefixColumn.append(button);
  });

  view.suffixes.forEach((suffix, index) => {
    const button = el("button", {
      class: "piece suffix", "data-role": "suffix", "data-index": String(index),
      text: suffix,
    });
    button.addEventListener("click", () => {
      selectedSuffix = selectedSuffix === index ? null : index;
      refreshControls();
    });
    suffixButtons.push(button);
    suffixColumn.append(button);
  });

  async function submitPair(prefixItem: number, suffixSlot: number): Promise<void> {
    session.pending = true;
    refreshControls();
    try {
      const verdict = await submitGuess({
        game: "colon",
        seed_hex: session.seedHex,
        mistakes_so_far: session.mistakes,
        solved_so_far: session.solvedCount,
        prefix_item: prefixItem,
        suffix_display_slot: suffixSlot,
      });
      session.pending = false;
      session.record(verdict);
      if (verdict.kind === "Correct") {
        lockedPrefixes.add(prefixItem);
        lockedSuffixes.add(suffixSlot);
        prefixButtons[prefixItem].classList.add("locked");
        suffixButtons[suffixSlot].classList.add("locked");
        status.textContent = "correct!";
      } else if (verdict.kind === "Incorrect") {
        status.textContent = "not a pair — try again";
      } else {
        status.textContent = `rejected: ${verdict.reason ?? "invalid guess"}`;
      }
      selectedPrefix = null;
      selectedSuffix = null;
      refreshControls();
      if (session.completed) {
        void showCompletion(board, session, startedAt);
      }
    } catch {
      // keep the selection; offer a retry that resubmits the same pair
      session.pending = false;
      refreshControls();
      status.textContent = "network problem — ";
      const retry = el("button", { class: "retry", "data-role": "retry", text: "retry" });
      retry.addEventListener("click", () => {
        status.textContent = "retrying…";
        void submitPair(prefixItem, suffixSlot);
      });
      status.append(retry);
    }
  }

  submitButton.addEventListener("click", () => {
    if (selectedPrefix !== null && selectedSuffix !== null) {
      void submitPair(selectedPrefix, selectedSuffix);
    }
  });

  board.append(
    el("div", { class: "columns" }, [prefixColumn, suffixColumn]),
    submitButton,
    status,
    mistakesLine,
  );
  container.append(board);
  refreshControls();
  return session;
}
