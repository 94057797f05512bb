/** Authored board: a 3x3 grid of paper titles hiding three author triples.
 *
 * Select exactly three cells and submit. A correct triple collapses into
 * a labeled group showing the revealed author; misses unlock captions
 * under every unsolved cell (venue after the first, venue + year after
 * the second).
 */

import { submitGuess, type AuthoredView } from "./api.js";
import { clear, el } from "./dom.js";
import { showCompletion } from "./panel.js";
import { ClientSession } from "./session.js";

interface Cell {
  button: HTMLButtonElement;
  caption: HTMLElement;
  wrapper: HTMLElement;
  solved: boolean;
}

export function renderAuthored(container: HTMLElement, view: AuthoredView): ClientSession {
  const session = new ClientSession("authored", view.seed);
  const startedAt = performance.now();
  const selected = new Set<number>();
  const cells: Cell[] = [];

  clear(container);
  const board = el("section", { class: "authored-board" });
  board.append(el("h2", { text: "Authored — find the three author triples" }));

  const groupsPanel = el("div", { class: "solved-groups", "data-role": "groups" });
  const grid = el("div", { class: "grid", "data-role": "grid" });
  const status = el("p", { class: "status", "data-role": "status", text: "select three papers" });
  const mistakesLine = el("p", { class: "mistakes", "data-role": "mistakes", text: "Mistakes: 0" });
  const submitButton = el("button", {
    class: "submit", "data-role": "submit", text: "Group them", disabled: "",
  });

  function refreshControls(): void {
    cells.forEach((cell, index) => {
      cell.button.disabled = cell.solved || session.pending;
      cell.button.setAttribute("aria-pressed", String(selected.has(index)));
    });
    submitButton.disabled = session.pending || selected.size !== 3;
    mistakesLine.textContent = `Mistakes: ${session.mistakes}`;
  }

  function refreshCaptions(): void {
    cells.forEach((cell, index) => {
      if (cell.solved || !session.venues) return;
      const venue = session.venues[index];
      cell.caption.textContent = session.years
        ? `${venue} · ${session.years[index]}`
        : venue;
    });
  }

  view.grid.forEach((title, index) => {
    const button = el("button", {
      class: "piece cell", "data-role": "cell", "data-index": String(index),
      text: title,
    });
    const caption = el("div", { class: "caption", "data-role": "caption", "data-index": String(index) });
    const wrapper = el("div", { class: "cell-wrapper" }, [button, caption]);
    button.addEventListener("click", () => {
      if (selected.has(index)) selected.delete(index);
      else if (selected.size < 3) selected.add(index);
      refreshControls();
    });
    cells.push({ button, caption, wrapper, solved: false });
    grid.append(wrapper);
  });

  function collapseGroup(indexes: number[], author: string): void {
    const titles = indexes.map((i) => view.grid[i]);
    for (const index of indexes) {
      const cell = cells[index];
      cell.solved = true;
      cell.wrapper.remove();
    }
    const group = el("div", { class: "group", "data-role": "solved-group" }, [
      el("div", { class: "group-author", text: author }),
      el("div", { class: "group-titles", text: titles.join(" • ") }),
    ]);
    groupsPanel.append(group);
  }

  async function submitCells(guess: number[]): Promise<void> {
    session.pending = true;
    refreshControls();
    try {
      const verdict = await submitGuess({
        game: "authored",
        seed_hex: session.seedHex,
        mistakes_so_far: session.mistakes,
        solved_so_far: session.solvedCount,
        cells: guess,
      });
      session.pending = false;
      session.record(verdict);
      if (verdict.kind === "Correct") {
        collapseGroup(guess, verdict.author ?? "?");
        status.textContent = `correct: ${verdict.author}`;
      } else if (verdict.kind === "Incorrect") {
        status.textContent = "no shared author — try again";
        refreshCaptions();
      } else {
        status.textContent = `rejected: ${verdict.reason ?? "invalid guess"}`;
      }
      selected.clear();
      refreshControls();
      if (session.completed) {
        void showCompletion(board, session, startedAt);
      }
    } catch {
      session.pending = false;
      refreshControls();
      status.textContent = "network problem — ";
      const retry = el("button", { class: "retry", "data-role": "retry", text: "retry" });
      retry.addEventListener("click", () => {
        status.textContent = "retrying…";
        void submitCells(guess);
      });
      status.append(retry);
    }
  }

  submitButton.addEventListener("click", () => {
    if (selected.size === 3) {
      void submitCells([...selected].sort((a, b) => a - b));
    }
  });

  board.append(groupsPanel, grid, submitButton, status, mistakesLine);
  container.append(board);
  refreshControls();
  return session;
}
