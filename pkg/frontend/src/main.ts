/** Hash router and bootstrap.
 *
 * Routes: "#/colon/<16 hex>" and "#/authored/<16 hex>" are permalinks;
 * "#/colon" and "#/authored" load today's daily puzzle and then rewrite
 * the hash to the seeded permalink so a refresh keeps the same board.
 * The bare default route offers both dailies.
 */

import { fetchDaily, fetchPuzzle, type Game, type PuzzleView } from "./api.js";
import { renderAuthored } from "./authored.js";
import { renderColon } from "./colon.js";
import { clear, el } from "./dom.js";

const SEED_RE = /^[0-9a-f]{16}$/;

export interface Route {
  game: Game;
  seedHex: string | null; // null: daily
}

export function parseHash(hash: string): Route | null {
  const parts = hash.replace(/^#\/?/, "").split("/").filter(Boolean);
  if (parts.length === 0) return null;
  const game = parts[0];
  if (game !== "colon" && game !== "authored") return null;
  if (parts.length === 1) return { game, seedHex: null };
  if (parts.length === 2 && SEED_RE.test(parts[1])) return { game, seedHex: parts[1] };
  return null;
}

function renderHome(container: HTMLElement): void {
  clear(container);
  container.append(
    el("section", { class: "home" }, [
      el("h1", { text: "pubgames" }),
      el("p", { text: "Two daily puzzles over publication metadata." }),
      el("p", {}, [
        el("a", { href: "#/colon", text: "Play today's Colon" }),
        " — reconnect four paper titles split at the colon.",
      ]),
      el("p", {}, [
        el("a", { href: "#/authored", text: "Play today's Authored" }),
        " — find three triples of papers sharing an author.",
      ]),
    ]),
  );
}

function renderView(container: HTMLElement, view: PuzzleView): void {
  if (view.game === "colon") renderColon(container, view);
  else renderAuthored(container, view);
}

export async function route(container: HTMLElement): Promise<void> {
  const parsed = parseHash(window.location.hash);
  if (!parsed) {
    renderHome(container);
    return;
  }
  clear(container);
  container.append(el("p", { class: "loading", text: "loading…" }));
  try {
    const view = parsed.seedHex
      ? await fetchPuzzle(parsed.game, parsed.seedHex)
      : await fetchDaily(parsed.game);
    if (!parsed.seedHex) {
      // refresh-safe permalink without retriggering hashchange routing
      history.replaceState(null, "", `#/${parsed.game}/${view.seed}`);
    }
    renderView(container, view);
  } catch {
    clear(container);
    const retry = el("button", { class: "retry", "data-role": "retry", text: "retry" });
    retry.addEventListener("click", () => void route(container));
    container.append(
      el("p", { class: "error", text: "could not load the puzzle — " }),
      retry,
    );
  }
}

export function mount(container: HTMLElement): void {
  window.addEventListener("hashchange", () => void route(container));
  void route(container);
}

const appRoot = typeof document !== "undefined" ? document.getElementById("app") : null;
if (appRoot) {
  mount(appRoot);
}
