/** Typed client for the pubgames HTTP API. */

export type Game = "colon" | "authored";

export interface ColonView {
  game: "colon";
  seed: string;
  prefixes: string[];
  suffixes: string[];
}

export interface AuthoredView {
  game: "authored";
  seed: string;
  grid: string[];
}

export type PuzzleView = ColonView | AuthoredView;

export interface HintPayload {
  venues?: string[];
  years?: number[];
}

export interface Verdict {
  kind: "Correct" | "Incorrect" | "Rejected";
  completed: boolean;
  newly_revealed?: HintPayload;
  author?: string;
  reason?: string;
}

export interface RevealRecord {
  title: string;
  authors: string[];
  year: number;
  venue: string;
  doi?: string;
  url?: string;
}

export interface ColonReveal {
  game: "colon";
  papers: RevealRecord[];
}

export interface AuthoredReveal {
  game: "authored";
  groups: { author: string; papers: RevealRecord[] }[];
}

export interface ColonGuessBody {
  game: "colon";
  seed_hex: string;
  mistakes_so_far: number;
  solved_so_far: number;
  prefix_item: number;
  suffix_display_slot: number;
}

export interface AuthoredGuessBody {
  game: "authored";
  seed_hex: string;
  mistakes_so_far: number;
  solved_so_far: number;
  cells: number[];
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

/** Empty in the browser (same-origin); tests point it at a live server. */
let apiBase = "";

export function setApiBase(base: string): void {
  apiBase = base.replace(/\/$/, "");
}

async function getJson<T>(path: string): Promise<T> {
  const resp = await fetch(apiBase + path);
  if (!resp.ok) {
    throw new ApiError(resp.status, `GET ${path} -> ${resp.status}`);
  }
  return resp.json() as Promise<T>;
}

export function fetchDaily(game: Game, date?: string): Promise<PuzzleView> {
  const query = date ? `?date=${encodeURIComponent(date)}` : "";
  return getJson(`/api/v1/puzzle/${game}/daily${query}`);
}

export function fetchPuzzle(game: Game, seedHex: string): Promise<PuzzleView> {
  return getJson(`/api/v1/puzzle/${game}?seed=${encodeURIComponent(seedHex)}`);
}

export function fetchReveal(game: "colon", seedHex: string): Promise<ColonReveal>;
export function fetchReveal(game: "authored", seedHex: string): Promise<AuthoredReveal>;
export function fetchReveal(game: Game, seedHex: string): Promise<ColonReveal | AuthoredReveal> {
  return getJson(`/api/v1/reveal?game=${game}&seed_hex=${encodeURIComponent(seedHex)}`);
}

/** 422 still carries a Verdict body (Rejected); other failures throw. */
export async function submitGuess(body: ColonGuessBody | AuthoredGuessBody): Promise<Verdict> {
  const resp = await fetch(`${apiBase}/api/v1/guess`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  if (resp.status !== 200 && resp.status !== 422) {
    throw new ApiError(resp.status, `POST /api/v1/guess -> ${resp.status}`);
  }
  return resp.json() as Promise<Verdict>;
}

export async function postResult(record: {
  game: Game;
  seed_hex: string;
  mistakes: number;
  duration_ms?: number;
}): Promise<void> {
  await fetch(`${apiBase}/api/v1/result`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(record),
  });
}
