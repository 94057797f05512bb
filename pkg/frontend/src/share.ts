/** Share-card text. Must stay byte-identical to the server's grammar:
 * line 1 "<Colon|Authored> #<first 8 seed hex digits>", line 2 one emoji
 * per non-Rejected guess (green Correct / red Incorrect), line 3
 * "Mistakes: <m>", LF separators, no trailing newline.
 */

import type { Game } from "./api.js";

export const EMOJI_CORRECT = "\u{1F7E9}";
export const EMOJI_INCORRECT = "\u{1F7E5}";

export type GuessKind = "Correct" | "Incorrect" | "Rejected";

export function shareCard(
  game: Game,
  seedHex: string,
  kinds: readonly GuessKind[],
  mistakes: number,
): string {
  const label = game === "colon" ? "Colon" : "Authored";
  const row = kinds
    .filter((kind) => kind !== "Rejected")
    .map((kind) => (kind === "Correct" ? EMOJI_CORRECT : EMOJI_INCORRECT))
    .join("");
  return `${label} #${seedHex.slice(0, 8)}\n${row}\nMistakes: ${mistakes}`;
}
