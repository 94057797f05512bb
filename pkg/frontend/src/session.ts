/** Client-held game session.
 *
 * Mirrors the server's game-state semantics: mistakes count Incorrect
 * verdicts only, solved pieces never unlock, hints arrive once each.
 * The counters sent with guesses (mistakes_so_far / solved_so_far) are
 * exactly these local values, which is what keeps the stateless server
 * and the client in agreement.
 */

import type { Game, HintPayload, Verdict } from "./api.js";
import { shareCard, type GuessKind } from "./share.js";

export const PIECES_REQUIRED: Record<Game, number> = { colon: 4, authored: 3 };

export class ClientSession {
  readonly kinds: GuessKind[] = [];
  mistakes = 0;
  solvedCount = 0;
  venues: string[] | null = null;
  years: number[] | null = null;
  /** guess submission in flight; at most one at a time */
  pending = false;

  constructor(readonly game: Game, readonly seedHex: string) {}

  get completed(): boolean {
    return this.solvedCount >= PIECES_REQUIRED[this.game];
  }

  /** Fold one verdict into the session. Returns the verdict unchanged. */
  record(verdict: Verdict): Verdict {
    this.kinds.push(verdict.kind);
    if (verdict.kind === "Correct") {
      this.solvedCount += 1;
    } else if (verdict.kind === "Incorrect") {
      this.mistakes += 1;
      this.absorbHints(verdict.newly_revealed);
    }
    return verdict;
  }

  private absorbHints(payload: HintPayload | undefined): void {
    if (!payload) return;
    if (payload.venues) this.venues = payload.venues;
    if (payload.years) this.years = payload.years;
  }

  shareText(): string {
    return shareCard(this.game, this.seedHex, this.kinds, this.mistakes);
  }
}
