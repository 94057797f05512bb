"""Play state on top of generated puzzles.

GameState is client-held data: the service never stores it, so every
mutation here also has a stateless twin that trusts caller-reported
counters (mistakes_so_far / solved_so_far). Guesses yield one of three
verdict kinds: Correct locks a piece, Incorrect costs a mistake and may
unlock a hint (Authored reveals all venues after the first miss and all
years after the second), Rejected is a no-op for malformed or already
locked input.

The share card is a pure function of the guess log:

    <Colon|Authored> #<first 8 seed hex digits>
    <one emoji per non-Rejected guess>     (green Correct / red Incorrect)
    Mistakes: <m>
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .authored import AuthoredPuzzle
from .colon import ColonPuzzle
from .corpus import Corpus, PaperRecord
from .errors import BadInput, NotCompleted
from .rng import seed_from_hex, seed_to_hex

EMOJI_CORRECT = "\U0001f7e9"    # green square
EMOJI_INCORRECT = "\U0001f7e5"  # red square

PIECES_REQUIRED = {"colon": 4, "authored": 3}
MAX_HINT_LEVEL = 2


@dataclass(frozen=True)
class Verdict:
    kind: str                          # Correct | Incorrect | Rejected
    completed: bool = False
    newly_revealed: dict | None = None  # {"venues": [...]} or {"years": [...]}
    author: str | None = None           # Authored: target author of a solved group
    reason: str | None = None            # Rejected: what was wrong with the guess

    def to_jsonable(self) -> dict:
        out: dict = {"kind": self.kind, "completed": self.completed}
        if self.newly_revealed is not None:
            out["newly_revealed"] = self.newly_revealed
        if self.author is not None:
            out["author"] = self.author
        if self.reason is not None:
            out["reason"] = self.reason
        return out

    @classmethod
    def from_jsonable(cls, data: dict) -> "Verdict":
        return cls(
            kind=data["kind"],
            completed=data["completed"],
            newly_revealed=data.get("newly_revealed"),
            author=data.get("author"),
            reason=data.get("reason"),
        )


@dataclass
class GameState:
    """One play session. solved holds (item, slot) pairs for Colon and
    group indices for Authored; locked pieces never unlock."""

    game: str
    seed: int
    guesses: list[tuple[dict, Verdict]] = field(default_factory=list)
    solved: set = field(default_factory=set)
    mistakes: int = 0
    hint_level: int = 0

    def to_jsonable(self) -> dict:
        return {
            "game": self.game,
            "seed": seed_to_hex(self.seed),
            "guesses": [
                {"guess": payload, "verdict": verdict.to_jsonable()}
                for payload, verdict in self.guesses
            ],
            "solved": sorted(
                list(piece) if isinstance(piece, tuple) else piece
                for piece in self.solved
            ),
            "mistakes": self.mistakes,
            "hint_level": self.hint_level,
        }

    @classmethod
    def from_jsonable(cls, data: dict) -> "GameState":
        solved = {
            tuple(piece) if isinstance(piece, list) else piece
            for piece in data["solved"]
        }
        return cls(
            game=data["game"],
            seed=seed_from_hex(data["seed"]),
            guesses=[
                (entry["guess"], Verdict.from_jsonable(entry["verdict"]))
                for entry in data["guesses"]
            ],
            solved=solved,
            mistakes=data["mistakes"],
            hint_level=data["hint_level"],
        )


def new_game_state(game: str, seed: int) -> GameState:
    if game not in PIECES_REQUIRED:
        raise BadInput(f"unknown game {game!r}")
    return GameState(game=game, seed=seed)


def is_completed(state: GameState) -> bool:
    return len(state.solved) == PIECES_REQUIRED[state.game]


# --- pure evaluation (shared by stateful play and the stateless service) -----

def colon_pair_correct(puzzle: ColonPuzzle, prefix_item: int, suffix_display_slot: int) -> bool:
    return puzzle.display_perm[suffix_display_slot] == prefix_item


def validate_colon_indices(prefix_item, suffix_display_slot) -> str | None:
    for value in (prefix_item, suffix_display_slot):
        if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < 4:
            return "index out of range"
    return None


def validate_authored_cells(cells) -> str | None:
    cells = list(cells)
    if len(cells) != 3:
        return "need exactly 3 cells"
    if any(not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < 9 for c in cells):
        return "cell out of range"
    if len(set(cells)) != 3:
        return "duplicate cells"
    return None


def authored_match_group(puzzle: AuthoredPuzzle, cells) -> int | None:
    """Group index whose paper set the guessed cells cover exactly, if any."""
    papers = {puzzle.grid_order[c] for c in cells}
    for idx, group in enumerate(puzzle.groups):
        if papers == set(group.paper_ids):
            return idx
    return None


def authored_hint(puzzle: AuthoredPuzzle, corpus: Corpus, mistakes: int) -> dict | None:
    """Hint payload unlocked by reaching this mistake count, aligned to grid
    positions. First miss reveals venues, second reveals years, nothing after."""
    if mistakes == 1:
        return {"venues": [corpus.paper(pid).venue for pid in puzzle.grid_order]}
    if mistakes == 2:
        return {"years": [corpus.paper(pid).year for pid in puzzle.grid_order]}
    return None


# --- stateful play ------------------------------------------------------------

def submit_colon_guess(
    state: GameState, puzzle: ColonPuzzle, prefix_item: int, suffix_display_slot: int
) -> Verdict:
    payload = {"prefix_item": prefix_item, "suffix_display_slot": suffix_display_slot}
    reason = validate_colon_indices(prefix_item, suffix_display_slot)
    if reason is None and prefix_item in {item for item, _ in state.solved}:
        reason = "prefix already locked"
    if reason is None and suffix_display_slot in {slot for _, slot in state.solved}:
        reason = "suffix slot already locked"

    if reason is not None:
        verdict = Verdict("Rejected", completed=is_completed(state), reason=reason)
    elif colon_pair_correct(puzzle, prefix_item, suffix_display_slot):
        state.solved.add((prefix_item, suffix_display_slot))
        verdict = Verdict("Correct", completed=is_completed(state))
    else:
        state.mistakes += 1
        verdict = Verdict("Incorrect", completed=False)

    state.guesses.append((payload, verdict))
    return verdict


def submit_authored_guess(
    state: GameState, puzzle: AuthoredPuzzle, corpus: Corpus, cells
) -> Verdict:
    cells = list(cells)
    reason = validate_authored_cells(cells)
    sortable = all(isinstance(c, int) and not isinstance(c, bool) for c in cells)
    payload = {"cells": sorted(cells) if sortable else cells}
    if reason is None:
        locked = {
            pos
            for group_idx in state.solved
            for pos, pid in enumerate(puzzle.grid_order)
            if pid in puzzle.groups[group_idx].paper_ids
        }
        if any(c in locked for c in cells):
            reason = "cell already solved"

    if reason is not None:
        verdict = Verdict("Rejected", completed=is_completed(state), reason=reason)
    else:
        match = authored_match_group(puzzle, cells)
        if match is not None:
            state.solved.add(match)
            verdict = Verdict(
                "Correct",
                completed=is_completed(state),
                author=puzzle.groups[match].target_author,
            )
        else:
            state.mistakes += 1
            state.hint_level = min(MAX_HINT_LEVEL, state.mistakes)
            verdict = Verdict(
                "Incorrect",
                completed=False,
                newly_revealed=authored_hint(puzzle, corpus, state.mistakes),
            )

    state.guesses.append((payload, verdict))
    return verdict


# --- stateless twins (trust-the-client counters) -------------------------------

def stateless_colon_verdict(
    puzzle: ColonPuzzle, prefix_item, suffix_display_slot,
    mistakes_so_far: int, solved_so_far: int,
) -> Verdict:
    reason = validate_colon_indices(prefix_item, suffix_display_slot)
    if reason is not None:
        return Verdict("Rejected", completed=False, reason=reason)
    if colon_pair_correct(puzzle, prefix_item, suffix_display_slot):
        return Verdict("Correct", completed=solved_so_far + 1 >= PIECES_REQUIRED["colon"])
    return Verdict("Incorrect", completed=False)


def stateless_authored_verdict(
    puzzle: AuthoredPuzzle, corpus: Corpus, cells,
    mistakes_so_far: int, solved_so_far: int,
) -> Verdict:
    reason = validate_authored_cells(cells)
    if reason is not None:
        return Verdict("Rejected", completed=False, reason=reason)
    match = authored_match_group(puzzle, cells)
    if match is not None:
        return Verdict(
            "Correct",
            completed=solved_so_far + 1 >= PIECES_REQUIRED["authored"],
            author=puzzle.groups[match].target_author,
        )
    return Verdict(
        "Incorrect",
        completed=False,
        newly_revealed=authored_hint(puzzle, corpus, mistakes_so_far + 1),
    )


# --- share card and reveal ------------------------------------------------------

def share_text(state: GameState) -> str:
    """Exact share-card text; LF separators, no trailing newline."""
    if not is_completed(state):
        raise NotCompleted("share card is only available for completed games")
    label = "Colon" if state.game == "colon" else "Authored"
    row = "".join(
        EMOJI_CORRECT if verdict.kind == "Correct" else EMOJI_INCORRECT
        for _, verdict in state.guesses
        if verdict.kind != "Rejected"
    )
    return f"{label} #{seed_to_hex(state.seed)[:8]}\n{row}\nMistakes: {state.mistakes}"


def _record_jsonable(rec: PaperRecord) -> dict:
    out = {
        "title": rec.title,
        "authors": list(rec.authors),
        "year": rec.year,
        "venue": rec.venue,
    }
    if rec.doi:
        out["doi"] = rec.doi
    if rec.url:
        out["url"] = rec.url
    return out


def reveal(puzzle, corpus: Corpus) -> dict:
    """Full metadata for every paper in the puzzle, for post-solve reading."""
    if isinstance(puzzle, ColonPuzzle):
        return {
            "game": "colon",
            "papers": [_record_jsonable(corpus.paper(it.paper_id)) for it in puzzle.items],
        }
    if isinstance(puzzle, AuthoredPuzzle):
        return {
            "game": "authored",
            "groups": [
                {
                    "author": group.target_author,
                    "papers": [_record_jsonable(corpus.paper(pid)) for pid in group.paper_ids],
                }
                for group in puzzle.groups
            ],
        }
    raise BadInput(f"not a puzzle: {type(puzzle).__name__}")
