"""Colon puzzles: four titles split at the colon, suffixes shuffled.

The player sees the four prefixes in sampled order and the four suffixes
in a shuffled display order, and has to reconnect the pairs. Generation
rejects candidate paper sets whose case-folded prefixes or suffixes
collide (literally indistinguishable pieces break the game) and display
permutations that would present the board pre-solved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Corpus, colon_split
from .errors import CorpusTooSmall, GenerationExhausted
from .rng import Rng, seed_to_hex

PAPERS_PER_PUZZLE = 4
MAX_CANDIDATE_DRAWS = 10_000


@dataclass(frozen=True)
class ColonItem:
    paper_id: int
    prefix: str
    suffix: str


@dataclass(frozen=True)
class ColonPuzzle:
    seed: int
    items: tuple[ColonItem, ...]       # 4 items in sampled order
    display_perm: tuple[int, ...]      # display slot -> item index, never identity

    @property
    def solution(self) -> tuple[int, ...]:
        """Inverse permutation: item index -> display slot of its suffix."""
        inverse = [0] * len(self.display_perm)
        for slot, item in enumerate(self.display_perm):
            inverse[item] = slot
        return tuple(inverse)

    def to_jsonable(self) -> dict:
        """Full server-side puzzle, solution included."""
        return {
            "game": "colon",
            "seed": seed_to_hex(self.seed),
            "items": [
                {"paper": it.paper_id, "prefix": it.prefix, "suffix": it.suffix}
                for it in self.items
            ],
            "display_perm": list(self.display_perm),
        }


def generate_colon(corpus: Corpus, seed: int) -> ColonPuzzle:
    """Deterministic puzzle for (corpus, seed).

    One RNG stream drives everything; rejected candidates keep consuming
    the same stream, which is what makes the result reproducible across
    implementations.
    """
    eligible = corpus.colon_eligible
    if len(eligible) < PAPERS_PER_PUZZLE:
        raise CorpusTooSmall(
            f"colon needs {PAPERS_PER_PUZZLE} colon-eligible papers, corpus has {len(eligible)}"
        )

    rng = Rng(seed)
    items: tuple[ColonItem, ...] | None = None
    for _ in range(MAX_CANDIDATE_DRAWS):
        picks = rng.sample_distinct(PAPERS_PER_PUZZLE, len(eligible))
        candidate = []
        for idx in picks:
            paper = corpus.papers[eligible[idx]]
            prefix, suffix = colon_split(paper.title)  # eligibility guarantees a split
            candidate.append(ColonItem(paper.id, prefix, suffix))
        prefixes = {it.prefix.casefold() for it in candidate}
        suffixes = {it.suffix.casefold() for it in candidate}
        if len(prefixes) == PAPERS_PER_PUZZLE and len(suffixes) == PAPERS_PER_PUZZLE:
            items = tuple(candidate)
            break
    if items is None:
        raise GenerationExhausted(
            f"no collision-free paper set in {MAX_CANDIDATE_DRAWS} draws (seed {seed_to_hex(seed)})"
        )

    identity = tuple(range(PAPERS_PER_PUZZLE))
    for _ in range(MAX_CANDIDATE_DRAWS):
        perm = tuple(rng.shuffle(list(identity)))
        if perm != identity:
            return ColonPuzzle(seed=seed, items=items, display_perm=perm)
    raise GenerationExhausted("display permutation kept landing on identity")


def colon_view(puzzle: ColonPuzzle) -> dict:
    """Client-facing projection: no pairing, no paper ids."""
    return {
        "game": "colon",
        "seed": seed_to_hex(puzzle.seed),
        "prefixes": [it.prefix for it in puzzle.items],
        "suffixes": [puzzle.items[item].suffix for item in puzzle.display_perm],
    }
