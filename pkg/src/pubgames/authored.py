"""Authored puzzles: nine papers hiding three one-author triples.

Generation samples three eligible authors uniformly (by author, so
prolific authors are not over-represented), then three papers from each.
A proposal is accepted only when the resulting nine papers admit exactly
one partition into author-sharing triples, checked by brute force over
all 280 unordered partitions; anything weaker would allow boards with
accidental second solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .corpus import Corpus
from .errors import BadInput, CorpusTooSmall, GenerationExhausted
from .rng import Rng, seed_to_hex

AUTHORS_PER_PUZZLE = 3
PAPERS_PER_GROUP = 3
GRID_SIZE = AUTHORS_PER_PUZZLE * PAPERS_PER_GROUP
MAX_PROPOSALS = 10_000


def _enumerate_partitions() -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All 280 unordered partitions of positions 0..8 into three triples."""
    out = []
    for first_pair in combinations(range(1, 9), 2):
        triple1 = (0,) + first_pair
        rest = [x for x in range(1, 9) if x not in first_pair]
        anchor = rest[0]
        for second_pair in combinations(rest[1:], 2):
            triple2 = (anchor,) + second_pair
            triple3 = tuple(x for x in rest[1:] if x not in second_pair)
            out.append((triple1, triple2, triple3))
    return tuple(out)


_PARTITIONS_9 = _enumerate_partitions()
assert len(_PARTITIONS_9) == 280


@dataclass(frozen=True)
class AuthoredGroup:
    target_author: str
    paper_ids: tuple[int, ...]  # 3 ids, in selection order


@dataclass(frozen=True)
class AuthoredPuzzle:
    seed: int
    groups: tuple[AuthoredGroup, ...]  # 3 groups, in selection order
    grid_order: tuple[int, ...]        # the 9 paper ids in display order

    def to_jsonable(self) -> dict:
        """Full server-side puzzle, solution included."""
        return {
            "game": "authored",
            "seed": seed_to_hex(self.seed),
            "groups": [
                {"author": g.target_author, "papers": list(g.paper_ids)}
                for g in self.groups
            ],
            "grid_order": list(self.grid_order),
        }


def count_valid_partitions(paper_ids, corpus: Corpus) -> int:
    """How many of the 280 triple-partitions have every triple share an author.

    A well-posed board counts exactly 1. Value ranges 0..280 (280 when a
    single author spans all nine papers).
    """
    ids = list(paper_ids)
    if len(ids) != GRID_SIZE:
        raise BadInput(f"need exactly {GRID_SIZE} paper ids, got {len(ids)}")
    if len(set(ids)) != GRID_SIZE:
        raise BadInput("paper ids must be distinct")
    author_sets = [frozenset(corpus.paper(pid).authors) for pid in ids]

    count = 0
    for triples in _PARTITIONS_9:
        for a, b, c in triples:
            if not (author_sets[a] & author_sets[b] & author_sets[c]):
                break
        else:
            count += 1
    return count


def propose(corpus: Corpus, rng: Rng) -> tuple[AuthoredGroup, ...]:
    """One raw proposal: 3 authors uniform over eligible_authors, then 3
    papers uniform from each author's sorted paper list. No validity
    filtering here; generate_authored applies the acceptance checks."""
    author_picks = rng.sample_distinct(AUTHORS_PER_PUZZLE, len(corpus.eligible_authors))
    groups = []
    for idx in author_picks:
        name = corpus.eligible_authors[idx]
        pool = corpus.author_index[name]
        paper_picks = rng.sample_distinct(PAPERS_PER_GROUP, len(pool))
        groups.append(AuthoredGroup(name, tuple(pool[j] for j in paper_picks)))
    return tuple(groups)


def _acceptable(groups: tuple[AuthoredGroup, ...], corpus: Corpus) -> bool:
    nine = [pid for g in groups for pid in g.paper_ids]
    if len(set(nine)) != GRID_SIZE:
        return False
    # target authors must not leak into other groups
    for g in groups:
        for other in groups:
            if other is g:
                continue
            for pid in other.paper_ids:
                if g.target_author in corpus.papers[pid].authors:
                    return False
    return count_valid_partitions(nine, corpus) == 1


def generate_authored(corpus: Corpus, seed: int) -> AuthoredPuzzle:
    """Deterministic puzzle for (corpus, seed); single RNG stream across
    rejected proposals."""
    if len(corpus.eligible_authors) < AUTHORS_PER_PUZZLE:
        raise CorpusTooSmall(
            f"authored needs {AUTHORS_PER_PUZZLE} eligible authors, "
            f"corpus has {len(corpus.eligible_authors)}"
        )
    rng = Rng(seed)
    for _ in range(MAX_PROPOSALS):
        groups = propose(corpus, rng)
        if _acceptable(groups, corpus):
            nine = [pid for g in groups for pid in g.paper_ids]
            return AuthoredPuzzle(
                seed=seed,
                groups=groups,
                grid_order=tuple(rng.shuffle(nine)),
            )
    raise GenerationExhausted(
        f"no unique-solution board in {MAX_PROPOSALS} proposals (seed {seed_to_hex(seed)})"
    )


def authored_view(puzzle: AuthoredPuzzle, corpus: Corpus) -> dict:
    """Client-facing projection: titles only, in grid order."""
    return {
        "game": "authored",
        "seed": seed_to_hex(puzzle.seed),
        "grid": [corpus.paper(pid).title for pid in puzzle.grid_order],
    }
