"""Puzzle games over academic-publication metadata.

Two games are generated from one ingested corpus snapshot:

* Colon -- four paper titles are split at their first colon and the
  suffix order is shuffled; the player reconnects the pairs.
* Authored -- a 3x3 grid of nine papers hides three triples, each triple
  sharing one target author; generation brute-force checks that exactly
  one valid partition exists.

Everything is deterministic: a 64-bit seed (optionally derived by
hashing a tag like "colon:2025-01-31") plus the corpus bytes fully
determine a puzzle. See the cli module for the command-line surface and
service for the stateless HTTP API.
"""

from .authored import AuthoredPuzzle, count_valid_partitions, generate_authored
from .colon import ColonPuzzle, generate_colon
from .corpus import Corpus, PaperRecord, load_corpus
from .game import GameState, Verdict, new_game_state, reveal, share_text
from .rng import Rng, derive_seed, seed_from_hex, seed_to_hex
from .stats import corpus_stats

__version__ = "0.1.0"

__all__ = [
    "AuthoredPuzzle",
    "ColonPuzzle",
    "Corpus",
    "GameState",
    "PaperRecord",
    "Rng",
    "Verdict",
    "corpus_stats",
    "count_valid_partitions",
    "derive_seed",
    "generate_authored",
    "generate_colon",
    "load_corpus",
    "new_game_state",
    "reveal",
    "seed_from_hex",
    "seed_to_hex",
    "share_text",
    "__version__",
]
