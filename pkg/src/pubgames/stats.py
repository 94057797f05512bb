"""Corpus-scale statistics: pool sizes and coupon-collector estimates.

The pool size is the exact binomial count of distinct puzzles; the
coupon figures answer "how many games until every paper (or author) has
appeared at least once", using the simplified n*ln(n)/k estimate with
the exact harmonic-sum variant alongside for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .corpus import Corpus
from .errors import BadInput

COLON_PAPERS_PER_GAME = 4
AUTHORED_AUTHORS_PER_GAME = 3


def n_choose_k(n: int, k: int) -> int:
    """Exact binomial coefficient; integer arithmetic throughout."""
    if k < 0 or n < 0 or k > n:
        raise BadInput(f"n_choose_k needs 0 <= k <= n, got n={n} k={k}")
    # multiplicative form: each partial product is an exact integer
    result = 1
    for i in range(1, min(k, n - k) + 1):
        result = result * (n - min(k, n - k) + i) // i
    return result


def coupon_estimate(n: int, k: int) -> int:
    """Expected games to see all n items when each game shows k: n*ln(n)/k.

    Rounded to the nearest integer, half away from zero.
    """
    if n < 1 or k < 1:
        raise BadInput(f"coupon_estimate needs n >= 1 and k >= 1, got n={n} k={k}")
    return math.floor(n * math.log(n) / k + 0.5)


def coupon_estimate_harmonic(n: int, k: int) -> int:
    """Exact-expectation variant n*H_n/k, H_n the n-th harmonic number.

    Slightly larger than coupon_estimate; exposed for comparison.
    """
    if n < 1 or k < 1:
        raise BadInput(f"coupon_estimate_harmonic needs n >= 1 and k >= 1, got n={n} k={k}")
    harmonic = math.fsum(1.0 / i for i in range(1, n + 1))
    return math.floor(n * harmonic / k + 0.5)


@dataclass(frozen=True)
class CorpusStats:
    total_papers: int
    colon_eligible: int
    eligible_authors: int
    colon_pool: str        # exact C(colon_eligible, 4) as a decimal string
    colon_coupon: int
    authored_coupon: int

    def to_jsonable(self) -> dict:
        return {
            "total_papers": self.total_papers,
            "colon_eligible": self.colon_eligible,
            "eligible_authors": self.eligible_authors,
            "colon_pool": self.colon_pool,
            "colon_coupon": self.colon_coupon,
            "authored_coupon": self.authored_coupon,
        }


def corpus_stats(corpus: Corpus) -> CorpusStats:
    """Recompute all derived figures from the corpus indexes.

    Below the playable minimums the pool is reported as "0" (no games
    exist); coupon figures are 0 for an empty pool.
    """
    n_colon = len(corpus.colon_eligible)
    n_authors = len(corpus.eligible_authors)
    pool = n_choose_k(n_colon, COLON_PAPERS_PER_GAME) if n_colon >= COLON_PAPERS_PER_GAME else 0
    return CorpusStats(
        total_papers=len(corpus.papers),
        colon_eligible=n_colon,
        eligible_authors=n_authors,
        colon_pool=str(pool),
        colon_coupon=coupon_estimate(n_colon, COLON_PAPERS_PER_GAME) if n_colon else 0,
        authored_coupon=coupon_estimate(n_authors, AUTHORED_AUTHORS_PER_GAME) if n_authors else 0,
    )
