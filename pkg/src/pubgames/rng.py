"""Deterministic randomness for puzzle generation.

Every random decision in the package flows through :class:`Rng`, a
splitmix64 generator specified bit-exactly so that identical (corpus,
seed) pairs produce identical puzzles on any platform or language.
Seeds for named puzzles (daily games, test tags) come from
:func:`derive_seed`, a 64-bit FNV-1a hash of the tag text.
"""

from __future__ import annotations

import re

from .errors import InsufficientPopulation

_MASK64 = 0xFFFFFFFFFFFFFFFF

_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3

_SEED_HEX_RE = re.compile(r"^[0-9a-f]{16}$")


class Rng:
    """splitmix64 stream. Single-owner: create one per generation request."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        """Advance the state and return the next 64-bit output."""
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = (z ^ (z >> 30)) * _MIX1 & _MASK64
        z = (z ^ (z >> 27)) * _MIX2 & _MASK64
        return z ^ (z >> 31)

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased via rejection sampling.

        Draws are rejected when they fall in the truncated final copy of
        the [0, bound) range at the top of the 64-bit space, so every
        residue is equally likely.
        """
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound}")
        threshold = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < threshold:
                return x % bound

    def shuffle(self, items: list) -> list:
        """Return a new list holding ``items`` in Fisher-Yates order.

        Descending sweep: i = n-1 .. 1, swap with j = next_below(i+1).
        The input list is left untouched.
        """
        out = list(items)
        for i in range(len(out) - 1, 0, -1):
            j = self.next_below(i + 1)
            out[i], out[j] = out[j], out[i]
        return out

    def sample_distinct(self, k: int, n: int) -> list[int]:
        """k distinct indices from [0, n), in selection order.

        Partial Fisher-Yates over the index range; uniform over all
        ordered k-selections.
        """
        if k < 0:
            raise ValueError(f"k must be >= 0, got {k}")
        if k > n:
            raise InsufficientPopulation(f"cannot sample {k} distinct from {n}")
        pool = list(range(n))
        for i in range(k):
            j = i + self.next_below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


def derive_seed(tag: str) -> int:
    """64-bit FNV-1a hash of the tag's UTF-8 bytes.

    Tags follow the "<game>:<label>" convention (e.g. "colon:2025-01-31"
    for daily puzzles), but any text hashes fine.
    """
    h = _FNV_OFFSET
    for byte in tag.encode("utf-8"):
        h = ((h ^ byte) * _FNV_PRIME) & _MASK64
    return h


def seed_to_hex(seed: int) -> str:
    """Render a seed in the external form: exactly 16 lowercase hex digits."""
    return format(seed & _MASK64, "016x")


def seed_from_hex(text: str) -> int:
    """Parse the external seed form. Strict: 16 lowercase hex digits only."""
    if not _SEED_HEX_RE.match(text):
        raise ValueError(f"seed must be 16 lowercase hex digits, got {text!r}")
    return int(text, 16)
