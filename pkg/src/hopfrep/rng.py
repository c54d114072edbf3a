"""Deterministic 64-bit xorshift* generator.

Every randomized operation in the package takes an explicit seed and draws
from this generator only, so runs are bit-reproducible.  Update rule is
Vigna's xorshift64*: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; output
x * 2685821657736338717 (all mod 2^64).
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_MULT = 2685821657736338717
# State must never be zero; seeds of zero are remapped to this odd constant.
_ZERO_SEED_STATE = 0x9E3779B97F4A7C15


class SeededRng:
    """xorshift64* stream; identical seed gives an identical stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = (seed & _MASK) or _ZERO_SEED_STATE

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK
        x ^= x >> 27
        self.state = x
        return (x * _MULT) & _MASK

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n), by rejection."""
        if n <= 0:
            raise ValueError("randrange bound must be positive")
        bound = ((1 << 64) // n) * n
        while True:
            x = self.next_u64()
            if x < bound:
                return x % n

    def derive(self, index: int) -> "SeededRng":
        """Independent child stream: seed xor task index (per-task ownership)."""
        return SeededRng(self.state ^ index ^ 0xD1B54A32D192ED03)
