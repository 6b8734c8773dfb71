"""SplitMix64 stream used by every seeded generator in the package.

SplitMix64 (Steele, Lea, Flood 2014) is counter based, so a block of draws
can be produced with vectorized uint64 arithmetic while staying bit-identical
to the sequential definition.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MUL1 = 0xBF58476D1CE4E5B9
_MUL2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a Python int."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MUL1) & MASK64
    z = ((z ^ (z >> 27)) * _MUL2) & MASK64
    return z ^ (z >> 31)


def derive_seed(*words: int) -> int:
    """Fold a sequence of integers into one 64-bit stream seed."""
    state = 0
    for w in words:
        state = mix64(state ^ mix64((w + GOLDEN_GAMMA) & MASK64))
    return state


class SplitMix64:
    """Deterministic 64-bit stream; ``draw`` returns the next outputs in order."""

    def __init__(self, seed: int):
        self.state = seed & MASK64
        self.position = 0

    def next_u64(self) -> int:
        self.position += 1
        return mix64(self.state + self.position * GOLDEN_GAMMA)

    def draw(self, count: int) -> np.ndarray:
        counters = np.arange(self.position + 1, self.position + count + 1, dtype=np.uint64)
        self.position += count
        z = np.uint64(self.state) + counters * np.uint64(GOLDEN_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MUL1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MUL2)
        return z ^ (z >> np.uint64(31))

    def integers_below(self, bound: int, count: int) -> np.ndarray:
        """``count`` unbiased draws from {0, ..., bound-1} by rejection sampling."""
        if bound < 1:
            raise ValueError("bound must be positive")
        limit = np.uint64(((1 << 64) // bound) * bound) if bound & (bound - 1) else None
        accepted = self.draw(count)
        if limit is not None:
            accepted = accepted[accepted < limit]
            while accepted.size < count:
                more = self.draw(count - accepted.size)
                accepted = np.concatenate([accepted, more[more < limit]])
        return (accepted % np.uint64(bound)).astype(np.int64)

    def uniform(self, count: int) -> np.ndarray:
        """Doubles on [0, 1) with 53 random bits, hence exactly representable as decimals."""
        return (self.draw(count) >> np.uint64(11)).astype(np.float64) * 2.0**-53
