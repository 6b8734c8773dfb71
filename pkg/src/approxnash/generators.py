"""Seeded random games and fixture games with known equilibria."""

from __future__ import annotations

import numpy as np

from approxnash.game import Game
from approxnash.rng import SplitMix64, derive_seed

# Stream tags keep the generators' streams apart for equal seeds.
_WTA_TAG = 0x57544121
_UNIFORM_TAG = 0x554E4946


def gen_wta(k: int, n: int, seed: int) -> Game:
    """Random winner-takes-all game.

    At each pure profile (lexicographic order, player 0 slowest) one winner is
    drawn uniformly from the k players; the winner gets 1, everyone else 0.
    """
    if k < 2:
        raise ValueError(f"winner-takes-all games need k >= 2, got {k}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = SplitMix64(derive_seed(_WTA_TAG, seed, k, n))
    winners = rng.integers_below(k, n**k)
    payoffs = np.zeros((k, n**k))
    payoffs[winners, np.arange(n**k)] = 1.0
    return Game(k, n, payoffs)


def gen_uniform_payoffs(k: int, n: int, seed: int) -> Game:
    """Every payoff entry independent uniform on [0, 1), in flat file order."""
    if k < 1 or n < 1:
        raise ValueError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    rng = SplitMix64(derive_seed(_UNIFORM_TAG, seed, k, n))
    return Game(k, n, rng.uniform(k * n**k))


def fixture_matching_pennies() -> Game:
    """Player 0 wins on a match, player 1 on a mismatch."""
    match = np.array([[1.0, 0.0], [0.0, 1.0]])
    return Game(2, 2, np.stack([match, 1.0 - match]))


def fixture_parity(k: int) -> Game:
    """Common-payoff game on two strategies: everyone gets 1 iff the XOR of all choices is 0.

    Against uniform opponents every pure choice earns exactly 1/2, so the
    all-uniform profile is an exact Nash equilibrium.
    """
    if k < 2:
        raise ValueError(f"parity fixture needs k >= 2, got {k}")
    grids = np.indices((2,) * k)
    even = (grids.sum(axis=0) % 2 == 0).astype(np.float64)
    return Game(k, 2, np.broadcast_to(even, (k,) + even.shape))


def fixture_constant(k: int, n: int, value: float) -> Game:
    return Game(k, n, np.full(k * n**k, float(value)))
