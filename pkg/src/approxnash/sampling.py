"""Support reduction by sampling pure profiles from a mixed profile.

Drawing N pure profiles from a Nash equilibrium and letting each player use
the empirical distribution of its coordinates gives an approximate
equilibrium of support at most N, once N >= k^2 ln(2kn) / (2 eps^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from approxnash.game import (
    PROB_TOL,
    Game,
    MixedProfile,
    MixedStrategy,
    _check_profile,
    deviation_payoffs,
    regret_report,
)
from approxnash.rng import SplitMix64, derive_seed

_SAMPLE_TAG = 0x53414D50


def required_samples(k: int, n: int, eps: float) -> int:
    """ceil(k^2 ln(2kn) / (2 eps^2)), natural log."""
    if k < 1 or n < 1:
        raise ValueError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")
    return math.ceil(k * k * math.log(2 * k * n) / (2.0 * eps * eps))


@dataclass(frozen=True)
class SampleBatch:
    """N pure profiles, one per row, drawn i.i.d. from a mixed profile."""

    draws: np.ndarray
    num_strategies: int

    @property
    def N(self) -> int:
        return self.draws.shape[0]

    def counts(self, player: int) -> np.ndarray:
        return np.bincount(self.draws[:, player], minlength=self.num_strategies)


def draw_profiles(source: MixedProfile, N: int, seed: int) -> SampleBatch:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    k, n = len(source), source[0].n
    rng = SplitMix64(derive_seed(_SAMPLE_TAG, seed, k, n, N))
    u = rng.uniform(N * k).reshape(N, k)
    draws = np.empty((N, k), dtype=np.int64)
    for p, strategy in enumerate(source.strategies):
        cdf = np.cumsum(strategy.probs)
        picks = np.searchsorted(cdf, u[:, p], side="right")
        # rounding can leave cdf[-1] slightly below 1; fall back to the last supported index
        draws[:, p] = np.minimum(picks, strategy.support[-1])
    return SampleBatch(draws, n)


def empirical_profile(batch: SampleBatch) -> MixedProfile:
    return MixedProfile(
        tuple(MixedStrategy(batch.counts(p) / batch.N) for p in range(batch.draws.shape[1]))
    )


def sample_support(game: Game, source: MixedProfile, N: int, seed: int) -> MixedProfile:
    """Empirical-distribution profile from N draws of ``source``."""
    _check_profile(game, source)
    return empirical_profile(draw_profiles(source, N, seed))


@dataclass(frozen=True)
class ConcentrationReport:
    max_deviation: float
    worst_player: int
    worst_strategy: int
    eps: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.eps


def concentration_check(
    game: Game, source: MixedProfile, sampled: MixedProfile, eps: float
) -> ConcentrationReport:
    """Largest gap between sampled and source deviation payoffs over all (player, strategy)."""
    _check_profile(game, source)
    _check_profile(game, sampled)
    best = (-1.0, 0, 0)
    for p in range(game.num_players):
        gap = np.abs(deviation_payoffs(game, sampled, p) - deviation_payoffs(game, source, p))
        j = int(np.argmax(gap))
        if gap[j] > best[0]:
            best = (float(gap[j]), p, j)
    return ConcentrationReport(best[0], best[1], best[2], eps)


@dataclass(frozen=True)
class SamplingTrial:
    trial: int
    seed: int
    N: int
    max_deviation: float
    epsilon: float
    eps: float

    @property
    def concentrated(self) -> bool:
        return self.max_deviation <= self.eps

    @property
    def within_2eps(self) -> bool:
        return self.epsilon <= 2 * self.eps + PROB_TOL


def run_sampling_trials(
    game: Game, source: MixedProfile, eps: float, trials: int, seed: int, N: int | None = None
) -> list[SamplingTrial]:
    """Repeat sample-then-check ``trials`` times with per-trial seeds derived from ``seed``."""
    if N is None:
        N = required_samples(game.num_players, game.num_strategies, eps)
    rows = []
    for trial in range(trials):
        trial_seed = derive_seed(seed, trial)
        sampled = sample_support(game, source, N, trial_seed)
        check = concentration_check(game, source, sampled, eps)
        rows.append(
            SamplingTrial(trial, trial_seed, N, check.max_deviation, regret_report(game, sampled).epsilon, eps)
        )
    return rows

