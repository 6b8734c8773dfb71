"""Certifying the 1 - 1/k lower bound for constant-support profiles on a concrete game.

In a winner-takes-all game the payoffs at every pure profile sum to 1, so
under any mixed profile some player expects at most 1/k. If, for a support
set S, every player has a pure strategy that wins against every combination
of the other players' strategies in S, that player can deviate to payoff 1,
and no profile supported inside S has regret below 1 - 1/k. Certification
checks this for every support set of total size at most t.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from approxnash.game import DimensionMismatch, Game, InvalidGame, is_winner_takes_all

DEFAULT_WORK_LIMIT = 10**9


class WorkLimitExceeded(RuntimeError):
    def __init__(self, estimate: int, limit: int):
        super().__init__(f"estimated {estimate} elementary checks exceeds work limit {limit}")
        self.estimate = estimate
        self.limit = limit


@dataclass(frozen=True)
class SupportSet:
    per_player: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if any(len(s) == 0 for s in self.per_player):
            raise ValueError("every player needs a non-empty support")

    @property
    def total_size(self) -> int:
        return sum(len(s) for s in self.per_player)


@dataclass(frozen=True)
class CertificationResult:
    """Outcome of :func:`certify_lower_bound`.

    ``witness`` is the first (support set, player) pair, in enumeration
    order, where the player has no universal winner; None when certified.
    """

    certified: bool
    k: int
    t: int
    examined: int
    witness: tuple[SupportSet, int] | None = None

    @property
    def epsilon_floor(self) -> Fraction:
        return lower_bound_epsilon(self.k)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` positive integers, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_support_sets(k: int, n: int, t: int) -> Iterator[SupportSet]:
    """Every support set of total size at most ``t``, each exactly once.

    Ordered by total size, then composition of sizes (lexicographic), then
    index subsets (lexicographic).
    """
    if t < k:
        raise ValueError(f"total support budget t={t} is below k={k}")
    for total in range(k, min(t, k * n) + 1):
        for sizes in _compositions(total, k):
            if max(sizes) > n:
                continue
            choices = [itertools.combinations(range(n), c) for c in sizes]
            for per_player in itertools.product(*choices):
                yield SupportSet(per_player)


def universal_winner_check(game: Game, support: SupportSet, player: int) -> tuple[bool, int | None]:
    """Lowest pure strategy of ``player`` earning 1 against every supported opponent combination."""
    k, n = game.num_players, game.num_strategies
    if len(support.per_player) != k:
        raise DimensionMismatch(f"support set has {len(support.per_player)} players, game has {k}")
    if not 0 <= player < k:
        raise DimensionMismatch(f"player {player} out of range for k={k}")
    if any(not 0 <= i < n for s in support.per_player for i in s):
        raise DimensionMismatch(f"support indices out of range for n={n}")
    index = tuple(
        list(range(n)) if q == player else list(s) for q, s in enumerate(support.per_player)
    )
    block = game.tensor[player][np.ix_(*index)]
    wins = np.all(np.moveaxis(block, player, 0).reshape(n, -1) == 1.0, axis=1)
    hits = np.flatnonzero(wins)
    if hits.size:
        return True, int(hits[0])
    return False, None


def certification_cost(k: int, n: int, t: int) -> int:
    """Work estimate C(kn, t) * n * t^(k-1)."""
    return math.comb(k * n, t) * n * t ** (k - 1)


def certify_lower_bound(game: Game, t: int, work_limit: int = DEFAULT_WORK_LIMIT) -> CertificationResult:
    """Decide whether every support set of total size <= t gives every player a universal winner.

    Raises :class:`InvalidGame` for games that are not winner-takes-all and
    :class:`WorkLimitExceeded` when the cost estimate is above ``work_limit``.
    """
    k, n = game.num_players, game.num_strategies
    if not is_winner_takes_all(game):
        raise InvalidGame("lower-bound certification needs a winner-takes-all game")
    if t < k:
        raise ValueError(f"total support budget t={t} is below k={k}")
    estimate = certification_cost(k, n, t)
    if estimate > work_limit:
        raise WorkLimitExceeded(estimate, work_limit)

    # the check for player p only depends on the other players' supports
    seen: dict[tuple, bool] = {}
    examined = 0
    for support in enumerate_support_sets(k, n, t):
        examined += 1
        for p in range(k):
            key = (p,) + support.per_player[:p] + support.per_player[p + 1:]
            ok = seen.get(key)
            if ok is None:
                ok = seen[key] = universal_winner_check(game, support, p)[0]
            if not ok:
                return CertificationResult(False, k, t, examined, (support, p))
    return CertificationResult(True, k, t, examined)


def lower_bound_epsilon(k: int) -> Fraction:
    return 1 - Fraction(1, k)


def eq1_log_bound(k: int, n: float, a: float) -> float:
    """Natural log of k (kn)^((a log_k n)^(1/(k-1))) (1 - n^-a)^n."""
    if k < 2 or n < 2 or not a > 0:
        raise ValueError(f"need k >= 2, n >= 2, a > 0; got k={k}, n={n}, a={a}")
    t = (a * math.log(n, k)) ** (1.0 / (k - 1))
    return math.log(k) + t * math.log(k * n) + n * math.log1p(-(n**-a))


def eq1_bound(k: int, n: float, a: float) -> float:
    """Union-bound failure probability with budget t = (a log_k n)^(1/(k-1)); may underflow to 0."""
    return math.exp(eq1_log_bound(k, n, a))


def support_bound_at(k: int, n: float) -> float:
    """(log_k(n) / 2)^(1/(k-1)): budget below which certification should succeed for large n."""
    if k < 2 or n < 2:
        raise ValueError(f"need k >= 2 and n >= 2; got k={k}, n={n}")
    return (math.log(n, k) / 2.0) ** (1.0 / (k - 1))
