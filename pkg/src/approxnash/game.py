"""k-player normal-form games, mixed profiles, and exact regret evaluation.

A game with k players and n strategies each is stored as a payoff tensor of
shape ``(k, n, ..., n)``: ``payoffs[p][s_0, ..., s_{k-1}]`` is player p's
payoff at the pure profile s. Flattening in C order gives the player-major,
player-0-outermost layout used by the game file format.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

PROB_TOL = 1e-9


class InvalidGame(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Game:
    """Payoff tensor of a k-player game with n pure strategies per player.

    ``payoffs`` may be given flat (k * n**k entries) or already shaped.
    Nothing is validated on construction; see :func:`validate_game`.
    """

    num_players: int
    num_strategies: int
    payoffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.payoffs, dtype=np.float64)
        arr.setflags(write=False)
        object.__setattr__(self, "payoffs", arr)

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.num_players,) + (self.num_strategies,) * self.num_players

    @property
    def tensor(self) -> np.ndarray:
        return self.payoffs.reshape(self.shape)

    @property
    def flat(self) -> np.ndarray:
        return self.payoffs.reshape(-1)

    @property
    def num_profiles(self) -> int:
        return self.num_strategies**self.num_players

    def __eq__(self, other):
        if not isinstance(other, Game):
            return NotImplemented
        return (
            self.num_players == other.num_players
            and self.num_strategies == other.num_strategies
            and self.payoffs.size == other.payoffs.size
            and np.array_equal(self.flat, other.flat)
        )

    __hash__ = None


class Validation(NamedTuple):
    valid: bool
    reason: str | None = None


def validate_game(game: Game) -> Validation:
    """Check the Game invariants, reporting the first one violated."""
    k, n = game.num_players, game.num_strategies
    if k < 1:
        return Validation(False, f"num_players must be >= 1, got {k}")
    if n < 1:
        return Validation(False, f"num_strategies must be >= 1, got {n}")
    expected = k * n**k
    if game.payoffs.size != expected:
        return Validation(
            False, f"payoff tensor has {game.payoffs.size} entries, expected k*n^k = {expected}"
        )
    flat = game.flat
    if not np.all(np.isfinite(flat)):
        return Validation(False, "payoff entries must be finite")
    bad = np.flatnonzero((flat < 0.0) | (flat > 1.0))
    if bad.size:
        return Validation(False, f"payoff entry {bad[0]} = {flat[bad[0]]!r} outside [0, 1]")
    return Validation(True)


def check_game(game: Game) -> Game:
    outcome = validate_game(game)
    if not outcome.valid:
        raise InvalidGame(outcome.reason)
    return game


def is_winner_takes_all(game: Game) -> bool:
    """True iff at every pure profile exactly one player gets 1 and the rest 0."""
    if not validate_game(game).valid or game.num_players < 2:
        return False
    t = game.tensor
    binary = np.all((t == 0.0) | (t == 1.0))
    return bool(binary and np.all(t.sum(axis=0) == 1.0))


@dataclass(frozen=True, eq=False)
class MixedStrategy:
    probs: np.ndarray

    def __post_init__(self):
        p = np.array(self.probs, dtype=np.float64).reshape(-1)
        if p.size == 0:
            raise ValueError("a mixed strategy needs at least one pure strategy")
        if np.any(p < 0.0) or not np.all(np.isfinite(p)):
            raise ValueError(f"probabilities must be finite and non-negative: {p}")
        if abs(p.sum() - 1.0) > PROB_TOL:
            raise ValueError(f"probabilities sum to {p.sum()!r}, not 1")
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)

    @classmethod
    def pure(cls, n: int, index: int) -> MixedStrategy:
        if not 0 <= index < n:
            raise IndexError(f"pure strategy {index} out of range for n={n}")
        p = np.zeros(n)
        p[index] = 1.0
        return cls(p)

    @classmethod
    def uniform(cls, n: int) -> MixedStrategy:
        return cls(np.full(n, 1.0 / n))

    @property
    def n(self) -> int:
        return self.probs.size

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.probs > 0.0))

    @property
    def support_size(self) -> int:
        return len(self.support)


@dataclass(frozen=True, eq=False)
class MixedProfile:
    strategies: tuple[MixedStrategy, ...]

    def __post_init__(self):
        strategies = tuple(
            s if isinstance(s, MixedStrategy) else MixedStrategy(s) for s in self.strategies
        )
        object.__setattr__(self, "strategies", strategies)

    @classmethod
    def from_probs(cls, probs: Sequence[Sequence[float]]) -> MixedProfile:
        return cls(tuple(MixedStrategy(p) for p in probs))

    @classmethod
    def uniform(cls, k: int, n: int) -> MixedProfile:
        return cls(tuple(MixedStrategy.uniform(n) for _ in range(k)))

    @classmethod
    def pure(cls, n: int, choices: Sequence[int]) -> MixedProfile:
        return cls(tuple(MixedStrategy.pure(n, c) for c in choices))

    def __len__(self):
        return len(self.strategies)

    def __getitem__(self, player: int) -> MixedStrategy:
        return self.strategies[player]

    @property
    def probs(self) -> list[np.ndarray]:
        return [s.probs for s in self.strategies]

    @property
    def supports(self) -> list[tuple[int, ...]]:
        return [s.support for s in self.strategies]

    @property
    def total_support(self) -> int:
        return sum(s.support_size for s in self.strategies)

    def replace(self, player: int, strategy: MixedStrategy) -> MixedProfile:
        strategies = list(self.strategies)
        strategies[player] = strategy
        return MixedProfile(tuple(strategies))


class PlayerRegret(NamedTuple):
    expected_payoff: float
    best_response_value: float
    regret: float


@dataclass(frozen=True)
class RegretReport:
    per_player: tuple[PlayerRegret, ...]
    epsilon: float

    @property
    def regrets(self) -> list[float]:
        return [r.regret for r in self.per_player]

    def is_epsilon_nash(self, eps: float) -> bool:
        return self.epsilon <= eps + PROB_TOL


def _check_profile(game: Game, profile: MixedProfile) -> None:
    if len(profile) != game.num_players:
        raise DimensionMismatch(
            f"profile has {len(profile)} players, game has {game.num_players}"
        )
    for p, s in enumerate(profile.strategies):
        if s.n != game.num_strategies:
            raise DimensionMismatch(
                f"player {p} strategy has {s.n} entries, game has n={game.num_strategies}"
            )


def _check_player(game: Game, player: int) -> None:
    if not 0 <= player < game.num_players:
        raise DimensionMismatch(f"player {player} out of range for k={game.num_players}")


def deviation_payoffs(game: Game, profile: MixedProfile, player: int) -> np.ndarray:
    """Payoff to ``player`` for each of its pure strategies against the others' mixtures."""
    _check_profile(game, profile)
    _check_player(game, player)
    k = game.num_players
    values = game.tensor[player]
    # contract trailing opponents (last axis each time), then leading ones (axis 0)
    for q in range(k - 1, player, -1):
        values = values @ profile.strategies[q].probs
    for q in range(player):
        values = np.tensordot(profile.strategies[q].probs, values, axes=(0, 0))
    return values


def deviation_payoff(game: Game, profile: MixedProfile, player: int, pure: int) -> float:
    if not 0 <= pure < game.num_strategies:
        raise DimensionMismatch(f"pure strategy {pure} out of range for n={game.num_strategies}")
    return float(deviation_payoffs(game, profile, player)[pure])


def expected_payoff(game: Game, profile: MixedProfile, player: int) -> float:
    dev = deviation_payoffs(game, profile, player)
    return float(profile.strategies[player].probs @ dev)


def best_response(game: Game, profile: MixedProfile, player: int) -> tuple[int, float]:
    """Pure best response of ``player``; ties go to the lowest index."""
    dev = deviation_payoffs(game, profile, player)
    best = int(np.argmax(dev))
    return best, float(dev[best])


def regret_report(game: Game, profile: MixedProfile) -> RegretReport:
    rows = []
    for p in range(game.num_players):
        dev = deviation_payoffs(game, profile, p)
        value = float(profile.strategies[p].probs @ dev)
        best = float(dev.max())
        rows.append(PlayerRegret(value, best, best - value))
    return RegretReport(tuple(rows), max(r.regret for r in rows))


def restrict_game(game: Game, player: int, pure: int) -> Game:
    """The (k-1)-player game left when ``player`` is fixed to ``pure``.

    The fixed player's payoffs are dropped; the others keep their order.
    """
    k, n = game.num_players, game.num_strategies
    if k < 2:
        raise InvalidGame("cannot restrict a 1-player game")
    _check_player(game, player)
    if not 0 <= pure < n:
        raise DimensionMismatch(f"pure strategy {pure} out of range for n={n}")
    sliced = np.take(game.tensor, pure, axis=player + 1)
    sliced = np.delete(sliced, player, axis=0)
    return Game(k - 1, n, np.ascontiguousarray(sliced))


def profile_index(choices: Sequence[int], n: int) -> int:
    """Lexicographic rank of a pure profile, player 0 slowest."""
    index = 0
    for c in choices:
        index = index * n + int(c)
    return index
