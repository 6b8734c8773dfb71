"""Constant-support approximate equilibria: the staircase construction and the recursive lift.

The staircase gives every player support at most 2 and regret at most
1 - 1/k. The lift turns any 2-player solver with guarantee eps into a
k-player solver with guarantee :func:`delta_bound` (k, eps).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from approxnash.game import Game, MixedProfile, MixedStrategy, best_response, restrict_game


@dataclass(frozen=True)
class TwoPlayerSolver:
    """A 2-player solver and the regret it promises on every 2-player game."""

    solve: Callable[[Game], MixedProfile]
    guarantee: float
    name: str = "custom"


@dataclass(frozen=True)
class SolverTrace:
    """Choices made by :func:`staircase`.

    ``anchors[i]`` is player i's arbitrary strategy (players 0..k-2),
    ``responses[i]`` its best response, and ``weights[i]`` the pair
    (anchor weight, response weight). The last player has weights (0, 1).
    """

    anchors: tuple[int, ...]
    responses: tuple[int, ...]
    weights: tuple[tuple[float, float], ...]


def staircase_weights(k: int, player: int) -> tuple[float, float]:
    """(1 - 1/(k - player), 1/(k - player)) for 0-based ``player``."""
    share = 1.0 / (k - player)
    return 1.0 - share, share


def _two_point(n: int, anchor: int, anchor_weight: float, response: int, response_weight: float):
    probs = np.zeros(n)
    probs[anchor] += anchor_weight
    probs[response] += response_weight
    return MixedStrategy(probs)


def staircase(game: Game, anchors: Sequence[int] | None = None) -> tuple[MixedProfile, SolverTrace]:
    """Support-2 profile with regret at most 1 - 1/k.

    Players 0..k-2 put 1 - 1/(k-i) on their anchor. The last player best
    responds (purely) to the anchors. Then, for i = k-2 down to 0, player i
    puts the remaining 1/(k-i) on a best response to the anchors of players
    before it and the finished mixtures of players after it.
    """
    k, n = game.num_players, game.num_strategies
    if k < 2:
        raise ValueError("staircase needs at least 2 players")
    anchors = tuple(int(a) for a in (anchors if anchors is not None else [0] * (k - 1)))
    if len(anchors) != k - 1:
        raise ValueError(f"expected {k - 1} anchors, got {len(anchors)}")
    if any(not 0 <= a < n for a in anchors):
        raise IndexError(f"anchors {anchors} out of range for n={n}")

    current = [MixedStrategy.pure(n, a) for a in anchors] + [MixedStrategy.uniform(n)]
    last, _ = best_response(game, MixedProfile(tuple(current)), k - 1)
    current[k - 1] = MixedStrategy.pure(n, last)
    responses = [0] * k
    responses[k - 1] = last
    weights = [(0.0, 1.0)] * k

    for i in range(k - 2, -1, -1):
        # players < i still sit on their pure anchors; player i's own entry is ignored
        b, _ = best_response(game, MixedProfile(tuple(current)), i)
        w_anchor, w_response = staircase_weights(k, i)
        current[i] = _two_point(n, anchors[i], w_anchor, b, w_response)
        responses[i] = b
        weights[i] = (w_anchor, w_response)

    return MixedProfile(tuple(current)), SolverTrace(anchors, tuple(responses), tuple(weights))


def dmp_two_player(anchor: int = 0) -> TwoPlayerSolver:
    """The k=2 staircase: a 1/2-approximate equilibrium with support at most 2."""

    def solve(game: Game) -> MixedProfile:
        if game.num_players != 2:
            raise ValueError("two-player solver called on a %d-player game" % game.num_players)
        return staircase(game, [anchor])[0]

    return TwoPlayerSolver(solve, 0.5, "staircase-2")


def delta_bound(k: int, eps: float) -> float:
    """Guarantee of the k-player lift built on a 2-player eps-solver."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"eps must lie in [0, 1], got {eps}")
    return ((k - 2) - (k - 3) * eps) / ((k - 1) - (k - 2) * eps)


def recursive_lift(game: Game, base: TwoPlayerSolver, anchor: int = 0) -> MixedProfile:
    """k-player profile with regret at most ``delta_bound(k, base.guarantee)``.

    Player 0 puts 1/(2 - delta_{k-1}) on ``anchor``, the remaining players
    solve the game restricted to that anchor recursively, and player 0 puts
    the rest on a best response to their solution.
    """
    k, n = game.num_players, game.num_strategies
    if k < 2:
        raise ValueError("recursive lift needs at least 2 players")
    if k == 2:
        return base.solve(game)
    if not 0 <= anchor < n:
        raise IndexError(f"anchor {anchor} out of range for n={n}")

    rest = recursive_lift(restrict_game(game, 0, anchor), base, anchor)
    w_anchor = 1.0 / (2.0 - delta_bound(k - 1, base.guarantee))
    placeholder = MixedProfile((MixedStrategy.pure(n, anchor),) + rest.strategies)
    b, _ = best_response(game, placeholder, 0)
    return placeholder.replace(0, _two_point(n, anchor, w_anchor, b, 1.0 - w_anchor))


KNOWN_TWO_PLAYER_GUARANTEE = 0.3393


def three_player_guarantee() -> float:
    """Lift guarantee for k=3 on top of a 0.3393-approximate 2-player solver.

    Only the number is provided; that 2-player solver is not part of this package.
    """
    return delta_bound(3, KNOWN_TWO_PLAYER_GUARANTEE)
