import numpy as np
import pytest

from approxnash.game import MixedProfile, expected_payoff, is_winner_takes_all, regret_report, validate_game
from approxnash.generators import (
    fixture_matching_pennies,
    fixture_parity,
    gen_uniform_payoffs,
    gen_wta,
)


@pytest.mark.parametrize("k,n,seed", [(2, 2, 0), (2, 5, 3), (3, 2, 42), (3, 4, 9), (4, 3, 1)])
def test_wta_exactly_one_winner(k, n, seed):
    game = gen_wta(k, n, seed)
    assert validate_game(game).valid
    t = game.tensor
    assert np.all((t == 0.0) | (t == 1.0))
    assert np.all(t.sum(axis=0) == 1.0)
    assert is_winner_takes_all(game)


def test_wta_two_players_is_win_lose_constant_sum():
    t = gen_wta(2, 6, 3).tensor
    assert np.array_equal(t[0] + t[1], np.ones((6, 6)))


def test_wta_deterministic():
    assert np.array_equal(gen_wta(3, 2, 42).flat, gen_wta(3, 2, 42).flat)
    assert not np.array_equal(gen_wta(3, 4, 42).flat, gen_wta(3, 4, 43).flat)


@pytest.mark.parametrize("k,n,seed", [(2, 32, 1), (3, 10, 2), (4, 6, 3), (5, 4, 4)])
def test_wta_winner_frequency(k, n, seed):
    t = gen_wta(k, n, seed).tensor
    assert n**k >= 1000
    freq = t.reshape(k, -1).mean(axis=1)
    assert np.all(np.abs(freq - 1 / k) <= 0.1)


def test_wta_rejects_single_player():
    with pytest.raises(ValueError):
        gen_wta(1, 3, 0)


def test_uniform_range_and_determinism():
    game = gen_uniform_payoffs(3, 4, 5)
    assert validate_game(game).valid
    assert np.array_equal(game.flat, gen_uniform_payoffs(3, 4, 5).flat)


def test_uniform_k2_n3_seed1_mean():
    flat = gen_uniform_payoffs(2, 3, 1).flat
    assert flat.size == 18
    assert 0.2 < flat.mean() < 0.8


def test_uniform_seed_streams_differ_from_wta():
    # distinct stream tags: the same seed must not reuse the WTA stream
    u = gen_uniform_payoffs(2, 2, 0).flat
    assert len(set(u.tolist())) == u.size


def test_matching_pennies():
    game = fixture_matching_pennies()
    assert is_winner_takes_all(game)
    uniform = MixedProfile.uniform(2, 2)
    assert regret_report(game, uniform).epsilon == 0.0
    assert [expected_payoff(game, uniform, p) for p in range(2)] == [0.5, 0.5]
    assert game.tensor[0].tolist() == [[1.0, 0.0], [0.0, 1.0]]


def test_parity_k2_entries():
    t = fixture_parity(2).tensor
    assert t[0].tolist() == [[1.0, 0.0], [0.0, 1.0]]
    assert np.array_equal(t[0], t[1])


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_parity_uniform_exact_ne(k):
    assert regret_report(fixture_parity(k), MixedProfile.uniform(k, 2)).epsilon == 0.0


def test_parity_pure_zero_profile():
    game = fixture_parity(3)
    prof = MixedProfile.pure(2, [0, 0, 0])
    assert game.tensor[:, 0, 0, 0].tolist() == [1.0, 1.0, 1.0]
    assert game.tensor[2, 0, 0, 1] == 0.0
    assert regret_report(game, prof).regrets[2] == 0.0


def test_parity_rejects_single_player():
    with pytest.raises(ValueError):
        fixture_parity(1)
