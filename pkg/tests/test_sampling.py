import math

import numpy as np
import pytest

from approxnash.game import DimensionMismatch, MixedProfile, regret_report
from approxnash.generators import fixture_matching_pennies, fixture_parity, gen_uniform_payoffs
from approxnash.rng import derive_seed
from approxnash.sampling import (
    concentration_check,
    draw_profiles,
    empirical_profile,
    required_samples,
    run_sampling_trials,
    sample_support,
)


class TestRequiredSamples:
    def test_k2_n10(self):
        assert 4 * math.log(40) / 0.02 == pytest.approx(737.78, abs=0.01)
        assert required_samples(2, 10, 0.1) == 738

    def test_k2_n2(self):
        assert required_samples(2, 2, 0.2) == 104

    def test_k3_n2(self):
        assert 9 * math.log(12) / 0.08 == pytest.approx(279.55, abs=0.01)
        assert required_samples(3, 2, 0.2) == 280

    @pytest.mark.parametrize("k,n,eps", [(2, 10, 0.1), (3, 5, 0.3), (4, 2, 0.05)])
    def test_halving_eps_quadruples(self, k, n, eps):
        big, small = required_samples(k, n, eps / 2), required_samples(k, n, eps)
        exact = k * k * math.log(2 * k * n) / (2 * eps * eps)
        assert big == math.ceil(4 * exact)
        assert 4 * small - 4 <= big <= 4 * small

    @pytest.mark.parametrize("eps", [0.0, -0.1])
    def test_eps_must_be_positive(self, eps):
        with pytest.raises(ValueError):
            required_samples(2, 2, eps)


class TestSampleSupport:
    @pytest.mark.parametrize("N", [1, 7, 100])
    def test_pure_source(self, N):
        game = gen_uniform_payoffs(3, 4, 0)
        source = MixedProfile.pure(4, [3, 0, 2])
        out = sample_support(game, source, N, seed=5)
        assert [s.support for s in out.strategies] == [(3,), (0,), (2,)]

    def test_support_bounded_by_N_and_n(self):
        game = gen_uniform_payoffs(2, 10, 0)
        for N in (1, 3, 50):
            out = sample_support(game, MixedProfile.uniform(2, 10), N, seed=N)
            assert all(s.support_size <= min(N, 10) for s in out.strategies)

    def test_zero_probability_never_drawn(self):
        source = MixedProfile.from_probs([[0.5, 0.0, 0.5], [0.0, 0.0, 1.0]])
        batch = draw_profiles(source, 2000, seed=3)
        assert set(batch.draws[:, 0]) == {0, 2}
        assert set(batch.draws[:, 1]) == {2}

    def test_empirical_is_counts_over_N(self):
        batch = draw_profiles(MixedProfile.uniform(3, 4), 37, seed=9)
        prof = empirical_profile(batch)
        for p in range(3):
            counts = batch.counts(p)
            assert counts.sum() == 37
            assert np.array_equal(prof.probs[p], counts / 37)

    def test_deterministic(self):
        game = fixture_parity(3)
        a = sample_support(game, MixedProfile.uniform(3, 2), 104, seed=17)
        b = sample_support(game, MixedProfile.uniform(3, 2), 104, seed=17)
        assert all(np.array_equal(x, y) for x, y in zip(a.probs, b.probs))

    def test_draw_frequencies(self):
        batch = draw_profiles(MixedProfile.from_probs([[0.2, 0.8], [0.6, 0.4]]), 20000, seed=1)
        assert batch.draws[:, 0].mean() == pytest.approx(0.8, abs=0.02)
        assert batch.draws[:, 1].mean() == pytest.approx(0.4, abs=0.02)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            sample_support(fixture_parity(3), MixedProfile.uniform(2, 2), 10, seed=0)

    def test_parity_k3_at_required_N(self):
        game = fixture_parity(3)
        source = MixedProfile.uniform(3, 2)
        N = required_samples(3, 2, 0.2)
        hits = sum(
            regret_report(game, sample_support(game, source, N, derive_seed(11, s))).epsilon <= 0.4
            for s in range(50)
        )
        assert hits >= 45


class TestConcentration:
    def test_identical_profiles(self):
        game = gen_uniform_payoffs(3, 3, 2)
        prof = MixedProfile.uniform(3, 3)
        report = concentration_check(game, prof, prof, 0.1)
        assert report.max_deviation == 0.0 and report.passed

    def test_deviation_at_most_one(self):
        game = fixture_matching_pennies()
        report = concentration_check(game, MixedProfile.pure(2, [0, 0]), MixedProfile.pure(2, [1, 1]), 0.1)
        assert report.max_deviation == 1.0
        assert not report.passed

    def test_parity_N104_passes(self):
        trials = run_sampling_trials(fixture_parity(3), MixedProfile.uniform(3, 2), 0.2, 50, seed=3, N=104)
        assert sum(t.concentrated for t in trials) >= 45

    def test_two_eps_when_concentrated(self):
        # source is an exact NE; concentration within eps forces sampled regret within 2 eps
        for eps, N in [(0.2, 20), (0.1, 10), (0.05, 8)]:
            for t in run_sampling_trials(fixture_parity(4), MixedProfile.uniform(4, 2), eps, 40, seed=1, N=N):
                if t.concentrated:
                    assert t.epsilon <= 2 * eps + 1e-9

    def test_scaling_with_N(self):
        game = fixture_parity(3)
        source = MixedProfile.uniform(3, 2)
        p90 = []
        for N in (4, 8, 16, 32):
            devs = [t.max_deviation for t in run_sampling_trials(game, source, 0.2, 200, seed=N, N=N)]
            p90.append(np.quantile(devs, 0.9))
        assert all(b <= a + 0.02 for a, b in zip(p90, p90[1:]))

    def test_scaling_with_N_non_equilibrium_source(self):
        game = gen_uniform_payoffs(3, 3, 4)
        source = MixedProfile.from_probs([[0.5, 0.3, 0.2], [0.1, 0.1, 0.8], [1 / 3, 1 / 3, 1 / 3]])
        p90 = []
        for N in (10, 20, 40, 80):
            devs = [t.max_deviation for t in run_sampling_trials(game, source, 0.2, 200, seed=N, N=N)]
            p90.append(np.quantile(devs, 0.9))
        assert all(b <= a + 0.02 for a, b in zip(p90, p90[1:]))
