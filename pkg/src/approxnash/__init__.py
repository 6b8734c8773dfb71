"""Approximate Nash equilibria with small support in k-player normal-form games."""

from approxnash.game import (
    DimensionMismatch,
    Game,
    InvalidGame,
    MixedProfile,
    MixedStrategy,
    RegretReport,
    best_response,
    deviation_payoff,
    deviation_payoffs,
    expected_payoff,
    regret_report,
    restrict_game,
    validate_game,
)
from approxnash.generators import (
    fixture_matching_pennies,
    fixture_parity,
    gen_uniform_payoffs,
    gen_wta,
)
from approxnash.lower_bound import certify_lower_bound, enumerate_support_sets, universal_winner_check
from approxnash.sampling import concentration_check, required_samples, sample_support
from approxnash.solvers import delta_bound, dmp_two_player, recursive_lift, staircase

__version__ = "0.1.0"
