"""Brute-force reference computations, written without the production contraction code."""

import itertools
import math


def flat_payoff(flat, k, n, player, choices):
    index = 0
    for c in choices:
        index = index * n + c
    return flat[player * n**k + index]


def brute_deviation(flat, k, n, probs, player, pure):
    total = 0.0
    for choices in itertools.product(range(n), repeat=k):
        if choices[player] != pure:
            continue
        weight = 1.0
        for q in range(k):
            if q != player:
                weight *= probs[q][choices[q]]
        total += weight * flat_payoff(flat, k, n, player, choices)
    return total


def brute_expected(flat, k, n, probs, player):
    total = 0.0
    for choices in itertools.product(range(n), repeat=k):
        weight = math.prod(probs[q][choices[q]] for q in range(k))
        total += weight * flat_payoff(flat, k, n, player, choices)
    return total


def brute_regrets(flat, k, n, probs):
    regrets = []
    for p in range(k):
        best = max(brute_deviation(flat, k, n, probs, p, j) for j in range(n))
        regrets.append(best - brute_expected(flat, k, n, probs, p))
    return regrets, max(regrets)
