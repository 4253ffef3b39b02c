"""Deliberately naive reference implementations used to derive and freeze
expected values. They share no code with the package: plain itertools
sweeps, no counting tables, no bit tricks."""

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial


def naive_eta(quota, weights):
    """Swing counts by per-player sweep over all coalitions of the others."""
    n = len(weights)
    eta = [0] * n
    for i in range(n):
        others = [j for j in range(n) if j != i]
        for r in range(n):
            for combo in combinations(others, r):
                w = sum(weights[j] for j in combo)
                if w < quota <= w + weights[i]:
                    eta[i] += 1
    return eta


def naive_banzhaf(quota, weights):
    eta = naive_eta(quota, weights)
    total = sum(eta)
    return [Fraction(e, total) for e in eta]


def naive_kappa(quota, weights):
    """Pivot counts. Order-by-order for small n, else a combination sweep."""
    n = len(weights)
    if n <= 8:
        kappa = [0] * n
        for order in permutations(range(n)):
            running = 0
            for j in order:
                if running < quota <= running + weights[j]:
                    kappa[j] += 1
                    break
                running += weights[j]
        return kappa
    kappa = [0] * n
    for i in range(n):
        others = [j for j in range(n) if j != i]
        for r in range(n):
            weight_r = factorial(r) * factorial(n - 1 - r)
            for combo in combinations(others, r):
                w = sum(weights[j] for j in combo)
                if w < quota <= w + weights[i]:
                    kappa[i] += weight_r
    return kappa


def naive_shapley(quota, weights):
    kappa = naive_kappa(quota, weights)
    n_fact = factorial(len(weights))
    return [Fraction(k, n_fact) for k in kappa]


def has_equal_sum_partition(values):
    """Exhaustive subset-sum check: can the multiset split into two
    equal-sum halves? Desk scale only."""
    total = sum(values)
    if total % 2:
        return False
    target = total // 2
    reachable = {0}
    for v in values:
        reachable |= {r + v for r in reachable}
    return target in reachable


def bigint_eta_dp(quota, weights):
    """Swing counts via plain Python big-int tables, one full rebuild per
    player (no modular arithmetic, no deconvolution)."""
    n = len(weights)
    eta = [0] * n
    for i in range(n):
        table = [0] * quota
        table[0] = 1
        for j, w in enumerate(weights):
            if j == i:
                continue
            if w == 0:
                table = [2 * c for c in table]
                continue
            for pos in range(quota - 1, w - 1, -1):
                table[pos] += table[pos - w]
        lo = max(0, quota - weights[i])
        if weights[i] > 0:
            eta[i] = sum(table[lo:quota])
    return eta
