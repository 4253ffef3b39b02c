"""Exact swing counting.

Two independent routes produce the same arbitrary-precision counts:

- enumeration: a brute-force walk over all 2**n coalitions (the oracle,
  capped by a configurable player limit);
- dynamic programming: subset-sum counting tables of length quota,
  pseudo-polynomial in the quota and exact at any size.

The DP runs in int64 modulo several 30-bit primes (picked so that their
product exceeds every possible count) and lifts the residues back to true
integers with the CRT. Per-player tables come from removing one player
out of the global table by deconvolution; rebuilding the table without
that player gives the same numbers and is kept around as a cross-check.

Weights at or above the quota are interchangeable with weight == quota,
so the DP clamps them; that keeps every array index inside int64 whenever
the table is allocatable at all.
"""

from __future__ import annotations

import os
from math import factorial

import numpy as np

from ._modmath import crt, modulus_set
from .backend import get_kernels
from .errors import TooManyPlayersForEnumeration
from .game import WeightedVotingGame

DEFAULT_ENUM_LIMIT = 26
ENUM_LIMIT_ENV = "WVGKIT_ENUM_LIMIT"

# Below this size the plain-Python walk beats kernel dispatch (and never
# pays JIT warm-up); it is also the path for weights beyond int64.
_PYTHON_WALK_MAX = 10

_INT64_SAFE = 1 << 62


def enumeration_limit(override: int | None = None) -> int:
    """Effective player cap for brute-force enumeration."""
    if override is not None:
        return int(override)
    env = os.environ.get(ENUM_LIMIT_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_ENUM_LIMIT


def _fits_int64(game: WeightedVotingGame) -> bool:
    return game.total_weight < _INT64_SAFE


def _python_size_swings(quota: int, weights: tuple[int, ...]) -> list[list[int]]:
    n = len(weights)
    counts = [[0] * n for _ in range(n)]
    mask = 0
    weight = 0
    size = 0
    if weight < quota:
        for i in range(n):
            if weight + weights[i] >= quota:
                counts[i][0] += 1
    for step in range(1, 1 << n):
        b = (step & -step).bit_length() - 1
        bit = 1 << b
        mask ^= bit
        if mask & bit:
            weight += weights[b]
            size += 1
        else:
            weight -= weights[b]
            size -= 1
        if weight < quota:
            for i in range(n):
                if not (mask >> i) & 1 and weight + weights[i] >= quota:
                    counts[i][size] += 1
    return counts


def size_swing_counts_enum(
    game: WeightedVotingGame,
    limit: int | None = None,
    backend: str | None = None,
) -> list[list[int]]:
    """counts[i][s]: losing coalitions of size s, without player i+1, that
    the player would tip over the quota. Sizes run 0..n-1."""
    n = game.n
    cap = min(enumeration_limit(limit), 62)  # 2**n must fit a subset mask
    if n > cap:
        raise TooManyPlayersForEnumeration(
            f"{n} players exceeds the enumeration limit {cap}"
        )
    if n <= _PYTHON_WALK_MAX or not _fits_int64(game):
        return _python_size_swings(game.quota, game.weights)
    kernels = get_kernels(backend)
    matrix = kernels.subset_swing_size_counts(
        np.array(game.weights, dtype=np.int64), int(game.quota)
    )
    return [[int(v) for v in row] for row in matrix]


def eta_enum(
    game: WeightedVotingGame,
    limit: int | None = None,
    backend: str | None = None,
) -> list[int]:
    """Raw swing counts by exhaustive enumeration."""
    return [sum(row) for row in size_swing_counts_enum(game, limit, backend)]


# Above this table length the int64 accumulators (sums of < 2**30 residues)
# could no longer be proven overflow-free; such a table would not fit in
# memory on anything resembling commodity hardware anyway.
_MAX_TABLE = 1 << 32


def _dp_quota(game: WeightedVotingGame) -> int:
    if game.quota > _MAX_TABLE:
        raise MemoryError(
            f"quota {game.quota} needs a counting table beyond {_MAX_TABLE} entries"
        )
    return int(game.quota)


def _effective_weights(game: WeightedVotingGame) -> np.ndarray:
    q = game.quota
    return np.array([min(w, q) for w in game.weights], dtype=np.int64)


def _moduli_for(game: WeightedVotingGame) -> list[int]:
    # every reconstructed count is below 2**n
    return modulus_set(1 << (game.n + 1))


def eta_dp(game: WeightedVotingGame, backend: str | None = None) -> list[int]:
    """Raw swing counts by subset-sum DP; equals eta_enum on every game."""
    kernels = get_kernels(backend)
    quota = _dp_quota(game)
    weights = _effective_weights(game)
    moduli = _moduli_for(game)
    residues = [kernels.eta_window_sums_mod(weights, quota, p) for p in moduli]
    return [
        crt([int(row[i]) for row in residues], moduli) for i in range(game.n)
    ]


def size_swing_counts_dp(
    game: WeightedVotingGame, backend: str | None = None
) -> list[list[int]]:
    """Same matrix as size_swing_counts_enum, via size-refined DP tables."""
    kernels = get_kernels(backend)
    quota = _dp_quota(game)
    weights = _effective_weights(game)
    moduli = _moduli_for(game)
    residues = [kernels.shapley_window_sums_mod(weights, quota, p) for p in moduli]
    n = game.n
    return [
        [crt([int(mat[i, s]) for mat in residues], moduli) for s in range(n)]
        for i in range(n)
    ]


def kappa_from_size_counts(n: int, counts: list[list[int]]) -> list[int]:
    """Ordering-weighted pivot totals: kappa_i = sum_s s!(n-1-s)! counts[i][s]."""
    fact = [factorial(t) for t in range(n)]
    return [
        sum(fact[s] * fact[n - 1 - s] * c for s, c in enumerate(row))
        for row in counts
    ]


# --- internals exposed for the table cross-check tests ---------------------


def global_table_mod(
    game: WeightedVotingGame, prime: int, backend: str | None = None
) -> np.ndarray:
    kernels = get_kernels(backend)
    return kernels.weight_table_mod(_effective_weights(game), _dp_quota(game), prime)


def player_table_mod(
    game: WeightedVotingGame,
    player: int,
    prime: int,
    via: str = "deconvolve",
    backend: str | None = None,
) -> np.ndarray:
    """Subset-sum table over everyone except `player`.

    via="deconvolve" peels the player out of the global table (the route
    the DP actually uses); via="rebuild" recomputes the table from the
    other n-1 weights. The two must agree entry for entry.
    """
    game.check_player(player)
    kernels = get_kernels(backend)
    quota = _dp_quota(game)
    weights = _effective_weights(game)
    if via == "deconvolve":
        return kernels.player_weight_table_mod(weights, quota, prime, player - 1)
    if via == "rebuild":
        reduced = np.delete(weights, player - 1)
        return kernels.weight_table_mod(reduced, quota, prime)
    raise ValueError(f"unknown table route {via!r}")
