"""Vectorised numpy kernels: the fallback backend.

Shares its contract with the numba backend:

- subset_swing_size_counts: brute-force walk of all 2**n coalitions,
  counting, per player i and size s, the losing coalitions without i that
  player i would tip over the quota. Exact in int64 (counts < 2**n).
- weight_table_mod / eta_window_sums_mod: subset-sum counting tables and
  swing windows modulo a 30-bit prime.
- shapley_window_sums_mod: the size-and-weight refinement of the same
  tables, again modulo a prime.

Weights handed to the mod-p functions are pre-clamped to the quota by the
caller, so every shift index fits comfortably in int64.
"""

from __future__ import annotations

import numpy as np

_LOW_BITS = 16


def subset_swing_size_counts(weights: np.ndarray, quota: int) -> np.ndarray:
    """counts[i, s] = number of losing S (i not in S, |S| = s) that i completes."""
    n = int(weights.shape[0])
    nlo = min(n, _LOW_BITS)
    lo = np.arange(1 << nlo, dtype=np.int64)
    lo_weight = np.zeros(1 << nlo, dtype=np.int64)
    lo_size = np.zeros(1 << nlo, dtype=np.int64)
    lo_absent = []
    for b in range(nlo):
        bit = (lo >> b) & 1
        lo_weight += bit * int(weights[b])
        lo_size += bit
        lo_absent.append(bit == 0)

    counts = np.zeros((n, n), dtype=np.int64)
    nhi = n - nlo
    for high in range(1 << nhi):
        hi_weight = 0
        hi_size = 0
        for b in range(nhi):
            if (high >> b) & 1:
                hi_weight += int(weights[nlo + b])
                hi_size += 1
        weight = lo_weight + hi_weight
        size = lo_size + hi_size
        losing = weight < quota
        for i in range(n):
            if i >= nlo and (high >> (i - nlo)) & 1:
                continue
            swing = losing & (weight >= quota - int(weights[i]))
            if i < nlo:
                swing &= lo_absent[i]
            picked = size[swing]
            if picked.size:
                counts[i] += np.bincount(picked, minlength=n)
    return counts


def weight_table_mod(weights: np.ndarray, quota: int, prime: int) -> np.ndarray:
    """table[w] = number of coalitions of total weight exactly w (w < quota), mod prime."""
    length = int(quota)
    table = np.zeros(length, dtype=np.int64)
    table[0] = 1
    for w in weights:
        w = int(w)
        if w >= length:
            continue
        if w == 0:
            table = (table * 2) % prime
        else:
            table[w:] = (table[w:] + table[: length - w]) % prime
    return table


def _deconvolve_mod(table: np.ndarray, w: int, prime: int) -> np.ndarray:
    """Remove one player of weight w from a subset-sum table.

    Solves out[j] = table[j] - out[j - w] by folding the table into rows of
    width w: along each residue class the recurrence is an alternating
    prefix sum, which cumsum handles in bulk. Partial sums stay below
    2**61 because the table is shorter than 2**31 and entries are < 2**30.
    """
    length = table.shape[0]
    if w >= length:
        return table.copy()
    rows = -(-length // w)
    padded = np.zeros(rows * w, dtype=np.int64)
    padded[:length] = table
    folded = padded.reshape(rows, w)
    sign = np.where(np.arange(rows, dtype=np.int64) % 2 == 0, 1, -1)
    prefix = np.cumsum(folded * sign[:, None], axis=0)
    out = (prefix * sign[:, None]) % prime
    return out.reshape(-1)[:length]


def player_weight_table_mod(
    weights: np.ndarray, quota: int, prime: int, player_index: int
) -> np.ndarray:
    """Subset-sum table over everyone except one player, via deconvolution."""
    table = weight_table_mod(weights, quota, prime)
    return _deconvolve_mod(table, int(weights[player_index]), prime)


def eta_window_sums_mod(weights: np.ndarray, quota: int, prime: int) -> np.ndarray:
    """Per-player swing counts mod prime.

    Swings of player i are the coalitions without i whose weight lands in
    [quota - w_i, quota - 1].
    """
    n = int(weights.shape[0])
    table = weight_table_mod(weights, quota, prime)
    out = np.zeros(n, dtype=np.int64)
    for i in range(n):
        w = int(weights[i])
        if w == 0:
            continue
        others = _deconvolve_mod(table, w, prime)
        lo = quota - w if w < quota else 0
        out[i] = int(others[lo:quota].sum() % prime)
    return out


def shapley_window_sums_mod(weights: np.ndarray, quota: int, prime: int) -> np.ndarray:
    """windows[i, s] = swings of player i against size-s coalitions, mod prime."""
    n = int(weights.shape[0])
    length = int(quota)
    grid = np.zeros((n + 1, length), dtype=np.int64)
    grid[0, 0] = 1
    for w in weights:
        w = int(w)
        if w >= length:
            continue
        if w == 0:
            grid[1:] = (grid[1:] + grid[:-1]) % prime
        else:
            grid[1:, w:] = (grid[1:, w:] + grid[:-1, : length - w]) % prime

    windows = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        w = int(weights[i])
        if w == 0:
            continue
        lo = quota - w if w < quota else 0
        prev = grid[0].copy()
        windows[i, 0] = int(prev[lo:].sum() % prime)
        for s in range(1, n):
            cur = grid[s].copy()
            if w < length:
                cur[w:] = (grid[s, w:] - prev[: length - w]) % prime
            windows[i, s] = int(cur[lo:].sum() % prime)
            prev = cur
    return windows
