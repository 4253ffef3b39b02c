"""JIT-compiled kernels: the default backend when numba is installed.

Same contract as the numpy module; see there for the semantics. Loops are
written flat so numba compiles them to tight machine code. All kernels are
cached on disk, so the compile cost is paid once per machine.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _subset_swing_size_counts(weights, quota):
    n = weights.shape[0]
    counts = np.zeros((n, n), dtype=np.int64)
    # Gray-code walk: one membership flip per step keeps the running
    # weight and size current while visiting every coalition once.
    mask = np.int64(0)
    weight = np.int64(0)
    size = 0
    if weight < quota:
        for i in range(n):
            if weight + weights[i] >= quota:
                counts[i, 0] += 1
    total = np.int64(1) << n
    for step in range(1, total):
        b = 0
        while ((step >> b) & 1) == 0:
            b += 1
        bit = np.int64(1) << b
        mask ^= bit
        if mask & bit:
            weight += weights[b]
            size += 1
        else:
            weight -= weights[b]
            size -= 1
        if weight < quota:
            for i in range(n):
                if ((mask >> i) & 1) == 0 and weight + weights[i] >= quota:
                    counts[i, size] += 1
    return counts


@njit(cache=True)
def _weight_table_mod(weights, quota, prime):
    length = quota
    table = np.zeros(length, dtype=np.int64)
    table[0] = 1
    for k in range(weights.shape[0]):
        w = weights[k]
        if w >= length:
            continue
        if w == 0:
            for j in range(length):
                table[j] = (2 * table[j]) % prime
        else:
            for j in range(length - 1, w - 1, -1):
                t = table[j] + table[j - w]
                if t >= prime:
                    t -= prime
                table[j] = t
    return table


@njit(cache=True)
def _deconvolve_mod(table, w, prime):
    length = table.shape[0]
    out = np.empty(length, dtype=np.int64)
    if w >= length:
        for j in range(length):
            out[j] = table[j]
        return out
    for j in range(length):
        if j < w:
            out[j] = table[j]
        else:
            c = table[j] - out[j - w]
            if c < 0:
                c += prime
            out[j] = c
    return out


@njit(cache=True)
def _eta_window_sums_mod(weights, quota, prime):
    n = weights.shape[0]
    table = _weight_table_mod(weights, quota, prime)
    out = np.zeros(n, dtype=np.int64)
    for i in range(n):
        w = weights[i]
        if w == 0:
            continue
        others = _deconvolve_mod(table, w, prime)
        lo = quota - w if w < quota else 0
        acc = np.int64(0)
        for j in range(lo, quota):
            acc += others[j]
        out[i] = acc % prime
    return out


@njit(cache=True)
def _shapley_window_sums_mod(weights, quota, prime):
    n = weights.shape[0]
    length = quota
    grid = np.zeros((n + 1, length), dtype=np.int64)
    grid[0, 0] = 1
    for k in range(n):
        w = weights[k]
        if w >= length:
            continue
        for s in range(n, 0, -1):
            if w == 0:
                for j in range(length):
                    t = grid[s, j] + grid[s - 1, j]
                    if t >= prime:
                        t -= prime
                    grid[s, j] = t
            else:
                for j in range(length - 1, w - 1, -1):
                    t = grid[s, j] + grid[s - 1, j - w]
                    if t >= prime:
                        t -= prime
                    grid[s, j] = t

    windows = np.zeros((n, n), dtype=np.int64)
    prev = np.empty(length, dtype=np.int64)
    cur = np.empty(length, dtype=np.int64)
    for i in range(n):
        w = weights[i]
        if w == 0:
            continue
        lo = quota - w if w < quota else 0
        for j in range(length):
            prev[j] = grid[0, j]
        acc = np.int64(0)
        for j in range(lo, length):
            acc += prev[j]
        windows[i, 0] = acc % prime
        for s in range(1, n):
            for j in range(length):
                if j < w:
                    cur[j] = grid[s, j]
                else:
                    c = grid[s, j] - prev[j - w]
                    if c < 0:
                        c += prime
                    cur[j] = c
            acc = np.int64(0)
            for j in range(lo, length):
                acc += cur[j]
            windows[i, s] = acc % prime
            prev, cur = cur, prev
    return windows


def subset_swing_size_counts(weights: np.ndarray, quota: int) -> np.ndarray:
    return _subset_swing_size_counts(weights, np.int64(quota))


def weight_table_mod(weights: np.ndarray, quota: int, prime: int) -> np.ndarray:
    return _weight_table_mod(weights, np.int64(quota), np.int64(prime))


def player_weight_table_mod(
    weights: np.ndarray, quota: int, prime: int, player_index: int
) -> np.ndarray:
    table = _weight_table_mod(weights, np.int64(quota), np.int64(prime))
    return _deconvolve_mod(table, np.int64(weights[player_index]), np.int64(prime))


def eta_window_sums_mod(weights: np.ndarray, quota: int, prime: int) -> np.ndarray:
    return _eta_window_sums_mod(weights, np.int64(quota), np.int64(prime))


def shapley_window_sums_mod(weights: np.ndarray, quota: int, prime: int) -> np.ndarray:
    return _shapley_window_sums_mod(weights, np.int64(quota), np.int64(prime))
