"""Timing of the two engines across game sizes and kernel backends."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .backend import available_backends
from .counting import enumeration_limit, eta_dp, eta_enum
from .instances import random_game


@dataclass
class BenchRow:
    n: int
    quota: int
    total_weight: int
    timings: dict[str, float | None]  # label -> best seconds (None = skipped)


def _best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def run_bench(
    sizes: list[int],
    max_weight: int = 50,
    seed: int = 1,
    backends: list[str] | None = None,
    repeat: int = 2,
) -> list[BenchRow]:
    """Time eta_enum and eta_dp per size on every requested backend.

    Each backend is warmed once per engine before timing so JIT compile
    time never pollutes a measurement.
    """
    if backends is None:
        backends = list(available_backends())
    cap = enumeration_limit()
    rows = []
    warm = random_game(11, 5, 0)
    for b in backends:
        eta_enum(warm, backend=b)
        eta_dp(warm, backend=b)
    for n in sizes:
        game = random_game(n, max_weight, seed + n, proper_only=True)
        timings: dict[str, float | None] = {}
        for b in backends:
            if n <= cap:
                timings[f"enum/{b}"] = _best_of(
                    lambda: eta_enum(game, backend=b), repeat
                )
            else:
                timings[f"enum/{b}"] = None
            timings[f"dp/{b}"] = _best_of(lambda: eta_dp(game, backend=b), repeat)
        rows.append(BenchRow(game.n, game.quota, game.total_weight, timings))
    return rows


def format_bench_table(rows: list[BenchRow]) -> str:
    if not rows:
        return "nothing to bench"
    labels = list(rows[0].timings)
    header = ["n", "quota", "total"] + labels
    table = [header]
    for row in rows:
        cells = [str(row.n), str(row.quota), str(row.total_weight)]
        for label in labels:
            t = row.timings[label]
            cells.append("-" if t is None else f"{t * 1000:.2f} ms")
        table.append(cells)
    widths = [max(len(r[c]) for r in table) for c in range(len(header))]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in table
    )
