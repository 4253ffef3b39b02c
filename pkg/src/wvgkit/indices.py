"""Power indices in exact rational arithmetic.

Raw counts are arbitrary-precision integers; every index value is a
Fraction, so equality tests and cross-game comparisons are crisp. Decimal
strings only appear at the output boundary (see textio).

Each index is available through two independent engines, "enum" (the
brute-force oracle, capped by the enumeration limit) and "dp" (the
pseudo-polynomial counting tables, uncapped). They agree exactly on every
game. "auto" picks enum for tiny games and dp otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import NamedTuple

from . import counting
from .errors import ParameterOutOfRange
from .game import WeightedVotingGame


class IndexKind(enum.Enum):
    BANZHAF = "banzhaf"
    BANZHAF_PROB = "banzhaf-prob"
    SHAPLEY_SHUBIK = "shapley-shubik"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class CriticalityCounts:
    """Per-player raw swing counts (eta_i), exact integers."""

    eta: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.eta)


@dataclass(frozen=True)
class ShapleyRawCounts:
    """Per-player ordering-weighted pivot counts (kappa_i); they sum to n!."""

    kappa: tuple[int, ...]


@dataclass(frozen=True)
class PowerIndexVector:
    """Exact per-player index values tagged with the index kind."""

    kind: IndexKind
    values: tuple[Fraction, ...]

    def __getitem__(self, player: int) -> Fraction:
        """Value of a 1-based player id."""
        return self.values[player - 1]


class BanzhafResult(NamedTuple):
    counts: CriticalityCounts
    normalized: PowerIndexVector
    probabilistic: PowerIndexVector


class ShapleyResult(NamedTuple):
    counts: ShapleyRawCounts
    index: PowerIndexVector


_METHODS = ("enum", "dp", "auto")


def _resolve_method(game: WeightedVotingGame, method: str) -> str:
    if method not in _METHODS:
        raise ParameterOutOfRange(
            f"method must be one of {', '.join(_METHODS)}; got {method!r}"
        )
    if method == "auto":
        return "enum" if game.n <= counting._PYTHON_WALK_MAX else "dp"
    return method


def criticality_counts(
    game: WeightedVotingGame,
    method: str = "dp",
    limit: int | None = None,
    backend: str | None = None,
) -> CriticalityCounts:
    method = _resolve_method(game, method)
    if method == "enum":
        eta = counting.eta_enum(game, limit, backend)
    else:
        eta = counting.eta_dp(game, backend)
    return CriticalityCounts(tuple(eta))


def compute_banzhaf(
    game: WeightedVotingGame,
    method: str = "dp",
    limit: int | None = None,
    backend: str | None = None,
) -> BanzhafResult:
    """Raw swing counts plus the normalized and probabilistic Banzhaf vectors.

    normalized_i = eta_i / sum(eta); probabilistic_i = eta_i / 2**(n-1).
    """
    counts = criticality_counts(game, method, limit, backend)
    total = counts.total
    denom = 1 << (game.n - 1)
    normalized = PowerIndexVector(
        IndexKind.BANZHAF, tuple(Fraction(e, total) for e in counts.eta)
    )
    probabilistic = PowerIndexVector(
        IndexKind.BANZHAF_PROB, tuple(Fraction(e, denom) for e in counts.eta)
    )
    return BanzhafResult(counts, normalized, probabilistic)


def compute_shapley(
    game: WeightedVotingGame,
    method: str = "dp",
    limit: int | None = None,
    backend: str | None = None,
) -> ShapleyResult:
    """Pivot counts and the Shapley-Shubik vector phi_i = kappa_i / n!."""
    method = _resolve_method(game, method)
    if method == "enum":
        by_size = counting.size_swing_counts_enum(game, limit, backend)
    else:
        by_size = counting.size_swing_counts_dp(game, backend)
    kappa = counting.kappa_from_size_counts(game.n, by_size)
    n_fact = factorial(game.n)
    index = PowerIndexVector(
        IndexKind.SHAPLEY_SHUBIK, tuple(Fraction(k, n_fact) for k in kappa)
    )
    return ShapleyResult(ShapleyRawCounts(tuple(kappa)), index)


def power_index(
    game: WeightedVotingGame,
    kind: IndexKind = IndexKind.BANZHAF,
    method: str = "auto",
    limit: int | None = None,
    backend: str | None = None,
) -> PowerIndexVector:
    """The index vector of the requested kind."""
    if kind is IndexKind.SHAPLEY_SHUBIK:
        return compute_shapley(game, method, limit, backend).index
    result = compute_banzhaf(game, method, limit, backend)
    return result.normalized if kind is IndexKind.BANZHAF else result.probabilistic


def is_dummy(
    game: WeightedVotingGame,
    player: int,
    method: str = "auto",
    backend: str | None = None,
) -> bool:
    """True when the player is critical for no coalition (eta_i = 0)."""
    game.check_player(player)
    counts = criticality_counts(game, method, backend=backend)
    return counts.eta[player - 1] == 0
