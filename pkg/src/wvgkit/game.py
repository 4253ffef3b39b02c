"""Weighted voting game model: games, coalitions and criticality.

A game is written [q; w_1, ..., w_n]: a coalition of players wins exactly
when its total weight reaches the quota q. Players are identified by
1-based ids. Games are immutable values; every transform elsewhere in the
package builds a new game, which makes before/after comparisons safe.

Quota and weights are plain Python integers throughout, so there is no
overflow at any magnitude.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    EmptyPlayerList,
    InvalidPlayerId,
    NegativeWeight,
    QuotaExceedsTotalWeight,
    ZeroOrNegativeQuota,
)

PlayerId = int


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{what} must be an integer, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class WeightedVotingGame:
    """A quota and an ordered tuple of non-negative integer weights.

    Invariants enforced at construction: n >= 1, quota >= 1 (the empty
    coalition loses) and quota <= total weight (the grand coalition wins).
    Weights are not required to be sorted; see canonicalize().
    """

    quota: int
    weights: tuple[int, ...]

    def __post_init__(self):
        quota = _as_int(self.quota, "quota")
        weights = tuple(_as_int(w, "weight") for w in self.weights)
        if not weights:
            raise EmptyPlayerList("a game needs at least one player")
        for w in weights:
            if w < 0:
                raise NegativeWeight(f"weight {w} is negative")
        if quota <= 0:
            raise ZeroOrNegativeQuota(f"quota {quota} must be at least 1")
        total = sum(weights)
        if quota > total:
            raise QuotaExceedsTotalWeight(
                f"quota {quota} exceeds total weight {total}"
            )
        object.__setattr__(self, "quota", quota)
        object.__setattr__(self, "weights", weights)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @property
    def players(self) -> range:
        """All player ids, 1..n."""
        return range(1, len(self.weights) + 1)

    def weight_of(self, player: PlayerId) -> int:
        self.check_player(player)
        return self.weights[player - 1]

    def check_player(self, player: PlayerId) -> None:
        if isinstance(player, bool) or not isinstance(player, numbers.Integral):
            raise InvalidPlayerId(f"player id {player!r} is not an integer")
        if not 1 <= player <= len(self.weights):
            raise InvalidPlayerId(
                f"player id {player} outside 1..{len(self.weights)}"
            )

    def coalition_weight(self, members: Iterable[PlayerId]) -> int:
        return sum(self.weights[i - 1] for i in validate_coalition(self, members))

    def __str__(self) -> str:
        return f"[{self.quota};{','.join(str(w) for w in self.weights)}]"


def new_game(quota: int, weights: Iterable[int]) -> WeightedVotingGame:
    """Validate and build a game [quota; weights...]."""
    return WeightedVotingGame(quota, tuple(weights))


def validate_coalition(
    game: WeightedVotingGame, members: Iterable[PlayerId]
) -> frozenset[PlayerId]:
    """Check every member id against the game and return the coalition as a
    frozenset (which also guarantees there are no duplicates)."""
    coalition = frozenset(members)
    for i in coalition:
        game.check_player(i)
    return coalition


def is_winning(game: WeightedVotingGame, members: Iterable[PlayerId]) -> bool:
    """True when the coalition's total weight reaches the quota."""
    return game.coalition_weight(members) >= game.quota


def critical_players(
    game: WeightedVotingGame, members: Iterable[PlayerId]
) -> frozenset[PlayerId]:
    """Swing players with respect to the given coalition.

    For a winning coalition: the members whose removal makes it lose.
    For a losing coalition: the outsiders whose addition makes it win.
    """
    coalition = validate_coalition(game, members)
    weight = sum(game.weights[i - 1] for i in coalition)
    if weight >= game.quota:
        return frozenset(
            i for i in coalition if weight - game.weights[i - 1] < game.quota
        )
    return frozenset(
        i
        for i in game.players
        if i not in coalition and weight + game.weights[i - 1] >= game.quota
    )


def is_proper(game: WeightedVotingGame) -> bool:
    """True when no two disjoint coalitions can both win (2q > total)."""
    return 2 * game.quota > game.total_weight


def is_unanimity(game: WeightedVotingGame) -> bool:
    """True when only the grand coalition wins (quota equals total weight)."""
    return game.quota == game.total_weight


def is_dictator(game: WeightedVotingGame, player: PlayerId) -> bool:
    """True when the player alone wins and everyone else together loses."""
    w = game.weight_of(player)
    return w >= game.quota and game.total_weight - w < game.quota


def canonicalize(
    game: WeightedVotingGame,
) -> tuple[WeightedVotingGame, tuple[PlayerId, ...]]:
    """Sort weights non-increasingly (stable) and report the permutation.

    Returns (sorted_game, perm) where perm[new_id - 1] is the original id
    of the player now sitting at new_id. Ties keep their original order.
    """
    order = sorted(game.players, key=lambda i: (-game.weights[i - 1], i))
    sorted_game = WeightedVotingGame(
        game.quota, tuple(game.weights[i - 1] for i in order)
    )
    return sorted_game, tuple(order)
