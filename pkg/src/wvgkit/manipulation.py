"""False-name manipulations: splitting, merging and annexation.

Transforms build new games; evaluation compares exact payoffs between the
original and the transformed game. "Beneficial" always means a strictly
larger payoff; a zero delta is reported as neutral, not beneficial.

Cross-game payoffs use the normalized Banzhaf index or the Shapley-Shubik
index. The probabilistic Banzhaf index is accepted too, but note that its
denominator 2**(n-1) changes with the player count, so comparing it
across games of different sizes is a non-standard reading of "payoff".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import (
    InvalidPlayerId,
    ParameterOutOfRange,
    PartsDoNotSumToWeight,
    SingletonOrEmptyMerge,
    WeightTooSmallToSplit,
    ZeroPart,
)
from .game import PlayerId, WeightedVotingGame, validate_coalition
from .indices import IndexKind, power_index


@dataclass(frozen=True)
class SplitAction:
    """One player divides its weight over m >= 2 new identities.

    Parts are positive integers stored in canonical non-increasing order.
    """

    player: PlayerId
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if len(parts) < 2:
            raise ParameterOutOfRange("a split needs at least two parts")
        for p in parts:
            if p < 1:
                raise ZeroPart(f"split part {p} must be a positive integer")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))


@dataclass(frozen=True)
class MergeAction:
    """Two or more players voluntarily pool their weight into one bloc."""

    members: frozenset[PlayerId]

    def __post_init__(self):
        members = frozenset(int(i) for i in self.members)
        if len(members) < 2:
            raise SingletonOrEmptyMerge("a merge needs at least two players")
        object.__setattr__(self, "members", members)


@dataclass(frozen=True)
class AnnexAction:
    """One player takes over the weight of a non-empty set of others."""

    annexer: PlayerId
    annexed: frozenset[PlayerId]

    def __post_init__(self):
        annexed = frozenset(int(i) for i in self.annexed)
        if not annexed:
            raise SingletonOrEmptyMerge("annexation needs at least one target")
        if int(self.annexer) in annexed:
            raise InvalidPlayerId("annexer cannot be among the annexed players")
        object.__setattr__(self, "annexer", int(self.annexer))
        object.__setattr__(self, "annexed", annexed)


Action = SplitAction | MergeAction | AnnexAction

# remap: original player id -> the new id(s) it became
Remap = Mapping[PlayerId, tuple[PlayerId, ...]]


@dataclass(frozen=True)
class ManipulationReport:
    """Exact before/after payoffs for one manipulation."""

    action: Action
    index_kind: IndexKind
    before: Fraction
    after: Fraction
    remap: dict[PlayerId, tuple[PlayerId, ...]] = field(compare=False)
    after_game: WeightedVotingGame | None = field(default=None, compare=False)

    @property
    def delta(self) -> Fraction:
        return self.after - self.before

    @property
    def beneficial(self) -> bool:
        return self.delta > 0


def split_game(
    game: WeightedVotingGame, action: SplitAction
) -> tuple[WeightedVotingGame, dict[PlayerId, tuple[PlayerId, ...]]]:
    """Replace one player by its parts, in place, quota unchanged.

    Returns the new game and the id remap; the split player maps to the m
    fresh ids, everyone after it shifts up by m - 1.
    """
    game.check_player(action.player)
    i = action.player
    w = game.weights[i - 1]
    if sum(action.parts) != w:
        raise PartsDoNotSumToWeight(
            f"parts {action.parts} sum to {sum(action.parts)}, "
            f"player {i} has weight {w}"
        )
    m = len(action.parts)
    new_weights = game.weights[: i - 1] + action.parts + game.weights[i:]
    remap: dict[PlayerId, tuple[PlayerId, ...]] = {}
    for j in game.players:
        if j < i:
            remap[j] = (j,)
        elif j == i:
            remap[j] = tuple(range(i, i + m))
        else:
            remap[j] = (j + m - 1,)
    return WeightedVotingGame(game.quota, new_weights), remap


def merge_game(
    game: WeightedVotingGame, members: Iterable[PlayerId]
) -> tuple[WeightedVotingGame, PlayerId, dict[PlayerId, tuple[PlayerId, ...]]]:
    """Fuse a coalition into a single bloc player, quota unchanged.

    The bloc sits at the position of the smallest merged id (so it keeps
    that id); everyone else keeps relative order. Returns the new game,
    the bloc id, and the id remap.
    """
    coalition = validate_coalition(game, members)
    if len(coalition) < 2:
        raise SingletonOrEmptyMerge("a merge needs at least two players")
    anchor = min(coalition)
    bloc_weight = sum(game.weights[j - 1] for j in coalition)
    new_weights: list[int] = []
    remap: dict[PlayerId, tuple[PlayerId, ...]] = {}
    for j in game.players:
        if j == anchor:
            new_weights.append(bloc_weight)
        elif j not in coalition:
            new_weights.append(game.weights[j - 1])
        else:
            continue
        new_id = len(new_weights)
        remap[j] = (new_id,)
    bloc_id = remap[anchor][0]
    for j in coalition:
        remap[j] = (bloc_id,)
    return WeightedVotingGame(game.quota, tuple(new_weights)), bloc_id, remap


def evaluate_split(
    game: WeightedVotingGame,
    action: SplitAction,
    index_kind: IndexKind = IndexKind.BANZHAF,
    method: str = "auto",
    backend: str | None = None,
) -> ManipulationReport:
    """Payoff of the split player before vs. the sub-players' total after."""
    before = power_index(game, index_kind, method, backend=backend)[action.player]
    new_game, remap = split_game(game, action)
    after_vec = power_index(new_game, index_kind, method, backend=backend)
    after = sum((after_vec[j] for j in remap[action.player]), Fraction(0))
    return ManipulationReport(action, index_kind, before, after, remap, new_game)


def evaluate_merge(
    game: WeightedVotingGame,
    members: Iterable[PlayerId],
    index_kind: IndexKind = IndexKind.BANZHAF,
    method: str = "auto",
    backend: str | None = None,
) -> ManipulationReport:
    """Members' combined payoff before vs. the bloc's payoff after."""
    action = MergeAction(frozenset(members))
    before_vec = power_index(game, index_kind, method, backend=backend)
    before = sum((before_vec[j] for j in action.members), Fraction(0))
    new_game, bloc_id, remap = merge_game(game, action.members)
    after = power_index(new_game, index_kind, method, backend=backend)[bloc_id]
    return ManipulationReport(action, index_kind, before, after, remap, new_game)


def evaluate_annexation(
    game: WeightedVotingGame,
    annexer: PlayerId,
    targets: Iterable[PlayerId],
    index_kind: IndexKind = IndexKind.BANZHAF,
    method: str = "auto",
    backend: str | None = None,
) -> ManipulationReport:
    """Annexer's own payoff before vs. the bloc's payoff after.

    Differs from a voluntary merge only in the baseline: the annexed
    players' previous payoffs do not count, the annexer keeps everything.
    """
    action = AnnexAction(annexer, frozenset(targets))
    game.check_player(action.annexer)
    before = power_index(game, index_kind, method, backend=backend)[action.annexer]
    new_game, bloc_id, remap = merge_game(game, action.annexed | {action.annexer})
    after = power_index(new_game, index_kind, method, backend=backend)[bloc_id]
    return ManipulationReport(action, index_kind, before, after, remap, new_game)


def enumerate_partitions(total: int, num_parts: int) -> Iterator[tuple[int, ...]]:
    """All partitions of `total` into exactly `num_parts` positive parts.

    Tuples are non-increasing and appear in decreasing lexicographic
    order. Empty when num_parts > total.
    """
    if total < 1 or num_parts < 1:
        raise ParameterOutOfRange("total and num_parts must be positive")

    def descend(remaining: int, parts_left: int, cap: int) -> Iterator[tuple[int, ...]]:
        if parts_left == 1:
            if remaining <= cap:
                yield (remaining,)
            return
        highest = min(cap, remaining - parts_left + 1)
        lowest = -(-remaining // parts_left)
        for first in range(highest, lowest - 1, -1):
            for rest in descend(remaining - first, parts_left - 1, first):
                yield (first,) + rest

    return descend(total, num_parts, total)


def best_split(
    game: WeightedVotingGame,
    player: PlayerId,
    max_parts: int,
    index_kind: IndexKind = IndexKind.BANZHAF,
    method: str = "auto",
    backend: str | None = None,
) -> ManipulationReport | None:
    """Search every split of the player into 2..max_parts integer parts.

    Returns None when no split is strictly beneficial, otherwise the
    report with the largest after-payoff. Ties keep the first candidate
    in enumeration order (fewer parts first, then decreasing lexicographic),
    so the result does not depend on evaluation order.
    """
    game.check_player(player)
    if max_parts < 2:
        raise ParameterOutOfRange("max_parts must be at least 2")
    w = game.weights[player - 1]
    if w < 2:
        raise WeightTooSmallToSplit(
            f"player {player} has weight {w}; nothing to split"
        )
    before = power_index(game, index_kind, method, backend=backend)[player]
    best: ManipulationReport | None = None
    for parts_count in range(2, max_parts + 1):
        for parts in enumerate_partitions(w, parts_count):
            action = SplitAction(player, parts)
            new_game, remap = split_game(game, action)
            after_vec = power_index(new_game, index_kind, method, backend=backend)
            after = sum((after_vec[j] for j in remap[player]), Fraction(0))
            if after <= before:
                continue
            if best is None or after > best.after:
                best = ManipulationReport(
                    action, index_kind, before, after, remap, new_game
                )
    return best


def scan_annexation_nonmonotonicity(
    game: WeightedVotingGame,
    player: PlayerId,
    index_kind: IndexKind = IndexKind.BANZHAF,
    method: str = "auto",
    backend: str | None = None,
) -> list[tuple[PlayerId, PlayerId]]:
    """Witnesses that annexing a lighter player can pay more than a heavier one.

    Returns all ordered pairs (j, k) of potential targets with w_j >= w_k
    where annexing k alone yields a strictly higher payoff than annexing
    j alone.
    """
    game.check_player(player)
    payoff: dict[PlayerId, Fraction] = {}
    for j in game.players:
        if j == player:
            continue
        payoff[j] = evaluate_annexation(
            game, player, {j}, index_kind, method, backend
        ).after
    witnesses = [
        (j, k)
        for j in payoff
        for k in payoff
        if j != k and game.weights[j - 1] >= game.weights[k - 1]
        and payoff[k] > payoff[j]
    ]
    return sorted(witnesses)


def annexation_advisor(
    game: WeightedVotingGame, player: PlayerId, weight_budget: int
) -> frozenset[PlayerId]:
    """Greedy pick of annexation targets under a total-weight budget.

    Grabs the heaviest affordable player first (smaller id on ties), which
    favours reaching a weight with as few players as possible: annexing
    few heavy players feeds less power to the bystanders than annexing
    many light ones. Heuristic only, no optimality guarantee. Zero-weight
    players are never proposed.
    """
    game.check_player(player)
    if weight_budget < 0:
        raise ParameterOutOfRange("weight budget must be non-negative")
    order = sorted(
        (j for j in game.players if j != player and game.weights[j - 1] > 0),
        key=lambda j: (-game.weights[j - 1], j),
    )
    chosen: list[PlayerId] = []
    remaining = weight_budget
    for j in order:
        w = game.weights[j - 1]
        if w <= remaining:
            chosen.append(j)
            remaining -= w
    return frozenset(chosen)


def unanimity_payoffs(
    n: int, action: str, size: int
) -> tuple[Fraction, Fraction]:
    """Closed-form (before, after) payoffs in an n-player unanimity game.

    Every player's payoff is 1/n there, for Banzhaf and Shapley-Shubik
    alike, so the formulas hold for both:

    - "split" with size = m extra identities: 1/n -> (m+1)/(n+m);
    - "merge" of size = k players: k/n -> 1/(n-k+1);
    - "annex" ending in a bloc of size = k: 1/n -> 1/(n-k+1).
    """
    if n < 2:
        raise ParameterOutOfRange("need at least two players")
    if action == "split":
        if size < 1:
            raise ParameterOutOfRange("split needs at least one extra identity")
        return Fraction(1, n), Fraction(size + 1, n + size)
    if action == "merge":
        if not 2 <= size <= n:
            raise ParameterOutOfRange("merge size must be within 2..n")
        return Fraction(size, n), Fraction(1, n - size + 1)
    if action == "annex":
        if not 2 <= size <= n:
            raise ParameterOutOfRange("bloc size must be within 2..n")
        return Fraction(1, n), Fraction(1, n - size + 1)
    raise ParameterOutOfRange(
        f"action must be split, merge or annex; got {action!r}"
    )
