"""Game factories: named families, reduction instances, random games.

The reduction builders turn an integer multiset A = {a_1..a_k} into a
game plus a ready-made manipulation question whose answer tracks whether
A splits into two equal-sum halves. They are desk-scale test factories:
whether the focus action is actually beneficial is measured, never
assumed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .errors import ParameterOutOfRange
from .game import WeightedVotingGame
from .manipulation import Action, AnnexAction, MergeAction, SplitAction

REDUCTION_VARIANTS = ("split", "merge", "annex", "ss-merge")


@dataclass(frozen=True)
class PartitionInstance:
    """A multiset of positive integers, the input of the reductions."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values:
            raise ParameterOutOfRange("need at least one value")
        if any(v < 1 for v in values):
            raise ParameterOutOfRange("values must be positive integers")
        object.__setattr__(self, "values", values)

    @property
    def total(self) -> int:
        return sum(self.values)


@dataclass(frozen=True)
class ReductionOutput:
    """A constructed game together with the manipulation it asks about."""

    game: WeightedVotingGame
    variant: str
    focus: Action


def partition_reduction(
    instance: PartitionInstance | Iterable[int], variant: str
) -> ReductionOutput:
    """Build the reduction game for one variant.

    All variants scale the values by 8 and set quota = half the scaled
    total plus 2; they differ in the tail of small players and in the
    focus question:

    - "split": tail (2,), the weight-2 player splits into (1, 1);
    - "merge"/"ss-merge": tail (1, 1, 1), the last two unit players merge;
    - "annex": tail (1, 1), the last unit player annexes the other.
    """
    if not isinstance(instance, PartitionInstance):
        instance = PartitionInstance(tuple(instance))
    if variant not in REDUCTION_VARIANTS:
        raise ParameterOutOfRange(
            f"variant must be one of {', '.join(REDUCTION_VARIANTS)}; got {variant!r}"
        )
    scaled = tuple(8 * a for a in instance.values)
    quota = 4 * instance.total + 2
    if variant == "split":
        weights = scaled + (2,)
        n = len(weights)
        focus: Action = SplitAction(n, (1, 1))
    elif variant in ("merge", "ss-merge"):
        weights = scaled + (1, 1, 1)
        n = len(weights)
        focus = MergeAction(frozenset({n - 1, n}))
    else:
        weights = scaled + (1, 1)
        n = len(weights)
        focus = AnnexAction(n, frozenset({n - 1}))
    return ReductionOutput(WeightedVotingGame(quota, weights), variant, focus)


def tight_split_family(n: int) -> WeightedVotingGame:
    """[n; 2, 1, ..., 1] with n+1 players.

    Splitting the weight-2 player into (1, 1) pushes the payoff ratio of
    the split toward the theoretical ceiling of 2 as n grows.
    """
    if n < 3:
        raise ParameterOutOfRange("family defined for n >= 3")
    return WeightedVotingGame(n, (2,) + (1,) * n)


def dictator_family(n: int) -> WeightedVotingGame:
    """[3n/2; 2n, 1, ..., 1] with n players, n even.

    Player 1 is a dictator; splitting it in half is maximally costly,
    shrinking its payoff by a factor on the order of sqrt(n).
    """
    if n < 4 or n % 2:
        raise ParameterOutOfRange("family defined for even n >= 4")
    return WeightedVotingGame(3 * n // 2, (2 * n,) + (1,) * (n - 1))


def unanimity_game(weights: Iterable[int]) -> WeightedVotingGame:
    """Quota equal to the total weight: only the grand coalition wins."""
    weights = tuple(int(w) for w in weights)
    if not weights:
        raise ParameterOutOfRange("need at least one weight")
    if any(w < 1 for w in weights):
        raise ParameterOutOfRange("unanimity weights must be positive")
    return WeightedVotingGame(sum(weights), weights)


def random_game(
    n: int,
    max_weight: int,
    seed: int | str,
    proper_only: bool = False,
) -> WeightedVotingGame:
    """Seed-reproducible random game.

    Uses the Mersenne Twister (random.Random) so the same seed yields the
    same game on every platform. Weights are uniform on 1..max_weight;
    the quota is uniform on 1..total, or on floor(total/2)+1..total when
    proper_only is set.
    """
    if n < 1 or max_weight < 1:
        raise ParameterOutOfRange("need n >= 1 and max_weight >= 1")
    rng = random.Random(seed)
    weights = tuple(rng.randint(1, max_weight) for _ in range(n))
    total = sum(weights)
    quota = rng.randint(total // 2 + 1, total) if proper_only else rng.randint(1, total)
    return WeightedVotingGame(quota, weights)
