from fractions import Fraction as F

import pytest
from oracles import has_equal_sum_partition, naive_banzhaf

from wvgkit import (
    AnnexAction,
    MergeAction,
    ParameterOutOfRange,
    PartitionInstance,
    SplitAction,
    dictator_family,
    eta_enum,
    evaluate_annexation,
    evaluate_merge,
    evaluate_split,
    is_dummy,
    new_game,
    partition_reduction,
    random_game,
    split_game,
    tight_split_family,
    unanimity_game,
)
from wvgkit.game import is_proper


class TestPartitionInstance:
    def test_total(self):
        assert PartitionInstance((1, 2, 3)).total == 6

    def test_validation(self):
        with pytest.raises(ParameterOutOfRange):
            PartitionInstance(())
        with pytest.raises(ParameterOutOfRange):
            PartitionInstance((1, 0))


class TestReductions:
    def test_split_construction(self):
        out = partition_reduction([1, 1], "split")
        assert out.game == new_game(10, [8, 8, 2])
        assert out.focus == SplitAction(3, (1, 1))

    def test_merge_construction(self):
        out = partition_reduction([1, 1], "merge")
        assert out.game == new_game(10, [8, 8, 1, 1, 1])
        assert out.focus == MergeAction(frozenset({4, 5}))

    def test_annex_construction(self):
        out = partition_reduction([1, 1], "annex")
        assert out.game == new_game(10, [8, 8, 1, 1])
        assert out.focus == AnnexAction(4, frozenset({3}))

    def test_quota_formula(self):
        out = partition_reduction([1, 2, 3], "split")
        assert out.game.quota == 26
        assert out.game.weights == (8, 16, 24, 2)

    def test_unknown_variant(self):
        with pytest.raises(ParameterOutOfRange):
            partition_reduction([1, 1], "shrink")

    def test_yes_instance_annex_and_merge(self):
        out = partition_reduction([1, 1], "annex")
        report = evaluate_annexation(out.game, out.focus.annexer, out.focus.annexed)
        assert (report.before, report.after) == (F(1, 6), F(1, 3))
        assert report.beneficial

        out = partition_reduction([1, 1], "merge")
        report = evaluate_merge(out.game, out.focus.members)
        assert (report.before, report.after) == (F(2, 7), F(1, 3))
        assert report.beneficial

    def test_yes_instance_split_is_exactly_neutral(self):
        # the weight-2 player's swing count doubles along with everyone
        # else's, so the split changes nothing
        for values in [(1, 1), (1, 1, 2)]:
            out = partition_reduction(values, "split")
            report = evaluate_split(out.game, out.focus)
            assert report.delta == 0
            assert not report.beneficial

    def test_no_instance_focus_players_are_dummies(self):
        no_instances = [(3,), (1, 2), (1, 1, 1), (1, 1, 4), (5, 5, 5, 1)]
        for values in no_instances:
            assert not has_equal_sum_partition(values)
            for variant in ("split", "merge", "annex"):
                out = partition_reduction(values, variant)
                n = out.game.n
                tail = 1 if variant == "split" else (3 if variant == "merge" else 2)
                for player in range(n - tail + 1, n + 1):
                    assert is_dummy(out.game, player)


class TestFamilies:
    def test_tight_split_family_shape(self):
        assert tight_split_family(3) == new_game(3, [2, 1, 1, 1])
        assert tight_split_family(3).n == 4
        with pytest.raises(ParameterOutOfRange):
            tight_split_family(2)

    def test_tight_split_family_top_player_share(self):
        g = tight_split_family(3)
        assert naive_banzhaf(g.quota, g.weights)[0] == F(1, 2)

    def test_tight_split_family_split_payoff(self):
        g = tight_split_family(12)
        v2, remap = split_game(g, SplitAction(1, (1, 1)))
        beta = naive_banzhaf(v2.quota, v2.weights)
        a, b = remap[1]
        assert beta[a - 1] == beta[b - 1] == F(1, 14)

    def test_dictator_family_shape(self):
        assert dictator_family(8) == new_game(12, [16, 1, 1, 1, 1, 1, 1, 1])
        with pytest.raises(ParameterOutOfRange):
            dictator_family(7)
        with pytest.raises(ParameterOutOfRange):
            dictator_family(2)

    def test_dictator_family_split_counts(self):
        g = dictator_family(8)
        assert naive_banzhaf(g.quota, g.weights)[0] == 1
        v2, remap = split_game(g, SplitAction(1, (8, 8)))
        eta = eta_enum(v2)
        a, b = remap[1]
        assert eta[a - 1] == eta[b - 1] == 128
        assert set(eta[2:]) == {40}

    def test_unanimity_game(self):
        assert unanimity_game([2, 2, 2]) == new_game(6, [2, 2, 2])
        assert unanimity_game([1]) == new_game(1, [1])
        g = unanimity_game([3, 1])
        assert naive_banzhaf(g.quota, g.weights) == [F(1, 2), F(1, 2)]
        with pytest.raises(ParameterOutOfRange):
            unanimity_game([])
        with pytest.raises(ParameterOutOfRange):
            unanimity_game([2, 0])


class TestRandomGame:
    def test_deterministic(self):
        a = random_game(5, 10, 42)
        b = random_game(5, 10, 42)
        assert a == b

    def test_different_seeds_differ_somewhere(self):
        games = {random_game(6, 50, seed) for seed in range(30)}
        assert len(games) > 1

    def test_forced_single_player(self):
        assert random_game(1, 1, 123) == new_game(1, [1])

    def test_proper_only(self):
        for seed in range(40):
            assert is_proper(random_game(4, 50, seed, proper_only=True))

    def test_bounds(self):
        for seed in range(20):
            g = random_game(7, 9, seed)
            assert all(1 <= w <= 9 for w in g.weights)
            assert 1 <= g.quota <= g.total_weight

    def test_validation(self):
        with pytest.raises(ParameterOutOfRange):
            random_game(0, 5, 1)
        with pytest.raises(ParameterOutOfRange):
            random_game(3, 0, 1)
