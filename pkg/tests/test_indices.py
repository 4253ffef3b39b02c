import random
from fractions import Fraction as F
from math import factorial

import pytest
from oracles import naive_eta, naive_shapley

from wvgkit import (
    IndexKind,
    InvalidPlayerId,
    compute_banzhaf,
    compute_shapley,
    eta_dp,
    eta_enum,
    is_dictator,
    is_dummy,
    new_game,
    power_index,
    random_game,
)
from wvgkit.errors import ParameterOutOfRange


class TestEta:
    def test_symmetric_three_players(self):
        g = new_game(5, [2, 2, 2])
        assert eta_enum(g) == [1, 1, 1]
        assert eta_dp(g) == [1, 1, 1]

    def test_two_big_two_small(self):
        # five winning coalitions; derived with the naive sweep
        g = new_game(4, [2, 2, 1, 1])
        assert naive_eta(4, (2, 2, 1, 1)) == [4, 4, 2, 2]
        assert eta_enum(g) == [4, 4, 2, 2]
        assert eta_dp(g) == [4, 4, 2, 2]

    def test_dictator_with_dummies(self):
        g = new_game(10, [10, 1, 1])
        assert eta_enum(g) == [4, 0, 0]
        assert eta_dp(g) == [4, 0, 0]

    def test_eight_player_annexation_game(self):
        g = new_game(13, [7, 6, 1, 1, 1, 1, 1, 1])
        eta = eta_dp(g)
        assert eta == eta_enum(g)
        beta_1 = F(eta[0], sum(eta))
        assert beta_1 == F(65, 134)
        assert abs(float(beta_1) - 0.48507) < 5e-6

    def test_mixed_weights(self):
        g = new_game(9, [3, 3, 2, 1, 1, 1])
        assert eta_dp(g) == eta_enum(g) == naive_eta(9, (3, 3, 2, 1, 1, 1))


class TestBanzhaf:
    def test_normalized_examples(self):
        b = compute_banzhaf(new_game(5, [2, 2, 1, 1]), method="enum")
        assert b.normalized.values == (F(3, 8), F(3, 8), F(1, 8), F(1, 8))
        b = compute_banzhaf(new_game(4, [2, 2, 1, 1]), method="enum")
        assert b.normalized.values == (F(1, 3), F(1, 3), F(1, 6), F(1, 6))

    def test_probabilistic(self):
        b = compute_banzhaf(new_game(5, [2, 2, 2]), method="enum")
        assert b.probabilistic.values == (F(1, 4), F(1, 4), F(1, 4))

    def test_kinds_tagged(self):
        b = compute_banzhaf(new_game(5, [2, 2, 2]))
        assert b.normalized.kind is IndexKind.BANZHAF
        assert b.probabilistic.kind is IndexKind.BANZHAF_PROB

    def test_methods_agree(self):
        rng = random.Random(17)
        for _ in range(25):
            g = random_game(rng.randint(1, 12), 30, rng.randint(0, 10**6))
            assert compute_banzhaf(g, "enum") == compute_banzhaf(g, "dp")

    def test_bad_method(self):
        with pytest.raises(ParameterOutOfRange):
            compute_banzhaf(new_game(5, [2, 2, 2]), method="montecarlo")


class TestShapley:
    def test_three_players(self):
        s = compute_shapley(new_game(4, [3, 2, 1]), method="enum")
        assert s.index.values == (F(2, 3), F(1, 6), F(1, 6))
        assert s.counts.kappa == (4, 1, 1)

    def test_symmetry(self):
        s = compute_shapley(new_game(6, [2, 2, 2]))
        assert s.index.values == (F(1, 3), F(1, 3), F(1, 3))

    def test_dictator(self):
        s = compute_shapley(new_game(10, [10, 1, 1]))
        assert s.index.values == (F(1), F(0), F(0))

    def test_methods_agree_and_match_naive(self):
        rng = random.Random(23)
        for _ in range(20):
            g = random_game(rng.randint(1, 10), 25, rng.randint(0, 10**6))
            enum = compute_shapley(g, "enum")
            dp = compute_shapley(g, "dp")
            assert enum == dp
            assert list(enum.index.values) == naive_shapley(g.quota, g.weights)


class TestIsDummy:
    def test_examples(self):
        assert is_dummy(new_game(10, [10, 1, 1]), 2)
        assert not is_dummy(new_game(5, [2, 2, 2]), 1)
        assert not is_dummy(new_game(10, [8, 8, 1, 1]), 3)

    def test_bad_player(self):
        with pytest.raises(InvalidPlayerId):
            is_dummy(new_game(5, [2, 2, 2]), 4)

    def test_zero_weight_is_dummy(self):
        assert is_dummy(new_game(2, [2, 0]), 2)


class TestInvariants:
    def games(self, seed, count=30, max_n=12):
        rng = random.Random(seed)
        for _ in range(count):
            yield random_game(rng.randint(1, max_n), 40, rng.randint(0, 10**6))

    def test_efficiency(self):
        for g in self.games(31):
            b = compute_banzhaf(g)
            s = compute_shapley(g)
            assert sum(b.normalized.values) == 1
            assert sum(s.index.values) == 1
            assert sum(s.counts.kappa) == factorial(g.n)

    def test_probabilistic_identity(self):
        for g in self.games(37, count=20):
            b = compute_banzhaf(g)
            denom = 1 << (g.n - 1)
            assert all(
                v == F(e, denom)
                for v, e in zip(b.probabilistic.values, b.counts.eta)
            )

    def test_values_in_unit_interval(self):
        for g in self.games(41, count=20):
            for kind in IndexKind:
                vec = power_index(g, kind)
                assert all(0 <= v <= 1 for v in vec.values)

    def test_dummy_consistency(self):
        for g in self.games(43, count=25, max_n=10):
            b = compute_banzhaf(g)
            s = compute_shapley(g)
            for i in g.players:
                flags = {
                    is_dummy(g, i),
                    b.normalized.values[i - 1] == 0,
                    b.probabilistic.values[i - 1] == 0,
                    s.index.values[i - 1] == 0,
                }
                assert len(flags) == 1

    def test_dictator_gets_everything(self):
        for g in [new_game(10, [10, 1, 1]), new_game(12, [16, 1, 1, 1, 1, 1, 1, 1])]:
            assert is_dictator(g, 1)
            b = compute_banzhaf(g)
            assert b.normalized.values[0] == 1
            assert b.probabilistic.values[0] == 1
            assert compute_shapley(g).index.values[0] == 1

    def test_symmetry_equal_weights(self):
        rng = random.Random(47)
        for _ in range(15):
            n = rng.randint(2, 9)
            base = rng.randint(1, 9)
            weights = [base] * 2 + [rng.randint(1, 9) for _ in range(n - 2)]
            rng.shuffle(weights)
            g = new_game(rng.randint(1, sum(weights)), weights)
            b = compute_banzhaf(g).normalized.values
            s = compute_shapley(g).index.values
            for i in g.players:
                for j in g.players:
                    if g.weights[i - 1] == g.weights[j - 1]:
                        assert b[i - 1] == b[j - 1]
                        assert s[i - 1] == s[j - 1]

    def test_weight_monotonicity(self):
        for g in self.games(53, count=25, max_n=11):
            eta = eta_dp(g)
            kappa = compute_shapley(g).counts.kappa
            for i in g.players:
                for j in g.players:
                    if g.weights[i - 1] >= g.weights[j - 1]:
                        assert eta[i - 1] >= eta[j - 1]
                        assert kappa[i - 1] >= kappa[j - 1]
