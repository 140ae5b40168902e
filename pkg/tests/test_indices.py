import math
import random

import pytest
from conftest import path_tree, spider, star_tree, trees_up_to

from treedex import (
    WINDOW_LOW_A,
    IndexParams,
    Regime,
    Tree,
    classify_regime,
    r0_general,
    r0_of_degseq,
    sei,
    sei_of_degseq,
    values_close,
)

ALPHAS = (-1.0, -0.5, 0.5, 2.0, 3.0)
AS = (0.2, 0.5, 0.9, 1.5, 2.0)


class TestPowerSum:
    def test_path6_zagreb(self):
        assert r0_general(path_tree(6), 2) == 18

    def test_star6_zagreb(self):
        assert r0_general(star_tree(6), 2) == 30

    @pytest.mark.parametrize("n", (4, 6, 9))
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_star_closed_form(self, n, alpha):
        assert values_close(r0_general(star_tree(n), alpha), (n - 1) ** alpha + (n - 1))

    def test_invalid_alpha(self):
        with pytest.raises(ValueError):
            r0_general(path_tree(4), 0)
        with pytest.raises(ValueError):
            r0_of_degseq((2, 1, 1), 1.0)

    def test_single_vertex_rejected(self):
        with pytest.raises(ValueError):
            r0_general(Tree(1, ()), 2)


class TestWeightedExpSum:
    def test_path6(self):
        assert sei(path_tree(6), 2) == 36

    @pytest.mark.parametrize("n", (4, 6, 9))
    @pytest.mark.parametrize("a", AS)
    def test_star_closed_form(self, n, a):
        assert values_close(sei(star_tree(n), a), (n - 1) * a ** (n - 1) + (n - 1) * a)

    def test_spider_direct_sum(self):
        # degrees (3,2,2,2,2,1,1,1) at a = 0.5, summed directly
        t = spider(2, 2, 2)
        t8 = spider(2, 2, 3)
        assert t8.n == 8
        expected = sum(d * 0.5**d for d in (3, 2, 2, 2, 2, 1, 1, 1))
        assert values_close(sei(t8, 0.5), expected)
        assert values_close(sei(t8, 0.5), 3.875)
        assert t.n == 7  # smaller spider is a different tree

    def test_invalid_a(self):
        for bad in (0.0, -1.0, 1.0):
            with pytest.raises(ValueError):
                sei_of_degseq((2, 1, 1), bad)


class TestDegreeSequenceForms:
    def test_pair(self):
        assert r0_of_degseq((1, 1), -1) == 2

    def test_spider_seq(self):
        assert r0_of_degseq((3,) + (2,) * 4 + (1,) * 3, 2) == 28

    def test_branching_seq(self):
        assert sei_of_degseq((3,) * 1 + (2,) * 4 + (1,) * 3, 2) == 62

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_sufficiency(self, alpha):
        for t in trees_up_to(8):
            assert values_close(r0_general(t, alpha), r0_of_degseq(t.degree_sequence(), alpha))

    @pytest.mark.parametrize("a", AS)
    def test_sufficiency_expsum(self, a):
        for t in trees_up_to(8):
            assert values_close(sei(t, a), sei_of_degseq(t.degree_sequence(), a))

    def test_zagreb_specialization(self):
        for t in trees_up_to(8):
            assert values_close(r0_general(t, 2), sum(d * d for d in t.degrees))

    def test_isomorphism_invariance(self):
        rng = random.Random(7)
        for t in trees_up_to(8):
            perm = list(range(t.n))
            rng.shuffle(perm)
            other = Tree(t.n, tuple((perm[u], perm[v]) for u, v in t.edges))
            assert values_close(r0_general(t, -0.5), r0_general(other, -0.5))
            assert values_close(sei(t, 0.9), sei(other, 0.9))


class TestRegimes:
    def test_examples(self):
        assert classify_regime(IndexParams(2, 2)) == Regime("convex", "above_one")
        assert classify_regime(IndexParams(0.5, 0.6)) == Regime("concave", "window")
        assert classify_regime(IndexParams(-1, 0.3)) == Regime("convex", "low")

    def test_window_boundary_constant(self):
        assert values_close(WINDOW_LOW_A, (1 + math.sqrt(33)) / 16)
        assert 0.42 < WINDOW_LOW_A < 0.43
        # the boundary itself belongs to the low regime (open window)
        assert classify_regime(IndexParams(a=WINDOW_LOW_A)).sei_regime == "low"
        assert classify_regime(IndexParams(a=WINDOW_LOW_A + 1e-9)).sei_regime == "window"

    def test_partial_params(self):
        assert classify_regime(IndexParams(alpha=3)) == Regime("convex", None)
        assert classify_regime(IndexParams(a=1.5)) == Regime(None, "above_one")

    def test_invalid(self):
        with pytest.raises(ValueError):
            IndexParams()
        with pytest.raises(ValueError):
            IndexParams(alpha=1)
        with pytest.raises(ValueError):
            IndexParams(a=-2)


class TestShiftSignIdentity:
    """Sign structure of q(a) = a(8a^3 - 9a^2 + 1) = a(a-1)(8a^2 - a - 1)."""

    @staticmethod
    def factored(a):
        return a * (a - 1) * (8 * a * a - a - 1)

    @pytest.mark.parametrize("a", (0.3, 0.6, 2.0, 0.43, 1.2))
    def test_factorization(self, a):
        assert values_close(a * (8 * a**3 - 9 * a**2 + 1), self.factored(a))

    def test_roots(self):
        for root in (1.0, (1 + math.sqrt(33)) / 16, (1 - math.sqrt(33)) / 16):
            assert abs(8 * root**3 - 9 * root**2 + 1) < 1e-12

    def test_signs(self):
        assert self.factored(0.3) > 0  # low regime
        assert self.factored(0.6) < 0  # window
        assert self.factored(2.0) > 0  # above one
