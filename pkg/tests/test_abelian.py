"""Finitely generated abelian groups and graded tensor bookkeeping."""

import pytest

from polyprod import FgAbelianGroup, GradedGroup, graded_tensor, tensor_additive
from polyprod.abelian import Z_GROUP, ZERO_GRADED, ZERO_GROUP


class TestFgAbelianGroup:
    def test_chain_validation(self):
        FgAbelianGroup(0, (2, 4))
        FgAbelianGroup(3, (2, 2, 6))
        with pytest.raises(ValueError, match="chain"):
            FgAbelianGroup(0, (4, 2))
        with pytest.raises(ValueError, match="chain"):
            FgAbelianGroup(0, (2, 3))
        with pytest.raises(ValueError, match="at least 2"):
            FgAbelianGroup(0, (1,))
        with pytest.raises(ValueError, match="nonnegative"):
            FgAbelianGroup(-1)

    def test_from_divisors_canonicalizes(self):
        assert FgAbelianGroup.from_divisors(0, [2, 2, 3]).torsion == (2, 6)
        assert FgAbelianGroup.from_divisors(0, [6, 4]).torsion == (2, 12)
        assert FgAbelianGroup.from_divisors(1, [1, 1]).torsion == ()
        assert FgAbelianGroup.from_divisors(0, [8, 2, 2]).torsion == (2, 2, 8)
        with pytest.raises(ValueError):
            FgAbelianGroup.from_divisors(0, [0])

    def test_direct_sum_merges_chains(self):
        a = FgAbelianGroup(1, (2,))
        b = FgAbelianGroup(2, (6,))
        assert a.direct_sum(b) == FgAbelianGroup(3, (2, 6))

    def test_tensor(self):
        # Z^2 (x) (Z + Z/2) has rank 2 and two Z/2 summands
        t = FgAbelianGroup(2).tensor(FgAbelianGroup(1, (2,)))
        assert t == FgAbelianGroup(2, (2, 2))
        # torsion meets torsion through the gcd
        t2 = FgAbelianGroup(0, (4,)).tensor(FgAbelianGroup(0, (6,)))
        assert t2 == FgAbelianGroup(0, (2,))
        t3 = FgAbelianGroup(0, (2,)).tensor(FgAbelianGroup(0, (3,)))
        assert t3.is_zero

    def test_render(self):
        assert FgAbelianGroup(0).render() == "0"
        assert FgAbelianGroup(1).render() == "Z"
        assert FgAbelianGroup(3).render() == "Z^3"
        assert FgAbelianGroup(0, (2,)).render() == "Z/2"
        assert FgAbelianGroup(2, (2, 4)).render() == "Z^2 + Z/2 + Z/4"
        assert str(FgAbelianGroup(1, (3,))) == "Z + Z/3"

    def test_render_with_explicit_rank(self):
        # field coefficient output writes every rank with an exponent
        assert FgAbelianGroup(1).render(explicit_rank=True) == "Z^1"
        assert FgAbelianGroup(2).render(explicit_rank=True) == "Z^2"
        assert FgAbelianGroup(0).render(explicit_rank=True) == "0"
        g = GradedGroup.from_dict({1: FgAbelianGroup(1)})
        assert g.render_lines(explicit_rank=True) == ["d1: Z^1"]


class TestGradedGroup:
    def test_from_dict_drops_zero_groups(self):
        g = GradedGroup.from_dict({0: Z_GROUP, 1: ZERO_GROUP})
        assert g.degrees() == (0,)
        assert g.at(1) == ZERO_GROUP
        assert g.at(0) == Z_GROUP

    def test_shift_and_sum(self):
        g = GradedGroup.from_dict({0: Z_GROUP, 2: FgAbelianGroup(2)})
        assert g.shift(3).degrees() == (3, 5)
        s = g.direct_sum(GradedGroup.from_dict({2: Z_GROUP}))
        assert s.at(2) == FgAbelianGroup(3)
        assert s.total_rank() == 4

    def test_render(self):
        g = GradedGroup.from_dict({-1: Z_GROUP, 1: FgAbelianGroup(0, (2,))})
        assert g.render_lines() == ["d-1: Z", "d1: Z/2"]
        assert str(g) == "-1: Z, 1: Z/2"
        assert str(ZERO_GRADED) == "0"
        assert ZERO_GRADED.is_zero


class TestTensorAdditive:
    def test_unit_and_singleton(self):
        assert tensor_additive([]) == GradedGroup.from_dict({0: Z_GROUP})
        g = GradedGroup.from_dict({1: FgAbelianGroup(2)})
        assert tensor_additive([g]) == g

    def test_degrees_add(self):
        a = GradedGroup.from_dict({0: Z_GROUP, 1: Z_GROUP})
        b = GradedGroup.from_dict({2: FgAbelianGroup(3)})
        t = tensor_additive([a, b])
        assert t == GradedGroup.from_dict({2: FgAbelianGroup(3), 3: FgAbelianGroup(3)})

    def test_left_torsion_is_allowed(self):
        torsion = GradedGroup.from_dict({1: FgAbelianGroup(0, (2,))})
        free = GradedGroup.from_dict({2: FgAbelianGroup(2)})
        t = tensor_additive([torsion, free])
        assert t == GradedGroup.from_dict({3: FgAbelianGroup(0, (2, 2))})

    def test_right_torsion_is_rejected(self):
        torsion = GradedGroup.from_dict({1: FgAbelianGroup(0, (2,))})
        free = GradedGroup.from_dict({2: FgAbelianGroup(2)})
        with pytest.raises(ValueError, match="torsion-free"):
            tensor_additive([free, torsion])

    def test_zero_factor_annihilates(self):
        a = GradedGroup.from_dict({0: Z_GROUP})
        assert tensor_additive([a, ZERO_GRADED]).is_zero


class TestGradedTensor:
    def test_join_degree_rule(self):
        # two reduced degree 0 classes meet in reduced degree 1
        s0 = GradedGroup.from_dict({0: Z_GROUP})
        t = graded_tensor([s0, s0])
        assert t == GradedGroup.from_dict({1: Z_GROUP})
        # degree -1 against degree -1 stays at -1
        m1 = GradedGroup.from_dict({-1: Z_GROUP})
        assert graded_tensor([m1, m1]) == m1

    def test_three_factors(self):
        s0 = GradedGroup.from_dict({0: FgAbelianGroup(1)})
        t = graded_tensor([s0, s0, s0])
        assert t == GradedGroup.from_dict({2: Z_GROUP})
