"""Boxed convolution and free convolution tests (CONV-001 through CONV-041)."""

from fractions import Fraction

import pytest

from lib.assertions import assert_series_equal
from ncfree.errors import DegreeMismatchError, NotInvertibleError, SizeError, ValidationError
from ncfree.freeconv import (
    Membership,
    addv,
    box_conv,
    box_inverse,
    box_power,
    commutator,
    cumulants_from_moments,
    free_product_cumulants,
    grouped_cumulants,
    in_subgroup,
    join_free,
    membership,
    moeb,
    moments_from_cumulants,
    mulv,
    torus_factor,
    zeta,
)
from ncfree.series import NCSeries, unit, zero


class TestGroupLaws:
    """Tests for the group structure of boxed convolution."""

    def test_conv_001_unit(self, factory):
        """CONV-001: z_1 + ... + z_s is a two-sided unit."""
        for s, maxdeg in ((1, 5), (2, 3), (3, 3)):
            f = factory.series(s, maxdeg)
            e = unit(s, maxdeg)
            assert_series_equal(box_conv(e, f), f)
            assert_series_equal(box_conv(f, e), f)

    def test_conv_002_associative(self, factory):
        """CONV-002: Boxed convolution is associative."""
        for _ in range(5):
            f, g, h = (factory.series(2, 3) for _ in range(3))
            assert_series_equal(box_conv(box_conv(f, g), h), box_conv(f, box_conv(g, h)))

    def test_conv_003_inverse(self, factory):
        """CONV-003: box_inverse is a two-sided inverse."""
        for s, maxdeg in ((1, 6), (2, 4)):
            f = factory.group_element(s, maxdeg)
            inv = box_inverse(f)
            assert_series_equal(box_conv(f, inv), unit(s, maxdeg))
            assert_series_equal(box_conv(inv, f), unit(s, maxdeg))

    def test_conv_004_not_invertible(self):
        """CONV-004: A zero first-order coefficient has no inverse."""
        with pytest.raises(NotInvertibleError):
            box_inverse(NCSeries(2, 2, {(1,): 1, (1, 2): 3}))

    def test_conv_005_mismatched_inputs(self):
        """CONV-005: Factors must share alphabet and degree."""
        with pytest.raises(DegreeMismatchError):
            box_conv(unit(1, 2), unit(1, 3))
        with pytest.raises(ValidationError):
            box_conv(unit(1, 2), unit(2, 2))

    def test_conv_006_closure(self, factory):
        """CONV-006: Products of unipotent series stay unipotent."""
        f, g = factory.unipotent(2, 3), factory.unipotent(2, 3)
        assert membership(box_conv(f, g)) is Membership.UNIPOTENT
        assert membership(factory.group_element(2, 3)) in (Membership.GROUP, Membership.UNIPOTENT)
        assert membership(NCSeries(2, 2, {(1,): 1})) is None

    def test_conv_007_one_variable_commutative(self, factory):
        """CONV-007: For s = 1 the group is commutative."""
        for _ in range(5):
            f, g = factory.group_element(1, 6), factory.group_element(1, 6)
            assert_series_equal(box_conv(f, g), box_conv(g, f))

    def test_conv_008_noncommutative_witness(self):
        """CONV-008: For s = 2, (f ⊠ g)_121 = 1 while (g ⊠ f)_121 = 0."""
        f = NCSeries(2, 3, {(1,): 1, (2,): 1, (1, 1): 1})
        g = NCSeries(2, 3, {(1,): 1, (2,): 1, (1, 2): 1})
        assert box_conv(f, g).coeff((1, 2, 1)) == 1
        assert box_conv(g, f).coeff((1, 2, 1)) == 0

    def test_conv_009_not_distributive(self):
        """CONV-009: (f + f) ⊠ g differs from f ⊠ g + f ⊠ g."""
        f = NCSeries(1, 2, {(1,): 1})
        g = NCSeries(1, 2, {(1,): 1, (1, 1): 1})
        assert box_conv(f + f, g).coeff((1, 1)) == 4
        assert (box_conv(f, g) + box_conv(f, g)).coeff((1, 1)) == 2

    def test_conv_010_degree_three_coefficient(self):
        """CONV-010: (z + z^2) ⊠ (z + z^2) has z^3 coefficient 3."""
        f = NCSeries(1, 3, {(1,): 1, (1, 1): 1})
        assert box_conv(f, f).coeff((1, 1, 1)) == 3
        assert box_conv(f, f).coeff((1, 1)) == 2

    def test_conv_011_powers(self, factory):
        """CONV-011: box_power matches repeated products and inverses."""
        f = factory.group_element(2, 3)
        assert_series_equal(box_power(f, 0), unit(2, 3))
        assert_series_equal(box_power(f, 2), box_conv(f, f))
        assert_series_equal(box_power(f, -1), box_inverse(f))

    def test_conv_012_parallel_matches_serial(self, factory):
        """CONV-012: Worker processes give identical results."""
        f, g = factory.series(2, 3), factory.series(2, 3)
        assert_series_equal(box_conv(f, g, jobs=2), box_conv(f, g))


class TestMomentsAndCumulants:
    """Tests for zeta, moeb and the moment-cumulant transforms."""

    def test_conv_015_moeb_values(self):
        """CONV-015: Moeb_1 has coefficients (-1)^(n-1) Catalan(n-1)."""
        m = moeb(1, 5)
        assert [m.coeff((1,) * n) for n in range(1, 6)] == [1, -1, 2, -5, 14]
        assert_series_equal(box_conv(zeta(1, 5), m), unit(1, 5))
        assert_series_equal(box_conv(zeta(2, 3), moeb(2, 3)), unit(2, 3))

    def test_conv_016_semicircle_moments(self):
        """CONV-016: kappa_2 = 1 alone gives Catalan even moments."""
        r = NCSeries(1, 6, {(1, 1): 1})
        m = moments_from_cumulants(r)
        assert [m.coeff((1,) * n) for n in range(1, 7)] == [0, 1, 0, 2, 0, 5]

    def test_conv_017_free_poisson_moments(self):
        """CONV-017: All cumulants 1 gives Catalan moments."""
        m = moments_from_cumulants(zeta(1, 5))
        assert [m.coeff((1,) * n) for n in range(1, 6)] == [1, 2, 5, 14, 42]

    def test_conv_018_round_trip(self, factory):
        """CONV-018: Cumulants and moments determine each other."""
        for s, maxdeg in ((1, 6), (2, 3)):
            r = factory.series(s, maxdeg)
            assert_series_equal(cumulants_from_moments(moments_from_cumulants(r)), r)

    def test_conv_019_second_cumulant(self, factory):
        """CONV-019: kappa_11 = m_11 - m_1^2."""
        m = factory.series(1, 3)
        r = cumulants_from_moments(m)
        assert r.coeff((1, 1)) == m.coeff((1, 1)) - m.coeff((1,)) ** 2

    def test_conv_020_unit_cumulants(self):
        """CONV-020: The unit as cumulant series gives moments Zeta."""
        assert_series_equal(moments_from_cumulants(unit(2, 3)), zeta(2, 3))


class TestFreeConvolutions:
    """Tests for addv, mulv and the freeness constructions."""

    def test_conv_025_semicircle_sum(self):
        """CONV-025: Semicircle plus semicircle has variance 2."""
        m = moments_from_cumulants(NCSeries(1, 4, {(1, 1): 1}))
        total = addv(m, m)
        assert total.coeff((1, 1)) == 2
        assert total.coeff((1, 1, 1, 1)) == 8

    def test_conv_026_addv_cumulants_add(self, factory):
        """CONV-026: Cumulants of addv are the sum of cumulants."""
        a, b = factory.series(2, 3), factory.series(2, 3)
        expected = cumulants_from_moments(a) + cumulants_from_moments(b)
        assert_series_equal(cumulants_from_moments(addv(a, b)), expected)

    def test_conv_027_addv_neutral(self, factory):
        """CONV-027: Zero moments are neutral for addv."""
        a = factory.series(2, 3)
        assert_series_equal(addv(a, zero(2, 3)), a)

    def test_conv_028_mulv_zeta_neutral(self, factory):
        """CONV-028: Zeta is neutral for mulv on both sides."""
        a = factory.series(2, 3)
        assert_series_equal(mulv(zeta(2, 3), a), a)
        assert_series_equal(mulv(a, zeta(2, 3)), a)

    def test_conv_029_join_free(self):
        """CONV-029: Joined series carry f on {1..s} and g shifted by s."""
        f = NCSeries(1, 2, {(1,): 2, (1, 1): 3})
        g = NCSeries(1, 2, {(1,): 5})
        joined = join_free(f, g)
        assert joined.s == 2
        assert joined.coeff((1, 1)) == 3
        assert joined.coeff((2,)) == 5
        assert joined.coeff((1, 2)) == 0

    def test_conv_030_grouped_extremes(self, factory):
        """CONV-030: Singleton grouping gives the cumulant, full grouping the moment."""
        r = factory.series(3, 3)
        assert grouped_cumulants(r, [1, 2, 3]) == r.coeff((1, 2, 3))
        assert grouped_cumulants(r, [3]) == moments_from_cumulants(r).coeff((1, 2, 3))

    def test_conv_031_grouped_pair(self):
        """CONV-031: kappa_2(ab, c) = k_abc + k_ac k_b + k_a k_bc."""
        r = NCSeries(3, 3, {(1,): 2, (2,): 3, (3,): 5, (1, 3): 7, (2, 3): 11, (1, 2, 3): 13})
        assert grouped_cumulants(r, [2, 3]) == 13 + 7 * 3 + 2 * 11

    def test_conv_032_grouped_invalid(self, factory):
        """CONV-032: Cuts must form an interval partition of the word."""
        r = factory.series(2, 3)
        with pytest.raises(ValidationError):
            grouped_cumulants(r, [])
        with pytest.raises(ValidationError):
            grouped_cumulants(r, [2, 1])
        with pytest.raises(ValidationError):
            grouped_cumulants(r, [2], word=(1, 2, 1))

    def test_conv_033_free_product(self, factory):
        """CONV-033: Cumulants of products of free tuples equal f ⊠ g."""
        for s, maxdeg in ((1, 3), (2, 2)):
            f, g = factory.series(s, maxdeg), factory.series(s, maxdeg)
            assert_series_equal(free_product_cumulants(f, g), box_conv(f, g))


class TestStructure:
    """Tests for commutators, subgroups and the torus factorization."""

    def test_conv_035_commutator_one_variable(self, factory):
        """CONV-035: Commutators vanish for s = 1."""
        f, g = factory.group_element(1, 5), factory.group_element(1, 5)
        assert_series_equal(commutator(f, g), unit(1, 5))

    def test_conv_036_commutator_in_subgroup(self, factory):
        """CONV-036: Commutators of unipotent series vanish through degree 2."""
        f, g = factory.unipotent(2, 3), factory.unipotent(2, 3)
        assert in_subgroup(commutator(f, g), 2)

    def test_conv_037_subgroup_normal(self, factory):
        """CONV-037: Conjugates of subgroup elements stay in the subgroup."""
        h = factory.subgroup_element(2, 4, 2)
        g = factory.group_element(2, 4)
        assert in_subgroup(h, 2)
        assert in_subgroup(box_conv(box_conv(g, h), box_inverse(g)), 2)

    def test_conv_038_subgroup_next_degree_additive(self, factory):
        """CONV-038: On the subgroup, degree j+1 coefficients add."""
        f, g = factory.subgroup_element(2, 3, 2), factory.subgroup_element(2, 3, 2)
        fg = box_conv(f, g)
        for w in ((1, 1, 1), (1, 2, 1), (2, 2, 1)):
            assert fg.coeff(w) == f.coeff(w) + g.coeff(w)

    def test_conv_039_torus_factor(self, factory):
        """CONV-039: f = t ⊠ p with t diagonal and p unipotent."""
        f = factory.group_element(2, 3)
        t, p = torus_factor(f)
        assert t.first_order() == f.first_order()
        assert all(len(w) == 1 for w in t.support)
        assert membership(p) is Membership.UNIPOTENT
        assert_series_equal(box_conv(t, p), f)

    def test_conv_040_torus_central(self):
        """CONV-040: Torus elements commute with every series."""
        t = NCSeries(2, 3, {(1,): 3, (2,): 5})
        f = NCSeries(2, 3, {(1,): 1, (2,): 2, (1, 2): Fraction(1, 2), (2, 1, 1): 4})
        assert_series_equal(box_conv(t, f), box_conv(f, t))

    @pytest.mark.parametrize(
        "operation",
        [
            lambda f, cap: box_conv(f, f, cap=cap),
            lambda f, cap: box_inverse(f, cap),
            lambda f, cap: cumulants_from_moments(f, cap=cap),
            lambda f, cap: grouped_cumulants(f, [2, 4], (1, 1, 1, 1), cap),
        ],
        ids=["box_conv", "box_inverse", "cumulants_from_moments", "grouped_cumulants"],
    )
    def test_conv_041_cap_reaches_enumeration(self, operation):
        """CONV-041: An explicit cap bounds the partitions summed over."""
        f = NCSeries(1, 4, {(1,): 1, (1, 1): 2, (1, 1, 1): 3, (1, 1, 1, 1): 4})
        with pytest.raises(SizeError, match="cap 3"):
            operation(f, 3)
        operation(f, 4)
