"""Series arithmetic tests (SER-001 through SER-028)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lib.assertions import assert_series_equal
from ncfree.errors import AlphabetMismatchError, ValidationError
from ncfree.ncpart import NCPartition
from ncfree.rational import as_rational, format_rational
from ncfree.series import (
    NCSeries,
    add,
    all_words,
    cauchy_mul,
    coeff,
    eval_block_functional,
    interleave,
    restrict_word,
    scale,
    unit,
    validate_word,
    zero,
)


class TestRationals:
    """Tests for coefficient conversion."""

    def test_ser_001_accepted_forms(self):
        """SER-001: ints, "p/q" strings and Fractions convert exactly."""
        assert as_rational(3) == 3
        assert as_rational("-3/4") == Fraction(-3, 4)
        assert as_rational(Fraction(1, 2)) == Fraction(1, 2)
        assert format_rational(Fraction(-1, 4)) == "-1/4"

    @pytest.mark.parametrize("value", [0.5, True, "1/0", "x", None])
    def test_ser_002_rejected_forms(self, value):
        """SER-002: Floats, bools and junk are rejected."""
        with pytest.raises(ValidationError):
            as_rational(value)


class TestConstruction:
    """Tests for NCSeries construction and lookup."""

    def test_ser_005_zero_coefficients_dropped(self):
        """SER-005: Zero coefficients are not stored."""
        f = NCSeries(2, 2, {(1,): 0, (2,): 1})
        assert f.support == ((2,),)
        assert f.coeff((1,)) == 0

    def test_ser_006_word_order(self):
        """SER-006: Words come out by length, then lexicographically."""
        assert list(all_words(2, 2)) == [(1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)]

    def test_ser_007_letter_out_of_range(self):
        """SER-007: Letters above s are rejected."""
        with pytest.raises(ValidationError):
            NCSeries(1, 2, {(2,): 1})

    def test_ser_008_word_too_long(self):
        """SER-008: Words longer than maxdeg are rejected."""
        with pytest.raises(ValidationError):
            NCSeries(1, 2, {(1, 1, 1): 1})
        with pytest.raises(ValidationError):
            unit(1, 2).coeff((1, 1, 1))

    def test_ser_009_bad_dimensions(self):
        """SER-009: s and maxdeg must be positive integers."""
        for s, maxdeg in ((0, 2), (2, 0), (True, 2)):
            with pytest.raises(ValidationError):
                NCSeries(s, maxdeg)

    def test_ser_010_empty_word(self):
        """SER-010: The empty word has no coefficient."""
        with pytest.raises(ValidationError):
            validate_word(())
        assert validate_word((), allow_empty=True) == ()

    def test_ser_011_first_order(self):
        """SER-011: first_order lists f_(1)..f_(s)."""
        f = NCSeries(3, 1, {(1,): 2, (3,): 5})
        assert f.first_order() == (2, 0, 5)


class TestArithmetic:
    """Tests for sum, scaling and the concatenation product."""

    def test_ser_015_add_truncates(self):
        """SER-015: Sums are truncated at the smaller maxdeg."""
        f = NCSeries(1, 3, {(1,): 1, (1, 1, 1): 4})
        g = NCSeries(1, 2, {(1,): 2, (1, 1): 3})
        assert_series_equal(add(f, g), NCSeries(1, 2, {(1,): 3, (1, 1): 3}))

    def test_ser_016_alphabet_mismatch(self):
        """SER-016: Series over different alphabets do not combine."""
        with pytest.raises(AlphabetMismatchError):
            add(unit(1, 2), unit(2, 2))

    def test_ser_017_scale_and_operators(self, factory):
        """SER-017: f - f is zero and scaling distributes."""
        f = factory.series(2, 3)
        assert (f - f).is_zero()
        assert_series_equal(scale(2, f), f + f)
        assert_series_equal(-f, scale(-1, f))

    def test_ser_018_cauchy_product(self):
        """SER-018: (z1)(z2 + z1 z2) = z1 z2 up to degree 2."""
        f = NCSeries(2, 2, {(1,): 1})
        g = NCSeries(2, 2, {(2,): 1, (1, 2): 1})
        assert_series_equal(cauchy_mul(f, g), NCSeries(2, 2, {(1, 2): 1}))

    def test_ser_019_cauchy_associative(self, factory):
        """SER-019: The concatenation product is associative."""
        f, g, h = (factory.series(2, 4) for _ in range(3))
        assert_series_equal(cauchy_mul(cauchy_mul(f, g), h), cauchy_mul(f, cauchy_mul(g, h)))

    def test_ser_020_truncation(self, factory):
        """SER-020: Truncation commutes with sums."""
        f, g = factory.series(2, 4), factory.series(2, 4)
        assert_series_equal(add(f, g).truncate(2), add(f.truncate(2), g.truncate(2)))
        with pytest.raises(ValidationError):
            f.truncate(5)

    def test_ser_021_zero_series(self):
        assert zero(2, 3).is_zero()
        assert coeff(unit(2, 3), (2,)) == 1


class TestBlockFunctionals:
    """Tests for restrictions and X_{w,pi}."""

    def test_ser_022_restrict_word(self):
        """SER-022: Restriction picks letters at the given positions."""
        assert restrict_word((1, 2, 1, 2), [1, 3]) == (1, 1)
        assert restrict_word((1, 2, 3), [2]) == (2,)
        for block in ([3, 1], [0], [4], [1, 1]):
            with pytest.raises(ValidationError):
                restrict_word((1, 2, 3), block)

    def test_ser_023_block_functional_values(self):
        """SER-023: X_{w,0} multiplies letters, X_{w,1} reads f_w."""
        f = NCSeries(1, 2, {(1,): 2, (1, 1): 3})
        assert eval_block_functional(f, (1, 1), NCPartition.zero(2)) == 4
        assert eval_block_functional(f, (1, 1), NCPartition.one(2)) == 3
        with pytest.raises(ValidationError):
            eval_block_functional(f, (1, 1), NCPartition.zero(3))

    def test_ser_024_block_functional_nonlinear(self):
        """SER-024: X_{w,pi} is not additive in f."""
        f = NCSeries(1, 2, {(1,): 1})
        pi = NCPartition.zero(2)
        assert eval_block_functional(f + f, (1, 1), pi) == 4
        assert eval_block_functional(f, (1, 1), pi) + eval_block_functional(f, (1, 1), pi) == 2

    def test_ser_025_interleave(self):
        """SER-025: Interleaving shifts the second word into {s+1..2s}."""
        assert interleave((1, 2), (2, 1), 2) == (1, 4, 2, 3)
        with pytest.raises(ValidationError):
            interleave((1,), (1, 2), 2)


WORDS_2_3 = list(all_words(2, 3))
series_2_3 = st.dictionaries(
    st.sampled_from(WORDS_2_3),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    max_size=8,
).map(lambda coeffs: NCSeries(2, 3, coeffs))


class TestRingLaws:
    """Property-based checks of the series ring axioms."""

    @given(series_2_3, series_2_3)
    @settings(max_examples=100, deadline=None)
    def test_ser_026_add_commutative(self, f, g):
        """SER-026: f + g = g + f and f + 0 = f."""
        assert add(f, g) == add(g, f)
        assert add(f, zero(2, 3)) == f

    @given(series_2_3, series_2_3, series_2_3)
    @settings(max_examples=100, deadline=None)
    def test_ser_027_distributive(self, f, g, h):
        """SER-027: The concatenation product distributes over sums."""
        assert cauchy_mul(f, add(g, h)) == add(cauchy_mul(f, g), cauchy_mul(f, h))
        assert cauchy_mul(add(f, g), h) == add(cauchy_mul(f, h), cauchy_mul(g, h))

    @given(series_2_3, st.fractions(min_value=-3, max_value=3, max_denominator=3))
    @settings(max_examples=100, deadline=None)
    def test_ser_028_scale_compatible(self, f, c):
        """SER-028: Scaling commutes with the product and restriction to a degree."""
        g = NCSeries(2, 3, {(1,): 1, (2, 1): 2})
        assert cauchy_mul(scale(c, f), g) == scale(c, cauchy_mul(f, g))
        assert scale(c, f).truncate(2) == scale(c, f.truncate(2))
