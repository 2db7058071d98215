"""Non-crossing partition tests (NC-001 through NC-035)."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lib.assertions import assert_partitions_equal
from ncfree.errors import SizeError, ValidationError
from ncfree.ncpart import (
    DEFAULT_NC_CAP,
    NCPartition,
    catalan,
    enumerate_nc,
    interval_partition,
    is_noncrossing,
    kreweras,
    kreweras_pairs,
    kreweras_squared_shift,
    nc_join,
)

partitions = st.integers(min_value=1, max_value=7).flatmap(lambda n: st.sampled_from(enumerate_nc(n)))
partition_pairs = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(st.sampled_from(enumerate_nc(n)), st.sampled_from(enumerate_nc(n)))
)


class TestEnumeration:
    """Tests for NC(n) enumeration."""

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132), (7, 429), (8, 1430)])
    def test_nc_001_catalan_counts(self, n, count):
        """NC-001: |NC(n)| is the n-th Catalan number."""
        assert catalan(n) == count
        assert len(enumerate_nc(n)) == count

    def test_nc_002_no_duplicates(self):
        """NC-002: Enumeration lists every partition once."""
        parts = enumerate_nc(7)
        assert len(set(parts)) == len(parts)

    def test_nc_003_lexicographic_order(self):
        """NC-003: NC(3) comes out in lexicographic block order."""
        assert_partitions_equal(
            enumerate_nc(3),
            [[[1], [2], [3]], [[1], [2, 3]], [[1, 2], [3]], [[1, 2, 3]], [[1, 3], [2]]],
        )

    def test_nc_004_matches_reference_lists(self, reference_nc_lists):
        """NC-004: NC(1)..NC(4) agree with the reference tables as sets."""
        for n, listed in reference_nc_lists.items():
            assert set(enumerate_nc(n)) == {NCPartition.from_blocks(b) for b in listed}

    def test_nc_005_all_enumerated_are_noncrossing(self):
        """NC-005: Every enumerated partition passes the crossing test."""
        for p in enumerate_nc(6):
            assert is_noncrossing(p.blocks)

    def test_nc_006_size_limits(self):
        """NC-006: n outside 1..cap is rejected."""
        with pytest.raises(SizeError):
            enumerate_nc(0)
        with pytest.raises(SizeError):
            enumerate_nc(DEFAULT_NC_CAP + 1)
        with pytest.raises(SizeError):
            enumerate_nc(6, cap=5)

    def test_nc_007_explicit_cap_allows_larger(self):
        """NC-007: A caller-supplied cap widens the limit."""
        assert len(enumerate_nc(4, cap=4)) == 14

    @pytest.mark.longrun
    def test_nc_008_catalan_at_cap(self):
        """NC-008: Enumeration at the default cap still matches Catalan."""
        assert len(enumerate_nc(DEFAULT_NC_CAP)) == catalan(DEFAULT_NC_CAP)


class TestPartitionValidation:
    """Tests for partition construction and the crossing test."""

    def test_nc_010_crossing_detected(self):
        """NC-010: {1,3},{2,4} is crossing."""
        assert not is_noncrossing([[1, 3], [2, 4]])
        assert is_noncrossing([[1, 4], [2, 3]])

    def test_nc_011_crossing_rejected(self):
        """NC-011: Constructing a crossing partition raises."""
        with pytest.raises(ValidationError):
            NCPartition.from_blocks([[1, 3], [2, 4]])

    def test_nc_012_not_a_partition(self):
        """NC-012: Missing, repeated or non-integer elements are rejected."""
        for blocks in ([[1, 3]], [[1, 2], [2]], [[1], []], [["a"]]):
            with pytest.raises(ValidationError):
                is_noncrossing(blocks)

    def test_nc_013_canonical_form(self):
        """NC-013: Blocks are sorted internally and by minimum."""
        p = NCPartition.from_blocks([[4, 3], [2, 1]])
        assert p.to_list() == [[1, 2], [3, 4]]
        assert str(p) == "(12|34)"

    def test_nc_014_ground_set_mismatch(self):
        """NC-014: An explicit n must match the elements."""
        with pytest.raises(ValidationError):
            NCPartition.from_blocks([[1, 2]], n=3)

    def test_nc_015_zero_and_one(self):
        """NC-015: 0_n has n blocks, 1_n has one."""
        assert NCPartition.zero(4).size == 4
        assert NCPartition.one(4).size == 1
        assert NCPartition.zero(4).refines(NCPartition.one(4))
        assert not NCPartition.one(4).refines(NCPartition.zero(4))


class TestKreweras:
    """Tests for the Kreweras complement."""

    def test_nc_020_worked_example(self):
        """NC-020: K({1,2},{3,4}) = {1},{2,4},{3}."""
        p = NCPartition.from_blocks([[1, 2], [3, 4]])
        assert kreweras(p).to_list() == [[1], [2, 4], [3]]

    def test_nc_021_extremes(self):
        """NC-021: K swaps 0_n and 1_n."""
        for n in range(1, 7):
            assert kreweras(NCPartition.zero(n)) == NCPartition.one(n)
            assert kreweras(NCPartition.one(n)) == NCPartition.zero(n)

    def test_nc_022_reference_arrows(self, reference_nc_lists, reference_kreweras_arrows):
        """NC-022: K agrees with the reference arrow tables for n <= 4."""
        for n, arrows in reference_kreweras_arrows.items():
            listed = [NCPartition.from_blocks(b) for b in reference_nc_lists[n]]
            for src, dst in arrows.items():
                assert kreweras(listed[src - 1]) == listed[dst - 1], f"n={n}, arrow {src} -> {dst}"

    @given(partitions)
    @settings(max_examples=150, deadline=None)
    def test_nc_023_block_count_relation(self, p):
        """NC-023: |p| + |K(p)| = n + 1."""
        assert p.size + kreweras(p).size == p.n + 1

    @given(partitions)
    @settings(max_examples=150, deadline=None)
    def test_nc_024_squared_is_rotation(self, p):
        """NC-024: K(K(p)) is p rotated by one step."""
        assert kreweras_squared_shift(p) == p.rotated(-1)

    def test_nc_025_bijective(self):
        """NC-025: K permutes NC(n)."""
        for n in range(1, 8):
            parts = enumerate_nc(n)
            assert {kreweras(p) for p in parts} == set(parts)

    @given(partition_pairs)
    @settings(max_examples=150, deadline=None)
    def test_nc_026_order_reversing(self, pair):
        """NC-026: p <= q implies K(q) <= K(p)."""
        p, q = pair
        if p.refines(q):
            assert kreweras(q).refines(kreweras(p))

    def test_nc_027_pairs_memoized_in_order(self):
        """NC-027: kreweras_pairs follows enumerate_nc order."""
        pairs = kreweras_pairs(5)
        assert [p for p, _ in pairs] == list(enumerate_nc(5))
        assert all(k == kreweras(p) for p, k in pairs)


class TestJoinAndIntervals:
    """Tests for the lattice join and interval partitions."""

    def test_nc_030_join_example(self):
        """NC-030: Joining overlapping blocks merges them."""
        p = NCPartition.from_blocks([[1, 2], [3], [4]])
        q = NCPartition.from_blocks([[1], [2, 3], [4]])
        assert nc_join(p, q).to_list() == [[1, 2, 3], [4]]

    def test_nc_031_join_resolves_crossings(self):
        """NC-031: Blocks that would cross are merged."""
        p = NCPartition.from_blocks([[1, 3], [2], [4]])
        q = NCPartition.from_blocks([[1], [2, 4], [3]])
        assert nc_join(p, q) == NCPartition.one(4)

    @given(partition_pairs)
    @settings(max_examples=150, deadline=None)
    def test_nc_032_join_is_least_upper_bound(self, pair):
        """NC-032: The join is a symmetric upper bound below every other upper bound."""
        p, q = pair
        j = nc_join(p, q)
        assert j == nc_join(q, p)
        assert p.refines(j) and q.refines(j)
        for r in enumerate_nc(p.n):
            if p.refines(r) and q.refines(r):
                assert j.refines(r)

    def test_nc_033_join_ground_sets(self):
        """NC-033: Joining different ground sets raises."""
        with pytest.raises(ValidationError):
            nc_join(NCPartition.zero(2), NCPartition.zero(3))

    def test_nc_034_interval_partition(self):
        """NC-034: Cuts 2,5 give {1,2},{3,4,5}."""
        assert interval_partition(5, [2, 5]).to_list() == [[1, 2], [3, 4, 5]]
        assert interval_partition(3, [3]) == NCPartition.one(3)
        assert interval_partition(3, [1, 2, 3]) == NCPartition.zero(3)

    @pytest.mark.parametrize("cuts", [[], [2, 4], [3, 2, 5], [0, 5], [2, 2, 5]])
    def test_nc_035_invalid_cuts(self, cuts):
        """NC-035: Cuts must increase strictly and end at n."""
        with pytest.raises(ValidationError):
            interval_partition(5, cuts)
