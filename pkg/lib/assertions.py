"""Custom assertions for ncfree testing."""

from typing import Iterable, List, Union

from ncfree.hopf import CoordPoly
from ncfree.matrix import RationalMatrix
from ncfree.ncpart import NCPartition
from ncfree.rational import format_rational
from ncfree.series import NCSeries, all_words


def _fail(msg: str, message: str):
    if message:
        msg = f"{message}: {msg}"
    raise AssertionError(msg)


def assert_series_equal(actual: NCSeries, expected: NCSeries, message: str = ""):
    """
    Assert that two series agree on alphabet, degree and every coefficient.

    Args:
        actual: The computed series.
        expected: The expected series.
        message: Optional message to include on failure.

    Raises:
        AssertionError: listing the first differing words.
    """
    if (actual.s, actual.maxdeg) != (expected.s, expected.maxdeg):
        _fail(
            f"Shape mismatch: expected s={expected.s}, maxdeg={expected.maxdeg}; "
            f"got s={actual.s}, maxdeg={actual.maxdeg}",
            message,
        )
    diffs = []
    for w in all_words(actual.s, actual.maxdeg):
        a, e = actual.get(w), expected.get(w)
        if a != e:
            diffs.append(f"  {list(w)}: expected {format_rational(e)}, got {format_rational(a)}")
    if diffs:
        shown = diffs[:10]
        if len(diffs) > 10:
            shown.append(f"  ... and {len(diffs) - 10} more")
        _fail("Coefficient mismatch:\n" + "\n".join(shown), message)


def assert_matrix_equal(actual: RationalMatrix, expected: Union[RationalMatrix, List[List]], message: str = ""):
    """Assert entry-wise equality; expected may be given as nested lists."""
    if not isinstance(expected, RationalMatrix):
        expected = RationalMatrix(expected)
    if actual.dim != expected.dim:
        _fail(f"Dimension mismatch: expected {expected.dim}, got {actual.dim}", message)
    for i in range(actual.dim):
        for j in range(actual.dim):
            if actual[i, j] != expected[i, j]:
                _fail(
                    f"Entry ({i}, {j}): expected {format_rational(expected[i, j])}, "
                    f"got {format_rational(actual[i, j])}",
                    message,
                )


def assert_poly_equal(actual: CoordPoly, expected: Union[CoordPoly, str], message: str = ""):
    """
    Assert that a polynomial matches another polynomial or its rendered text.

    Text comparison ignores whitespace.
    """
    if isinstance(expected, str):
        got = "".join(actual.render().split())
        want = "".join(expected.split())
        if got != want:
            _fail(f"Polynomial mismatch:\n  Expected: {expected}\n  Actual: {actual.render()}", message)
        return
    if actual != expected:
        _fail(f"Polynomial mismatch:\n  Expected: {expected.render()}\n  Actual: {actual.render()}", message)


def assert_partitions_equal(actual: Iterable[NCPartition], expected: Iterable[Iterable[Iterable[int]]],
                            message: str = ""):
    """Assert a sequence of partitions matches block lists, in order."""
    got = [p.to_list() for p in actual]
    want = [[sorted(b) for b in sorted(blocks, key=min)] for blocks in expected]
    if len(got) != len(want):
        _fail(f"Expected {len(want)} partitions, got {len(got)}", message)
    for index, (g, w) in enumerate(zip(got, want)):
        if g != w:
            _fail(f"Partition {index}: expected {w}, got {g}", message)
