"""ncfree test support library.

This module provides:
- Assertions: comparison helpers for series, matrices, polynomials and
  partitions that print a readable diff on failure
"""

from .assertions import (
    assert_series_equal,
    assert_matrix_equal,
    assert_poly_equal,
    assert_partitions_equal,
)

__all__ = [
    'assert_series_equal',
    'assert_matrix_equal',
    'assert_poly_equal',
    'assert_partitions_equal',
]
