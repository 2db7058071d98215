"""Seeded fixture generation and reference data.

FixtureFactory draws small random rationals and builds series of every
kind the verification suites need. The same seed always yields the same
sequence of fixtures.
"""

import random
from fractions import Fraction
from typing import Dict, List, Optional

from ncfree.onedim import PowerSeries1
from ncfree.series import NCSeries, Word, all_words

# NC(n) for n <= 4 in the reference numbering used by the Kreweras tables.
REFERENCE_NC_LISTS: Dict[int, List[List[List[int]]]] = {
    1: [[[1]]],
    2: [[[1, 2]], [[1], [2]]],
    3: [
        [[1, 2, 3]],
        [[1], [2, 3]],
        [[1, 2], [3]],
        [[1, 3], [2]],
        [[1], [2], [3]],
    ],
    4: [
        [[1, 2, 3, 4]],
        [[1], [2, 3, 4]],
        [[1, 3, 4], [2]],
        [[1, 2, 4], [3]],
        [[1, 2, 3], [4]],
        [[1, 2], [3, 4]],
        [[1, 4], [2, 3]],
        [[1], [2], [3, 4]],
        [[1], [2, 3], [4]],
        [[1, 2], [3], [4]],
        [[1], [2, 4], [3]],
        [[1, 4], [2], [3]],
        [[1, 3], [2], [4]],
        [[1], [2], [3], [4]],
    ],
}

# Kreweras complement as 1-based arrows into REFERENCE_NC_LISTS[n].
REFERENCE_KREWERAS_ARROWS: Dict[int, Dict[int, int]] = {
    1: {1: 1},
    2: {1: 2, 2: 1},
    3: {1: 5, 2: 4, 3: 2, 4: 3, 5: 1},
    4: {1: 14, 2: 12, 3: 10, 4: 9, 5: 8, 6: 11, 7: 13, 8: 4, 9: 3, 10: 2, 11: 7, 12: 5, 13: 6, 14: 1},
}


class FixtureFactory:
    """Seeded generator of random rationals and series.

    Args:
        seed: Seed of the underlying random.Random.
        numerator_bound: Numerators are drawn from [-N, N].
        denominator_bound: Denominators are drawn from [1, D].
    """

    def __init__(self, seed: int = 7, numerator_bound: int = 9, denominator_bound: int = 4):
        self.seed = seed
        self.numerator_bound = numerator_bound
        self.denominator_bound = denominator_bound
        self._rng = random.Random(seed)

    @classmethod
    def from_config(cls, config, seed: Optional[int] = None) -> "FixtureFactory":
        return cls(config.seed if seed is None else seed, config.numerator_bound, config.denominator_bound)

    def rational(self, nonzero: bool = False) -> Fraction:
        while True:
            value = Fraction(
                self._rng.randint(-self.numerator_bound, self.numerator_bound),
                self._rng.randint(1, self.denominator_bound),
            )
            if value or not nonzero:
                return value

    def _coeffs(self, s: int, maxdeg: int, min_length: int = 1) -> Dict[Word, Fraction]:
        return {w: self.rational() for w in all_words(s, maxdeg) if len(w) >= min_length}

    def series(self, s: int, maxdeg: int) -> NCSeries:
        """Arbitrary series; first-order coefficients may vanish."""
        return NCSeries(s, maxdeg, self._coeffs(s, maxdeg))

    def group_element(self, s: int, maxdeg: int) -> NCSeries:
        """Series with every first-order coefficient nonzero."""
        coeffs = self._coeffs(s, maxdeg, min_length=2)
        for i in range(1, s + 1):
            coeffs[(i,)] = self.rational(nonzero=True)
        return NCSeries(s, maxdeg, coeffs)

    def unipotent(self, s: int, maxdeg: int) -> NCSeries:
        """Series with every first-order coefficient equal to 1."""
        coeffs = self._coeffs(s, maxdeg, min_length=2)
        for i in range(1, s + 1):
            coeffs[(i,)] = Fraction(1)
        return NCSeries(s, maxdeg, coeffs)

    def subgroup_element(self, s: int, maxdeg: int, j: int) -> NCSeries:
        """Unipotent series whose coefficients vanish for 2 <= |w| <= j."""
        coeffs = self._coeffs(s, maxdeg, min_length=j + 1)
        for i in range(1, s + 1):
            coeffs[(i,)] = Fraction(1)
        return NCSeries(s, maxdeg, coeffs)

    def power_series(self, maxdeg: int, constant: Optional[Fraction] = None) -> PowerSeries1:
        coeffs = [self.rational() for _ in range(maxdeg + 1)]
        if constant is not None:
            coeffs[0] = Fraction(constant)
        return PowerSeries1(coeffs)

    def normalized_moments(self, maxdeg: int) -> NCSeries:
        """One-variable moment series with first moment 1."""
        return self.unipotent(1, maxdeg)
