"""Truncated non-commutative power series without constant term.

A series over the alphabet {1..s} truncated at degree maxdeg is stored as a
sparse map from words (tuples of letters) to exact rationals; absent words
are zero. Words are ordered by length, then lexicographically.
"""

from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .errors import AlphabetMismatchError, ValidationError
from .ncpart import NCPartition
from .rational import ONE, ZERO, RationalLike, as_rational

Word = Tuple[int, ...]


def word_key(w: Word) -> Tuple[int, Word]:
    """Sort key: length first, then lexicographic."""
    return (len(w), w)


def validate_word(w: Iterable[int], s: Optional[int] = None, maxdeg: Optional[int] = None,
                  allow_empty: bool = False) -> Word:
    """Return w as a tuple after checking letters and length.

    Raises:
        ValidationError: on a non-integer letter, a letter outside 1..s, an
            empty word (unless allowed) or a word longer than maxdeg.
    """
    word = tuple(w)
    if not word and not allow_empty:
        raise ValidationError("Empty word is not allowed here")
    for letter in word:
        if isinstance(letter, bool) or not isinstance(letter, int) or letter < 1:
            raise ValidationError(f"Invalid letter {letter!r} in word {list(word)}")
        if s is not None and letter > s:
            raise ValidationError(f"Letter {letter} in word {list(word)} exceeds alphabet size {s}")
    if maxdeg is not None and len(word) > maxdeg:
        raise ValidationError(f"Word {list(word)} is longer than maxdeg={maxdeg}")
    return word


def words(s: int, length: int) -> Iterator[Word]:
    """All words of the given length over {1..s}, lexicographically."""
    return product(range(1, s + 1), repeat=length)


def all_words(s: int, maxdeg: int) -> Iterator[Word]:
    """All words of length 1..maxdeg in graded-lex order."""
    for length in range(1, maxdeg + 1):
        yield from words(s, length)


def _check_dims(s: int, maxdeg: int) -> None:
    if isinstance(s, bool) or not isinstance(s, int) or s < 1:
        raise ValidationError(f"Alphabet size must be a positive integer, got {s!r}")
    if isinstance(maxdeg, bool) or not isinstance(maxdeg, int) or maxdeg < 1:
        raise ValidationError(f"maxdeg must be a positive integer, got {maxdeg!r}")


class NCSeries:
    """Truncated series sum of f_w z_w over words 1 <= |w| <= maxdeg.

    Instances are immutable; every operation returns a new series.
    """

    __slots__ = ("_s", "_maxdeg", "_coeffs")

    def __init__(self, s: int, maxdeg: int, coeffs: Optional[Mapping[Sequence[int], RationalLike]] = None):
        _check_dims(s, maxdeg)
        store: Dict[Word, Fraction] = {}
        for w, value in (coeffs or {}).items():
            word = validate_word(w, s, maxdeg)
            v = as_rational(value)
            if v:
                store[word] = v
        self._s = s
        self._maxdeg = maxdeg
        self._coeffs = store

    @classmethod
    def _trusted(cls, s: int, maxdeg: int, coeffs: Dict[Word, Fraction]) -> "NCSeries":
        obj = cls.__new__(cls)
        obj._s = s
        obj._maxdeg = maxdeg
        obj._coeffs = {w: v for w, v in coeffs.items() if v}
        return obj

    @property
    def s(self) -> int:
        return self._s

    @property
    def maxdeg(self) -> int:
        return self._maxdeg

    def coeff(self, w: Sequence[int]) -> Fraction:
        """Coefficient f_w; zero when absent.

        Raises:
            ValidationError: if w is empty, too long or uses letters above s.
        """
        return self._coeffs.get(validate_word(w, self._s, self._maxdeg), ZERO)

    def get(self, w: Word) -> Fraction:
        """Unchecked coefficient lookup for already validated words."""
        return self._coeffs.get(w, ZERO)

    def items(self) -> Tuple[Tuple[Word, Fraction], ...]:
        """Nonzero (word, coefficient) pairs in graded-lex order."""
        return tuple(sorted(self._coeffs.items(), key=lambda item: word_key(item[0])))

    @property
    def support(self) -> Tuple[Word, ...]:
        return tuple(sorted(self._coeffs, key=word_key))

    def first_order(self) -> Tuple[Fraction, ...]:
        """The |w| = 1 coefficients (f_(1), ..., f_(s))."""
        return tuple(self._coeffs.get((i,), ZERO) for i in range(1, self._s + 1))

    def truncate(self, degree: int) -> "NCSeries":
        """Drop every word longer than degree."""
        if degree < 1 or degree > self._maxdeg:
            raise ValidationError(f"Cannot truncate maxdeg={self._maxdeg} series to degree {degree}")
        return NCSeries._trusted(self._s, degree, {w: v for w, v in self._coeffs.items() if len(w) <= degree})

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, NCSeries):
            return NotImplemented
        return self._s == other._s and self._maxdeg == other._maxdeg and self._coeffs == other._coeffs

    __hash__ = None

    def __add__(self, other: "NCSeries") -> "NCSeries":
        return add(self, other)

    def __sub__(self, other: "NCSeries") -> "NCSeries":
        return add(self, scale(-1, other))

    def __neg__(self) -> "NCSeries":
        return scale(-1, self)

    def __repr__(self) -> str:
        terms = ", ".join(f"{list(w)}: {v}" for w, v in self.items()[:8])
        more = ", ..." if len(self._coeffs) > 8 else ""
        return f"NCSeries(s={self._s}, maxdeg={self._maxdeg}, {{{terms}{more}}})"


def require_same_alphabet(f: NCSeries, g: NCSeries) -> None:
    if f.s != g.s:
        raise AlphabetMismatchError(f"Alphabet sizes differ: {f.s} vs {g.s}")


def unit(s: int, maxdeg: int) -> NCSeries:
    """The boxed-convolution unit z_1 + ... + z_s."""
    _check_dims(s, maxdeg)
    return NCSeries._trusted(s, maxdeg, {(i,): ONE for i in range(1, s + 1)})


def zero(s: int, maxdeg: int) -> NCSeries:
    _check_dims(s, maxdeg)
    return NCSeries._trusted(s, maxdeg, {})


def add(f: NCSeries, g: NCSeries) -> NCSeries:
    """Word-wise sum; the result is truncated at the smaller maxdeg."""
    require_same_alphabet(f, g)
    d = min(f.maxdeg, g.maxdeg)
    out: Dict[Word, Fraction] = {}
    for series in (f, g):
        for w, v in series._coeffs.items():
            if len(w) <= d:
                out[w] = out.get(w, ZERO) + v
    return NCSeries._trusted(f.s, d, out)


def scale(c: RationalLike, f: NCSeries) -> NCSeries:
    c = as_rational(c)
    return NCSeries._trusted(f.s, f.maxdeg, {w: c * v for w, v in f._coeffs.items()})


def cauchy_mul(f: NCSeries, g: NCSeries) -> NCSeries:
    """Concatenation product: (fg)_w is the sum of f_u g_v over splittings w = uv."""
    require_same_alphabet(f, g)
    d = min(f.maxdeg, g.maxdeg)
    out: Dict[Word, Fraction] = {}
    for u, a in f._coeffs.items():
        if len(u) >= d:
            continue
        for v, b in g._coeffs.items():
            if len(u) + len(v) <= d:
                w = u + v
                out[w] = out.get(w, ZERO) + a * b
    return NCSeries._trusted(f.s, d, out)


def coeff(f: NCSeries, w: Sequence[int]) -> Fraction:
    return f.coeff(w)


def restrict_word(w: Sequence[int], block: Sequence[int]) -> Word:
    """Subword of w at the given strictly increasing 1-based positions."""
    word = tuple(w)
    positions = list(block)
    if any(a >= b for a, b in zip(positions, positions[1:])):
        raise ValidationError(f"Positions {positions} are not strictly increasing")
    for pos in positions:
        if isinstance(pos, bool) or not isinstance(pos, int) or not 1 <= pos <= len(word):
            raise ValidationError(f"Position {pos!r} outside 1..{len(word)}")
    return tuple(word[pos - 1] for pos in positions)


def block_value(f: NCSeries, w: Word, blocks: Sequence[Sequence[int]]) -> Fraction:
    """Unchecked product of f at the restrictions of w to each block."""
    value = ONE
    get = f._coeffs.get
    for block in blocks:
        c = get(tuple(w[i - 1] for i in block))
        if not c:
            return ZERO
        value *= c
    return value


def eval_block_functional(f: NCSeries, w: Sequence[int], p: NCPartition) -> Fraction:
    """X_{w,p}(f): product over blocks V of p of f at the restriction of w to V.

    Raises:
        ValidationError: if p does not partition {1..|w|} or |w| exceeds maxdeg.
    """
    word = validate_word(w, f.s, f.maxdeg)
    if p.n != len(word):
        raise ValidationError(f"Partition of {{1..{p.n}}} does not match word length {len(word)}")
    return block_value(f, word, p.blocks)


def interleave(w: Sequence[int], v: Sequence[int], s: int) -> Word:
    """Interleave w over {1..s} with v shifted into {s+1..2s}: (w1, s+v1, w2, s+v2, ...)."""
    if len(w) != len(v):
        raise ValidationError(f"Cannot interleave words of lengths {len(w)} and {len(v)}")
    out = []
    for a, b in zip(w, v):
        out.extend((a, s + b))
    return tuple(out)
