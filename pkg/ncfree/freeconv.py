"""The boxed convolution group and free convolution operations.

For series f, g over the same alphabet and truncation degree,

    (f ⊠ g)_w = sum over π in NC(|w|) of X_{w,π}(f) · X_{w,K(π)}(g)

where X_{w,π}(f) multiplies the coefficients of f at the restrictions of w
to the blocks of π and K is the Kreweras complement. Series whose
first-order coefficients are all nonzero form a group under ⊠; those with
all first-order coefficients equal to 1 form the unipotent subgroup.

Cumulant series R and moment series M are related by right translation:
M = R ⊠ Zeta and R = M ⊠ Moeb.
"""

import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DegreeMismatchError, NotInvertibleError, ValidationError
from .ncpart import NCPartition, enumerate_nc, interval_partition, kreweras_pairs, nc_join
from .parallel import chunked, ordered_map
from .rational import ONE, ZERO
from .series import (
    NCSeries,
    Word,
    add,
    all_words,
    block_value,
    interleave,
    require_same_alphabet,
    unit,
    validate_word,
    words,
)

logger = logging.getLogger(__name__)


class Membership(Enum):
    """Which group a series belongs to, read off its first-order coefficients."""

    GROUP = "G"
    UNIPOTENT = "G+"


def membership(f: NCSeries) -> Optional[Membership]:
    """GROUP if every first-order coefficient is nonzero, UNIPOTENT if all equal 1, else None."""
    first = f.first_order()
    if any(c == 0 for c in first):
        return None
    if all(c == 1 for c in first):
        return Membership.UNIPOTENT
    return Membership.GROUP


def require_invertible(f: NCSeries) -> None:
    for i, c in enumerate(f.first_order(), start=1):
        if c == 0:
            raise NotInvertibleError(f"Coefficient of z_{i} is zero; series is not invertible under boxed convolution")


def in_subgroup(f: NCSeries, j: int) -> bool:
    """Membership in the normal subgroup of unipotent f with f_w = 0 for 2 <= |w| <= j."""
    if membership(f) is not Membership.UNIPOTENT:
        return False
    return all(len(w) > j for w, _ in f.items() if len(w) >= 2)


def _check_pair(f: NCSeries, g: NCSeries) -> None:
    require_same_alphabet(f, g)
    if f.maxdeg != g.maxdeg:
        raise DegreeMismatchError(f"Truncation degrees differ: {f.maxdeg} vs {g.maxdeg}")


def _conv_chunk(task: Tuple[NCSeries, NCSeries, List[Word], Optional[int]]) -> List[Fraction]:
    f, g, ws, cap = task
    out = []
    for w in ws:
        total = ZERO
        for pi, kpi in kreweras_pairs(len(w), cap):
            a = block_value(f, w, pi.blocks)
            if a:
                total += a * block_value(g, w, kpi.blocks)
        out.append(total)
    return out


def box_conv(f: NCSeries, g: NCSeries, jobs: int = 1, cap: Optional[int] = None) -> NCSeries:
    """Boxed convolution f ⊠ g.

    Args:
        f: Left factor.
        g: Right factor, same alphabet and maxdeg as f.
        jobs: Worker processes for coefficient-level parallelism.
        cap: Largest word length summed over NC(n) (default DEFAULT_NC_CAP).

    Raises:
        AlphabetMismatchError, DegreeMismatchError: on incompatible inputs.
        SizeError: if maxdeg exceeds cap.
    """
    _check_pair(f, g)
    kreweras_pairs(f.maxdeg, cap)
    ws = list(all_words(f.s, f.maxdeg))
    chunks = chunked(ws, jobs)
    results = ordered_map(_conv_chunk, [(f, g, chunk, cap) for chunk in chunks], jobs)
    coeffs: Dict[Word, Fraction] = {}
    for chunk, values in zip(chunks, results):
        coeffs.update(zip(chunk, values))
    return NCSeries._trusted(f.s, f.maxdeg, coeffs)


def _dict_block_value(coeffs: Dict[Word, Fraction], w: Word, blocks) -> Fraction:
    value = ONE
    for block in blocks:
        c = coeffs.get(tuple(w[i - 1] for i in block), ZERO)
        if not c:
            return ZERO
        value *= c
    return value


def box_inverse(f: NCSeries, cap: Optional[int] = None) -> NCSeries:
    """Two-sided inverse of f under ⊠, solved degree by degree.

    At |w| = 1 the inverse has r_i^-1. For longer w, the π = 0 term of
    (f ⊠ h)_w is f_{i1}...f_{in} h_w and every other term only involves
    shorter coefficients of h, so h_w is determined by unit_w = 0.

    Raises:
        NotInvertibleError: if a first-order coefficient is zero.
        SizeError: if maxdeg exceeds cap (default DEFAULT_NC_CAP).
    """
    require_invertible(f)
    first = f.first_order()
    h: Dict[Word, Fraction] = {(i,): 1 / first[i - 1] for i in range(1, f.s + 1)}
    for length in range(2, f.maxdeg + 1):
        pairs = [(pi, kpi) for pi, kpi in kreweras_pairs(length, cap) if pi.size < length]
        for w in words(f.s, length):
            total = ZERO
            for pi, kpi in pairs:
                a = block_value(f, w, pi.blocks)
                if a:
                    total += a * _dict_block_value(h, w, kpi.blocks)
            diagonal = ONE
            for letter in w:
                diagonal *= first[letter - 1]
            h[w] = -total / diagonal
        logger.debug("box_inverse: solved degree %d", length)
    return NCSeries._trusted(f.s, f.maxdeg, h)


def box_power(f: NCSeries, k: int, cap: Optional[int] = None) -> NCSeries:
    """f ⊠ ... ⊠ f (k factors); negative k uses the inverse, k = 0 gives the unit."""
    base = box_inverse(f, cap) if k < 0 else f
    result = unit(f.s, f.maxdeg)
    for _ in range(abs(k)):
        result = box_conv(result, base, cap=cap)
    return result


@lru_cache(maxsize=64)
def zeta(s: int, maxdeg: int) -> NCSeries:
    """Zeta_s: every coefficient equal to 1 (the moment series of the identity)."""
    return NCSeries._trusted(s, maxdeg, {w: ONE for w in all_words(s, maxdeg)})


@lru_cache(maxsize=64)
def moeb(s: int, maxdeg: int, cap: Optional[int] = None) -> NCSeries:
    """Moeb_s, the boxed-convolution inverse of Zeta_s."""
    return box_inverse(zeta(s, maxdeg), cap)


def moments_from_cumulants(r: NCSeries, jobs: int = 1, cap: Optional[int] = None) -> NCSeries:
    """M = R ⊠ Zeta."""
    return box_conv(r, zeta(r.s, r.maxdeg), jobs=jobs, cap=cap)


def cumulants_from_moments(m: NCSeries, jobs: int = 1, cap: Optional[int] = None) -> NCSeries:
    """R = M ⊠ Moeb."""
    return box_conv(m, moeb(m.s, m.maxdeg, cap), jobs=jobs, cap=cap)


def addv(f: NCSeries, g: NCSeries, jobs: int = 1, cap: Optional[int] = None) -> NCSeries:
    """Free additive convolution in moment coordinates: ((f⊠Moeb) + (g⊠Moeb)) ⊠ Zeta."""
    _check_pair(f, g)
    mo = moeb(f.s, f.maxdeg, cap)
    summed = add(box_conv(f, mo, jobs, cap), box_conv(g, mo, jobs, cap))
    return box_conv(summed, zeta(f.s, f.maxdeg), jobs, cap)


def mulv(f: NCSeries, g: NCSeries, jobs: int = 1, cap: Optional[int] = None) -> NCSeries:
    """Free multiplicative convolution in moment coordinates: f ⊠ Moeb ⊠ g."""
    _check_pair(f, g)
    return box_conv(box_conv(f, moeb(f.s, f.maxdeg, cap), jobs, cap), g, jobs, cap)


def join_free(f: NCSeries, g: NCSeries, maxdeg: Optional[int] = None) -> NCSeries:
    """Cumulant series of the union of two free tuples, over the alphabet {1..2s}.

    Words in {1..s} carry f's coefficients, words in {s+1..2s} carry g's
    (letters shifted by s), mixed words are zero. With a larger maxdeg the
    pure words longer than the inputs' degree are also zero, which is
    harmless for callers that only evaluate pure blocks of at most that
    length.
    """
    _check_pair(f, g)
    d = f.maxdeg if maxdeg is None else maxdeg
    if d < 1:
        raise ValidationError(f"maxdeg must be positive, got {d}")
    s = f.s
    coeffs: Dict[Word, Fraction] = {}
    for w, v in f.items():
        if len(w) <= d:
            coeffs[w] = v
    for w, v in g.items():
        if len(w) <= d:
            coeffs[tuple(letter + s for letter in w)] = v
    return NCSeries._trusted(2 * s, d, coeffs)


@lru_cache(maxsize=None)
def _connected_partitions(n: int, cuts: Tuple[int, ...], cap: Optional[int]) -> Tuple[NCPartition, ...]:
    sigma = interval_partition(n, cuts)
    top = NCPartition.one(n)
    return tuple(pi for pi in enumerate_nc(n, cap) if nc_join(pi, sigma) == top)


def grouped_cumulants(
    r: NCSeries, cuts: Sequence[int], word: Optional[Sequence[int]] = None, cap: Optional[int] = None
) -> Fraction:
    """Cumulant of grouped products, as a sum over π with π ∨ σ = 1_n.

    σ is the interval partition given by cuts; the sum runs over κ_π
    evaluated on `word` (default (1, 2, ..., n)).

    Raises:
        ValidationError: on invalid cuts or a word that does not fit r.
        SizeError: if the last cut exceeds cap (default DEFAULT_NC_CAP).
    """
    cuts = tuple(cuts)
    if not cuts:
        raise ValidationError("grouped_cumulants needs at least one cut")
    n = cuts[-1]
    interval_partition(n, cuts)
    w = tuple(range(1, n + 1)) if word is None else tuple(word)
    if len(w) != n:
        raise ValidationError(f"Word {list(w)} has length {len(w)}, cuts end at {n}")
    validate_word(w, r.s, r.maxdeg)
    total = ZERO
    for pi in _connected_partitions(n, cuts, cap):
        total += block_value(r, w, pi.blocks)
    return total


def free_product_cumulants(f: NCSeries, g: NCSeries, cap: Optional[int] = None) -> NCSeries:
    """Cumulant series of a·b for free tuples a, b with cumulant series f, g.

    Each coefficient is the grouped cumulant of the interleaved word
    (i1, s+i1, i2, s+i2, ...) with consecutive pairs grouped; only the
    mixed-cumulant-free summands survive, so the result equals f ⊠ g.
    """
    _check_pair(f, g)
    joined = join_free(f, g, maxdeg=2 * f.maxdeg)
    coeffs: Dict[Word, Fraction] = {}
    for w in all_words(f.s, f.maxdeg):
        n = len(w)
        cuts = tuple(range(2, 2 * n + 1, 2))
        coeffs[w] = grouped_cumulants(joined, cuts, interleave(w, w, f.s), cap)
    return NCSeries._trusted(f.s, f.maxdeg, coeffs)


def commutator(f: NCSeries, g: NCSeries, cap: Optional[int] = None) -> NCSeries:
    """f ⊠ g ⊠ f^-1 ⊠ g^-1."""
    _check_pair(f, g)
    require_invertible(f)
    require_invertible(g)
    fg = box_conv(f, g, cap=cap)
    return box_conv(box_conv(fg, box_inverse(f, cap), cap=cap), box_inverse(g, cap), cap=cap)


def torus_factor(f: NCSeries, cap: Optional[int] = None) -> Tuple[NCSeries, NCSeries]:
    """Split f = t ⊠ p with t = sum f_(i) z_i and p unipotent.

    Raises:
        NotInvertibleError: if a first-order coefficient is zero.
    """
    require_invertible(f)
    t = NCSeries._trusted(f.s, f.maxdeg, {(i,): c for i, c in enumerate(f.first_order(), start=1)})
    p = box_conv(box_inverse(t, cap), f, cap=cap)
    return t, p
