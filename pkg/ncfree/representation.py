"""Finite-dimensional representations of the boxed convolution group.

Right translation by f acts on the coordinate algebra as an algebra map

    ρ(f): X_w ↦ Σ_{π ∈ NC(|w|)} X_{w,π} · f_{w,K(π)}

and lowers the weighted degree of every monomial except for its leading
term. Restricted to monomials of weighted degree at most D it is therefore
a triangular matrix, and ρ(f ⊠ g) = ρ(f) ∘ ρ(g) gives the homomorphism
M(f ⊠ g) = M(f) · M(g) with columns holding images of basis monomials.

Two bases are used:

- reduced: products of X̄_w (|w| >= 2) of weighted degree <= D. Unipotent
  series map to unipotent matrices and the series can be read back from
  the row of the constant monomial.
- full: products of X_w (|w| >= 1) with at most maxdeg letters in total and
  weighted degree <= D. The whole group acts here and the torus part
  becomes a diagonal matrix.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import DomainError, ValidationError
from .freeconv import Membership, membership, moments_from_cumulants, require_invertible, torus_factor
from .hopf import CONSTANT, CoordinateAlgebra, CoordPoly, Monomial, mono_key, mono_weight, render_monomial
from .matrix import RationalMatrix
from .onedim import s_v_transform
from .rational import ONE, ZERO
from .series import NCSeries, Word, all_words

logger = logging.getLogger(__name__)

REDUCED = "reduced"
FULL = "full"


def _multisets(gens: Sequence[Word], index: int, weight_left: int,
               letters_left: Optional[int]) -> Iterator[List[Tuple[Word, int]]]:
    if index == len(gens):
        yield []
        return
    w = gens[index]
    weight, letters = len(w) - 1, len(w)
    e = 0
    while True:
        rest_letters = None if letters_left is None else letters_left - e * letters
        for tail in _multisets(gens, index + 1, weight_left - e * weight, rest_letters):
            yield ([(w, e)] if e else []) + tail
        e += 1
        if e * weight > weight_left:
            break
        if letters_left is not None and e * letters > letters_left:
            break


@dataclass(frozen=True)
class MonomialBasis:
    """Ordered monomial basis of a translation-invariant subspace.

    Monomials are sorted by weighted degree, then canonically, so the
    constant monomial comes first.
    """

    s: int
    maxdeg: int
    bound: int
    variant: str
    monomials: Tuple[Monomial, ...]
    _index: Dict[Monomial, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {m: i for i, m in enumerate(self.monomials)})

    @property
    def reduced(self) -> bool:
        return self.variant == REDUCED

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __contains__(self, m: Monomial) -> bool:
        return m in self._index

    def position(self, m: Monomial) -> int:
        try:
            return self._index[m]
        except KeyError:
            raise ValidationError(f"Monomial {render_monomial(m, self.reduced)} is not in the basis") from None

    def labels(self) -> List[str]:
        return [render_monomial(m, self.reduced) for m in self.monomials]


def _default_bound(maxdeg: int, bound: Optional[int]) -> int:
    d = maxdeg - 1 if bound is None else bound
    if d < 0:
        raise ValidationError(f"Degree bound must be non-negative, got {d}")
    return d


@lru_cache(maxsize=32)
def reduced_basis(s: int, maxdeg: int, bound: Optional[int] = None) -> MonomialBasis:
    """Monomials in X̄_w (2 <= |w| <= maxdeg) of weighted degree <= bound (default maxdeg - 1)."""
    d = _default_bound(maxdeg, bound)
    gens = [w for w in all_words(s, min(maxdeg, d + 1)) if len(w) >= 2]
    monos = [tuple(m) for m in _multisets(gens, 0, d, None)]
    monos.sort(key=mono_key)
    logger.debug("reduced basis s=%d maxdeg=%d bound=%d: %d monomials", s, maxdeg, d, len(monos))
    return MonomialBasis(s, maxdeg, d, REDUCED, tuple(monos))


@lru_cache(maxsize=32)
def full_basis(s: int, maxdeg: int, bound: Optional[int] = None) -> MonomialBasis:
    """Monomials in X_w with at most maxdeg letters in total and weighted degree <= bound."""
    d = _default_bound(maxdeg, bound)
    gens = list(all_words(s, maxdeg))
    monos = [tuple(m) for m in _multisets(gens, 0, d, maxdeg)]
    monos.sort(key=mono_key)
    logger.debug("full basis s=%d maxdeg=%d bound=%d: %d monomials", s, maxdeg, d, len(monos))
    return MonomialBasis(s, maxdeg, d, FULL, tuple(monos))


def _column(image: CoordPoly, basis: MonomialBasis) -> Dict[int, Fraction]:
    column = {}
    for m, c in image.terms():
        if m not in basis:
            raise RuntimeError(f"Translation left the span of the basis at {render_monomial(m, basis.reduced)}")
        column[basis.position(m)] = c
    return column


def _matrix_from_columns(columns: List[Dict[int, Fraction]], dim: int) -> RationalMatrix:
    rows = [[ZERO] * dim for _ in range(dim)]
    for j, column in enumerate(columns):
        for i, c in column.items():
            rows[i][j] = c
    return RationalMatrix._trusted(rows)


def build_rep(f: NCSeries, D: Optional[int] = None, basis: Optional[MonomialBasis] = None) -> RationalMatrix:
    """Matrix of right translation by f on the monomials of weighted degree <= D.

    Args:
        f: The series; unipotent for the reduced basis, invertible for the full one.
        D: Degree bound (default maxdeg - 1); ignored when a basis is given.
        basis: Explicit basis; defaults to reduced_basis(f.s, f.maxdeg, D).

    Raises:
        DomainError: if f is not unipotent and the basis is reduced.
        NotInvertibleError: if f is not invertible and the basis is full.
    """
    if basis is None:
        basis = reduced_basis(f.s, f.maxdeg, D)
    if (basis.s, basis.maxdeg) != (f.s, f.maxdeg):
        raise ValidationError(f"Basis for s={basis.s}, maxdeg={basis.maxdeg} does not fit series "
                              f"with s={f.s}, maxdeg={f.maxdeg}")
    if basis.reduced:
        if membership(f) is not Membership.UNIPOTENT:
            raise DomainError("The reduced representation needs a unipotent series (all f_i = 1)")
    else:
        require_invertible(f)

    algebra = CoordinateAlgebra(f.s, f.maxdeg, reduced=basis.reduced, degree_bound=basis.bound)
    images: Dict[Word, CoordPoly] = {}
    columns = []
    for m in basis.monomials:
        image = algebra.one()
        for w, e in m:
            if w not in images:
                images[w] = algebra.translate(w, f)
            image = image * images[w] ** e
        columns.append(_column(image, basis))
    logger.debug("build_rep: %s basis of dimension %d", basis.variant, basis.dim)
    return _matrix_from_columns(columns, basis.dim)


def build_torus_rep(t: NCSeries, basis: Optional[MonomialBasis] = None) -> RationalMatrix:
    """Diagonal action of the torus element Σ t_i z_i on the full basis.

    X_w scales by t_{w_1}···t_{w_n}; only first-order coefficients of t are read.
    """
    require_invertible(t)
    if basis is None:
        basis = full_basis(t.s, t.maxdeg)
    if basis.reduced:
        raise ValidationError("The torus acts trivially on the reduced basis; use the full basis")
    first = t.first_order()
    entries = []
    for m in basis.monomials:
        value = ONE
        for w, e in m:
            for letter in w:
                value *= first[letter - 1] ** e
        entries.append(value)
    return RationalMatrix.diagonal(entries)


def s_transform(f: NCSeries, D: Optional[int] = None) -> RationalMatrix:
    """Representation of an arbitrary group element as torus · unipotent part.

    f = t ⊠ p with t diagonal, so the result equals build_rep(f) on the full
    basis and is multiplicative: s_transform(f ⊠ g) = s_transform(f) · s_transform(g).
    """
    t, p = torus_factor(f)
    basis = full_basis(f.s, f.maxdeg, D)
    return build_torus_rep(t, basis) @ build_rep(p, basis=basis)


def nilpotency_index(m: RationalMatrix) -> Optional[int]:
    """Smallest k >= 1 with (m - I)^k = 0, or None if m - I is not nilpotent."""
    n = m - RationalMatrix.identity(m.dim)
    power = n
    for k in range(1, m.dim + 1):
        if power.is_zero():
            return k
        power = power @ n
    return None


def certify_unipotent(m: RationalMatrix) -> bool:
    """(m - I)^dim = 0."""
    return nilpotency_index(m) is not None


def certify_triangular(m: RationalMatrix, basis: Optional[MonomialBasis] = None) -> bool:
    """Upper triangular with respect to the basis order.

    Raises:
        ValidationError: if the basis does not match m in dimension or is not
            ordered by non-decreasing weight.
    """
    if basis is not None:
        if basis.dim != m.dim:
            raise ValidationError(f"Matrix of dimension {m.dim} does not match basis of dimension {basis.dim}")
        weights = basis_weights(basis)
        if any(a > b for a, b in zip(weights, weights[1:])):
            raise ValidationError(f"Basis is not ordered by weight: {list(weights)}")
    return m.is_upper_triangular()


def recover_coefficients(m: RationalMatrix, basis: MonomialBasis) -> NCSeries:
    """Read a unipotent series back from its reduced representation matrix.

    f_w is the entry in the constant monomial's row and X̄_w's column.
    """
    if not basis.reduced:
        raise ValidationError("Coefficients are read from reduced representations only")
    if m.dim != basis.dim:
        raise ValidationError(f"Matrix of dimension {m.dim} does not match basis of dimension {basis.dim}")
    top = basis.position(CONSTANT)
    degree = min(basis.maxdeg, basis.bound + 1)
    coeffs: Dict[Word, Fraction] = {(i,): ONE for i in range(1, basis.s + 1)}
    for w in all_words(basis.s, degree):
        if len(w) >= 2:
            coeffs[w] = m[top, basis.position(((w, 1),))]
    return NCSeries._trusted(basis.s, degree, coeffs)


def one_dim_s_matrix(a: NCSeries) -> RationalMatrix:
    """Matrix whose first row carries d/dz log S_V of the moments of a.

    a is a one-variable cumulant series with a_1 = 1. The tail of the first
    row adds up under boxed convolution, so these matrices multiply like
    the series they come from.
    """
    if a.s != 1:
        raise ValidationError(f"one_dim_s_matrix needs a one-variable series, got alphabet size {a.s}")
    if a.maxdeg < 2:
        raise DomainError("one_dim_s_matrix needs maxdeg >= 2")
    if a.get((1,)) != 1:
        raise DomainError(f"one_dim_s_matrix needs a_1 = 1, got {a.get((1,))}")
    tail = s_v_transform(moments_from_cumulants(a)).log().derivative()
    n = a.maxdeg
    rows = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    rows[0][1:] = list(tail.coefficients)
    return RationalMatrix._trusted(rows)


def basis_weights(basis: MonomialBasis) -> Tuple[int, ...]:
    return tuple(mono_weight(m) for m in basis.monomials)
