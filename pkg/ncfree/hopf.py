"""Coordinate Hopf algebra of the boxed convolution group.

Polynomials live in the generators X_w, one per word 1 <= |w| <= maxdeg,
where X_w(f) = f_w. Two variants exist:

- full: the letters' generators X_i may carry negative exponents
  (Laurent in the X_i), matching the whole group;
- reduced: X_i is identified with 1 and only X̄_w with |w| >= 2 remain,
  matching the unipotent subgroup.

The weighted degree of a monomial is the sum of (|w| - 1) over its
factors. Co-product, counit and antipode are

    Δ X_w = Σ_{π ∈ NC(|w|)} X_{w,π} ⊗ X_{w,K(π)},
    ε(X_i) = 1, ε(X_w) = 0 for |w| >= 2,
    S(X_w) = -(X_{i1}^-1 ... X_{in}^-1) · Σ_{π ≠ 0} X_{w,π} · S(X_{w,K(π)}).
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import NotInvertibleError, ValidationError
from .freeconv import moeb
from .ncpart import kreweras_pairs
from .rational import ONE, ZERO, as_rational
from .series import NCSeries, Word, all_words, block_value, validate_word, word_key

logger = logging.getLogger(__name__)

Monomial = Tuple[Tuple[Word, int], ...]
Scalar = Union[int, Fraction]

CONSTANT: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for w, e in b:
        total = exps.get(w, 0) + e
        if total:
            exps[w] = total
        else:
            del exps[w]
    return tuple(sorted(exps.items(), key=lambda item: word_key(item[0])))


def mono_weight(m: Monomial) -> int:
    """Weighted degree: Σ (|w| - 1)·e; letters (and their inverses) weigh 0."""
    return sum((len(w) - 1) * e for w, e in m)


def mono_key(m: Monomial):
    return (mono_weight(m), tuple((word_key(w), e) for w, e in m))


def mono_from_words(ws: Iterable[Word]) -> Monomial:
    exps: Dict[Word, int] = {}
    for w in ws:
        exps[w] = exps.get(w, 0) + 1
    return tuple(sorted(exps.items(), key=lambda item: word_key(item[0])))


def render_monomial(m: Monomial, reduced: bool) -> str:
    if not m:
        return "1"
    name = "Xbar" if reduced else "X"
    parts = []
    for w, e in m:
        factor = f"{name}[{','.join(str(x) for x in w)}]"
        if e != 1:
            factor += f"^{e}"
        parts.append(factor)
    return "*".join(parts)


def _join_terms(rendered: List[Tuple[Fraction, str]]) -> str:
    if not rendered:
        return "0"
    out = []
    for i, (c, body) in enumerate(rendered):
        if body == "1":
            text = str(abs(c))
        elif abs(c) == 1:
            text = body
        else:
            text = f"{abs(c)}*{body}"
        if i == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append((" - " if c < 0 else " + ") + text)
    return "".join(out)


class CoordPoly:
    """Polynomial in the coordinate generators with exact rational coefficients."""

    __slots__ = ("_terms", "_reduced")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None, reduced: bool = False):
        self._reduced = reduced
        self._terms: Dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = as_rational(c)
            if c:
                self._terms[m] = self._terms.get(m, ZERO) + c
        self._terms = {m: c for m, c in self._terms.items() if c}

    @classmethod
    def constant(cls, c: Scalar, reduced: bool = False) -> "CoordPoly":
        return cls({CONSTANT: c}, reduced)

    @classmethod
    def generator(cls, w: Word, reduced: bool = False, exponent: int = 1) -> "CoordPoly":
        if reduced and len(w) == 1:
            return cls.constant(1, reduced)
        return cls({((tuple(w), exponent),): 1}, reduced)

    @property
    def reduced(self) -> bool:
        return self._reduced

    def terms(self) -> Tuple[Tuple[Monomial, Fraction], ...]:
        """Nonzero terms ordered by weighted degree, then canonically."""
        return tuple(sorted(self._terms.items(), key=lambda item: mono_key(item[0])))

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, ZERO)

    def degree(self) -> int:
        """Largest weighted degree of a term (0 for constants and zero)."""
        return max((mono_weight(m) for m in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def _coerce(self, other) -> "CoordPoly":
        if isinstance(other, CoordPoly):
            if other._reduced != self._reduced:
                raise ValidationError("Cannot combine reduced and full coordinate polynomials")
            return other
        return CoordPoly.constant(as_rational(other), self._reduced)

    def __add__(self, other) -> "CoordPoly":
        other = self._coerce(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, ZERO) + c
        return CoordPoly(terms, self._reduced)

    __radd__ = __add__

    def __neg__(self) -> "CoordPoly":
        return CoordPoly({m: -c for m, c in self._terms.items()}, self._reduced)

    def __sub__(self, other) -> "CoordPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CoordPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CoordPoly":
        other = self._coerce(other)
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                terms[m] = terms.get(m, ZERO) + c1 * c2
        return CoordPoly(terms, self._reduced)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CoordPoly":
        if k < 0:
            raise ValidationError("Negative powers of coordinate polynomials are not supported")
        result = CoordPoly.constant(1, self._reduced)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CoordPoly.constant(other, self._reduced)
        if not isinstance(other, CoordPoly):
            return NotImplemented
        return self._reduced == other._reduced and self._terms == other._terms

    __hash__ = None

    def substitute(self, value: Callable[[Word], object]):
        """Replace each generator X_w by value(w) and sum up.

        value may return Fractions (numeric evaluation) or CoordPolys
        (change of variables); negative exponents need invertible values.
        """
        total = None
        for m, c in self.terms():
            term = c
            for w, e in m:
                v = value(w)
                if e < 0:
                    if v == 0:
                        raise NotInvertibleError(f"Generator {list(w)} evaluates to zero under a negative power")
                    term = term * (Fraction(1) / v) ** (-e)
                else:
                    term = term * v ** e
            total = term if total is None else total + term
        return ZERO if total is None else total

    def evaluate(self, f: NCSeries) -> Fraction:
        """Value at f: X_w ↦ f_w (reduced polynomials are meant for unipotent f)."""
        return self.substitute(f.get)

    def render(self) -> str:
        return _join_terms([(c, render_monomial(m, self._reduced)) for m, c in self.terms()])

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"CoordPoly({self.render()!r}, reduced={self._reduced})"


class TensorPoly:
    """Sum of rational multiples of monomial tensors m_1 ⊗ ... ⊗ m_k."""

    __slots__ = ("_arity", "_terms", "_reduced")

    def __init__(self, arity: int, terms: Optional[Mapping[Tuple[Monomial, ...], Scalar]] = None,
                 reduced: bool = False):
        self._arity = arity
        self._reduced = reduced
        merged: Dict[Tuple[Monomial, ...], Fraction] = {}
        for legs, c in (terms or {}).items():
            if len(legs) != arity:
                raise ValidationError(f"Tensor term {legs!r} does not have {arity} legs")
            merged[legs] = merged.get(legs, ZERO) + as_rational(c)
        self._terms = {legs: c for legs, c in merged.items() if c}

    @classmethod
    def from_poly(cls, p: CoordPoly) -> "TensorPoly":
        return cls(1, {(m,): c for m, c in p.terms()}, p.reduced)

    @classmethod
    def scalar(cls, c: Scalar, reduced: bool = False) -> "TensorPoly":
        return cls(0, {(): c}, reduced)

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def reduced(self) -> bool:
        return self._reduced

    def terms(self) -> Tuple[Tuple[Tuple[Monomial, ...], Fraction], ...]:
        return tuple(sorted(self._terms.items(), key=lambda item: tuple(mono_key(m) for m in item[0])))

    def coefficient(self, legs: Tuple[Monomial, ...]) -> Fraction:
        return self._terms.get(tuple(legs), ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        if other._arity != self._arity:
            raise ValidationError(f"Cannot add tensors of arity {self._arity} and {other._arity}")
        terms = dict(self._terms)
        for legs, c in other._terms.items():
            terms[legs] = terms.get(legs, ZERO) + c
        return TensorPoly(self._arity, terms, self._reduced)

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> "TensorPoly":
        c = as_rational(c)
        return TensorPoly(self._arity, {legs: c * v for legs, v in self._terms.items()}, self._reduced)

    def __mul__(self, other: "TensorPoly") -> "TensorPoly":
        """Legwise product (the algebra structure of the tensor product)."""
        if other._arity != self._arity:
            raise ValidationError(f"Cannot multiply tensors of arity {self._arity} and {other._arity}")
        terms: Dict[Tuple[Monomial, ...], Fraction] = {}
        for legs1, c1 in self._terms.items():
            for legs2, c2 in other._terms.items():
                legs = tuple(mono_mul(a, b) for a, b in zip(legs1, legs2))
                terms[legs] = terms.get(legs, ZERO) + c1 * c2
        return TensorPoly(self._arity, terms, self._reduced)

    def tensor(self, other: "TensorPoly") -> "TensorPoly":
        terms: Dict[Tuple[Monomial, ...], Fraction] = {}
        for legs1, c1 in self._terms.items():
            for legs2, c2 in other._terms.items():
                legs = legs1 + legs2
                terms[legs] = terms.get(legs, ZERO) + c1 * c2
        return TensorPoly(self._arity + other._arity, terms, self._reduced)

    def map_leg(self, index: int, fn: Callable[[Monomial], "TensorPoly"]) -> "TensorPoly":
        """Apply a linear map, given on monomials, to one leg."""
        result: Optional[TensorPoly] = None
        cache: Dict[Monomial, TensorPoly] = {}
        for legs, c in self._terms.items():
            m = legs[index]
            if m not in cache:
                cache[m] = fn(m)
            image = cache[m]
            prefix = TensorPoly(index, {legs[:index]: c}, self._reduced)
            suffix = TensorPoly(self._arity - index - 1, {legs[index + 1:]: 1}, self._reduced)
            piece = prefix.tensor(image).tensor(suffix)
            result = piece if result is None else result + piece
        if result is None:
            arity = self._arity - 1 + (fn(CONSTANT).arity if self._arity else 0)
            return TensorPoly(arity, {}, self._reduced)
        return result

    def swap(self) -> "TensorPoly":
        """Exchange the two legs of a 2-tensor."""
        if self._arity != 2:
            raise ValidationError("swap needs a tensor with exactly two legs")
        return TensorPoly(2, {(b, a): c for (a, b), c in self._terms.items()}, self._reduced)

    def multiply(self) -> CoordPoly:
        """Multiplication μ: collapse all legs into one polynomial."""
        terms: Dict[Monomial, Fraction] = {}
        for legs, c in self._terms.items():
            m = CONSTANT
            for leg in legs:
                m = mono_mul(m, leg)
            terms[m] = terms.get(m, ZERO) + c
        return CoordPoly(terms, self._reduced)

    def leg_degrees(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(mono_weight(m) for m in legs) for legs, _ in self.terms())

    def evaluate(self, *series: NCSeries) -> Fraction:
        if len(series) != self._arity:
            raise ValidationError(f"Tensor of arity {self._arity} evaluated at {len(series)} series")
        total = ZERO
        for legs, c in self._terms.items():
            value = c
            for m, f in zip(legs, series):
                value *= CoordPoly({m: 1}, self._reduced).evaluate(f)
            total += value
        return total

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self._arity == other._arity and self._reduced == other._reduced and self._terms == other._terms

    __hash__ = None

    def render(self) -> str:
        rendered = []
        for legs, c in self.terms():
            body = " (x) ".join(render_monomial(m, self._reduced) for m in legs)
            if self._arity == 0:
                body = "1"
            elif all(not m for m in legs) and abs(c) != 1:
                body = "(" + body + ")"
            rendered.append((c, body))
        return _join_terms(rendered) if rendered else "0"

    def __str__(self) -> str:
        return self.render()


def is_symmetric(b: TensorPoly) -> bool:
    return b == b.swap()


class CoordinateAlgebra:
    """The truncated coordinate Hopf algebra over the alphabet {1..s}.

    Args:
        s: Alphabet size.
        maxdeg: Longest generator word.
        reduced: Use the quotient generators X̄_w (X_i identified with 1).
        degree_bound: Largest weighted degree accepted for monomials fed to
            the co-product (default maxdeg - 1).
    """

    def __init__(self, s: int, maxdeg: int, reduced: bool = False, degree_bound: Optional[int] = None):
        if s < 1 or maxdeg < 1:
            raise ValidationError(f"Need s >= 1 and maxdeg >= 1, got s={s}, maxdeg={maxdeg}")
        self.s = s
        self.maxdeg = maxdeg
        self.reduced = reduced
        self.degree_bound = maxdeg - 1 if degree_bound is None else degree_bound
        self._coproducts: Dict[Word, TensorPoly] = {}
        self._antipodes: Dict[Word, CoordPoly] = {}

    def __repr__(self) -> str:
        kind = "reduced" if self.reduced else "full"
        return f"CoordinateAlgebra(s={self.s}, maxdeg={self.maxdeg}, {kind})"

    def word(self, w: Sequence[int]) -> Word:
        word = validate_word(w, self.s, self.maxdeg)
        if self.reduced and len(word) < 2:
            raise ValidationError(f"Reduced generators need |w| >= 2, got {list(word)}")
        return word

    def generator(self, w: Sequence[int]) -> CoordPoly:
        return CoordPoly.generator(self.word(w), self.reduced)

    def one(self) -> CoordPoly:
        return CoordPoly.constant(1, self.reduced)

    def block_monomial(self, w: Word, blocks) -> Monomial:
        """X_{w,π} as a monomial (singletons dropped in the reduced variant)."""
        parts = [tuple(w[i - 1] for i in block) for block in blocks]
        if self.reduced:
            parts = [p for p in parts if len(p) > 1]
        return mono_from_words(parts)

    # -- co-product ---------------------------------------------------------

    def coproduct(self, w: Sequence[int]) -> TensorPoly:
        """Δ X_w = Σ_π X_{w,π} ⊗ X_{w,K(π)}, like terms merged."""
        word = self.word(w)
        if word not in self._coproducts:
            terms: Dict[Tuple[Monomial, ...], Fraction] = {}
            for pi, kpi in kreweras_pairs(len(word)):
                legs = (self.block_monomial(word, pi.blocks), self.block_monomial(word, kpi.blocks))
                terms[legs] = terms.get(legs, ZERO) + ONE
            self._coproducts[word] = TensorPoly(2, terms, self.reduced)
        return self._coproducts[word]

    def coproduct_monomial(self, m: Monomial) -> TensorPoly:
        if mono_weight(m) > self.degree_bound:
            raise ValidationError(f"Monomial of weighted degree {mono_weight(m)} exceeds bound {self.degree_bound}")
        result = TensorPoly(2, {(CONSTANT, CONSTANT): 1}, self.reduced)
        for w, e in m:
            if e > 0:
                factor = self.coproduct(w)
            else:
                inverse = ((w, -1),)
                factor = TensorPoly(2, {(inverse, inverse): 1}, self.reduced)
            for _ in range(abs(e)):
                result = result * factor
        return result

    def coproduct_poly(self, p: CoordPoly) -> TensorPoly:
        result = TensorPoly(2, {}, self.reduced)
        for m, c in p.terms():
            result = result + self.coproduct_monomial(m).scale(c)
        return result

    # -- counit ---------------------------------------------------------------

    def counit_monomial(self, m: Monomial) -> Fraction:
        return ONE if all(len(w) == 1 for w, _ in m) else ZERO

    def counit(self, p: CoordPoly) -> Fraction:
        """ε extended as an algebra map: X_i ↦ 1, X_w ↦ 0 for |w| >= 2."""
        return sum((c * self.counit_monomial(m) for m, c in p.terms()), ZERO)

    # -- antipode -------------------------------------------------------------

    def antipode(self, w: Sequence[int]) -> CoordPoly:
        """S(X_w) by the recursion on word length; S(X_i) = X_i^-1."""
        word = self.word(w)
        if word in self._antipodes:
            return self._antipodes[word]
        n = len(word)
        if n == 1:
            result = CoordPoly.generator(word, self.reduced, exponent=-1)
        else:
            total = CoordPoly({}, self.reduced)
            for pi, kpi in kreweras_pairs(n):
                if pi.size == n:
                    continue
                term = CoordPoly({self.block_monomial(word, pi.blocks): 1}, self.reduced)
                for block in kpi.blocks:
                    sub = tuple(word[i - 1] for i in block)
                    if self.reduced and len(sub) == 1:
                        continue
                    term = term * self.antipode(sub)
                total = total + term
            if self.reduced:
                result = -total
            else:
                inverses = mono_from_words(())
                for letter in word:
                    inverses = mono_mul(inverses, (((letter,), -1),))
                result = -(CoordPoly({inverses: 1}, False) * total)
            logger.debug("antipode of X%s: %d terms", list(word), len(result.terms()))
        self._antipodes[word] = result
        return result

    def antipode_monomial(self, m: Monomial) -> CoordPoly:
        result = self.one()
        for w, e in m:
            if e > 0:
                factor = self.antipode(w)
            else:
                factor = CoordPoly.generator(w, self.reduced)
            result = result * factor ** abs(e)
        return result

    def antipode_poly(self, p: CoordPoly) -> CoordPoly:
        result = CoordPoly({}, self.reduced)
        for m, c in p.terms():
            result = result + self.antipode_monomial(m) * c
        return result

    # -- axioms -----------------------------------------------------------------

    def check_hopf_axioms(self, w: Sequence[int]) -> Dict[str, bool]:
        """Coassociativity, counit law and antipode law at the generator X_w."""
        word = self.word(w)
        delta = self.coproduct(word)
        x = TensorPoly.from_poly(self.generator(word))
        eps = lambda m: TensorPoly.scalar(self.counit_monomial(m), self.reduced)  # noqa: E731
        left_s = delta.map_leg(0, lambda m: TensorPoly.from_poly(self.antipode_monomial(m))).multiply()
        right_s = delta.map_leg(1, lambda m: TensorPoly.from_poly(self.antipode_monomial(m))).multiply()
        target = self.one() * self.counit(self.generator(word))
        return {
            "coassociativity": delta.map_leg(0, self.coproduct_monomial) == delta.map_leg(1, self.coproduct_monomial),
            "left_counit": delta.map_leg(0, eps) == x,
            "right_counit": delta.map_leg(1, eps) == x,
            "left_antipode": left_s == target,
            "right_antipode": right_s == target,
        }

    # -- formal group law and Lie bracket ------------------------------------------

    def _require_reduced(self, what: str) -> None:
        if not self.reduced:
            raise ValidationError(f"{what} is defined on the reduced coordinate algebra")

    def formal_group_law(self, w: Sequence[int]) -> TensorPoly:
        """F_w(X, Y): the reduced co-product read as a series in two variable sets."""
        self._require_reduced("The formal group law")
        return self.coproduct(w)

    def bilinear_part(self, w: Sequence[int]) -> TensorPoly:
        """B_w: the summands X̄_u ⊗ Ȳ_v with a single generator on each side."""
        self._require_reduced("The bilinear part")
        fgl = self.formal_group_law(w)
        keep = {}
        for legs, c in fgl.terms():
            if all(len(m) == 1 and m[0][1] == 1 for m in legs):
                keep[legs] = c
        return TensorPoly(2, keep, True)

    def lie_bracket(self, w: Sequence[int], w2: Sequence[int]) -> Dict[Word, Fraction]:
        """Structure constants of [e_w, e_w2]: coefficient of X̄_w2 ⊗ Ȳ_w minus X̄_w ⊗ Ȳ_w2 in each B_u."""
        self._require_reduced("The Lie bracket")
        a, b = self.word(w), self.word(w2)
        ma, mb = ((a, 1),), ((b, 1),)
        result: Dict[Word, Fraction] = {}
        for u in all_words(self.s, self.maxdeg):
            if len(u) < 3:
                continue
            bil = self.bilinear_part(u)
            value = bil.coefficient((mb, ma)) - bil.coefficient((ma, mb))
            if value:
                result[u] = value
        return result

    # -- right translation ----------------------------------------------------------

    def translate(self, w: Sequence[int], g: NCSeries) -> CoordPoly:
        """Right-translation image of X_w by g: Σ_π X_{w,π} · g_{w,K(π)}."""
        word = self.word(w)
        if g.s != self.s:
            raise ValidationError(f"Series alphabet {g.s} differs from algebra alphabet {self.s}")
        terms: Dict[Monomial, Fraction] = {}
        for pi, kpi in kreweras_pairs(len(word)):
            value = block_value(g, word, kpi.blocks)
            if value:
                m = self.block_monomial(word, pi.blocks)
                terms[m] = terms.get(m, ZERO) + value
        return CoordPoly(terms, self.reduced)


@lru_cache(maxsize=32)
def _algebra(s: int, maxdeg: int, reduced: bool) -> CoordinateAlgebra:
    return CoordinateAlgebra(s, maxdeg, reduced)


def coproduct(w: Sequence[int], s: int, maxdeg: int) -> TensorPoly:
    return _algebra(s, maxdeg, False).coproduct(w)


def reduced_coproduct(w: Sequence[int], s: int, maxdeg: int) -> TensorPoly:
    """Co-product with X_i ≡ 1. Raises ValidationError for |w| < 2."""
    return _algebra(s, maxdeg, True).coproduct(w)


def counit(p: CoordPoly) -> Fraction:
    return sum((c * (ONE if all(len(w) == 1 for w, _ in m) else ZERO) for m, c in p.terms()), ZERO)


def antipode(w: Sequence[int], s: int, maxdeg: int, reduced: bool = False) -> CoordPoly:
    return _algebra(s, maxdeg, reduced).antipode(w)


def formal_group_law(w: Sequence[int], s: int, maxdeg: int) -> TensorPoly:
    return _algebra(s, maxdeg, True).formal_group_law(w)


def bilinear_part(w: Sequence[int], s: int, maxdeg: int) -> TensorPoly:
    return _algebra(s, maxdeg, True).bilinear_part(w)


def lie_bracket(w: Sequence[int], w2: Sequence[int], s: int, maxdeg: int) -> Dict[Word, Fraction]:
    return _algebra(s, maxdeg, True).lie_bracket(w, w2)


def cumulant_polynomial(w: Sequence[int]) -> CoordPoly:
    """κ_w as a polynomial in the moment coordinates X_u (u a subword of w).

    Uses R = M ⊠ Moeb: κ_w = Σ_π X_{w,π} · Moeb_{w,K(π)}.
    """
    word = validate_word(w)
    s = max(word)
    return _algebra(s, len(word), False).translate(word, moeb(s, len(word)))
