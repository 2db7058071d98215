"""One-variable free harmonic analysis.

Truncated commutative power series in z, compositional inversion, the
F-transform f ↦ f⁻¹(z)/z, the S_V-transform m ↦ (1+z)·m⁻¹(z)/z, and the
LOG/EXP linearization turning boxed convolution of one-variable series
into addition of ordinary power series.

Truncation bookkeeping: for a one-variable series of maxdeg n,
f_transform and s_v_transform have maxdeg n-1, log_morphism has maxdeg
n-2 and exp_morphism raises maxdeg by 2. On moment series, exp_v raises
maxdeg by one and log_v lowers it by one, so both round trips are exact.

Products, reciprocals, log, exp, substitution and reversion are computed
with sympy's ring_series over QQ.
"""

import logging
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.ring_series import (
    rs_diff,
    rs_exp,
    rs_integrate,
    rs_log,
    rs_mul,
    rs_series_inversion,
    rs_series_reversion,
    rs_subs,
)
from sympy.polys.rings import ring

from .errors import DomainError, NotInvertibleError, ValidationError
from .freeconv import box_conv, moeb, zeta
from .hopf import CoordPoly, mono_from_words
from .rational import ZERO, RationalLike, as_rational, from_qq, to_qq
from .series import NCSeries

logger = logging.getLogger(__name__)

_RING, _z = ring("z", QQ)
_REVERSION_RING, _rz, _ry = ring("z,y", QQ)


class PowerSeries1:
    """a_0 + a_1 z + ... + a_maxdeg z^maxdeg with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[RationalLike], maxdeg: int = None):
        values = [as_rational(c) for c in coeffs]
        if maxdeg is not None:
            if maxdeg < 0:
                raise ValidationError(f"maxdeg must be non-negative, got {maxdeg}")
            values = (values + [ZERO] * (maxdeg + 1))[: maxdeg + 1]
        if not values:
            raise ValidationError("A power series needs at least the constant coefficient")
        self._coeffs = tuple(values)

    @classmethod
    def z(cls, maxdeg: int) -> "PowerSeries1":
        return cls([0, 1], maxdeg)

    @classmethod
    def one(cls, maxdeg: int) -> "PowerSeries1":
        return cls([1], maxdeg)

    @classmethod
    def zero(cls, maxdeg: int) -> "PowerSeries1":
        return cls([0], maxdeg)

    def to_ring(self):
        """This series as an element of QQ[z]."""
        return _RING.from_dict({(k,): to_qq(c) for k, c in enumerate(self._coeffs) if c})

    @classmethod
    def from_ring(cls, p, maxdeg: int) -> "PowerSeries1":
        """Read the coefficients of z^0..z^maxdeg from an element of QQ[z]."""
        coeffs = [ZERO] * (maxdeg + 1)
        for (k,), c in p.items():
            if k <= maxdeg:
                coeffs[k] = from_qq(c)
        return cls(coeffs)

    @property
    def maxdeg(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self._coeffs[k]

    def truncate(self, degree: int) -> "PowerSeries1":
        if degree < 0 or degree > self.maxdeg:
            raise ValidationError(f"Cannot truncate maxdeg={self.maxdeg} series to degree {degree}")
        return PowerSeries1(self._coeffs[: degree + 1])

    def __add__(self, other: "PowerSeries1") -> "PowerSeries1":
        d = min(self.maxdeg, other.maxdeg)
        return PowerSeries1([a + b for a, b in zip(self._coeffs[: d + 1], other._coeffs[: d + 1])])

    def __neg__(self) -> "PowerSeries1":
        return PowerSeries1([-a for a in self._coeffs])

    def __sub__(self, other: "PowerSeries1") -> "PowerSeries1":
        return self + (-other)

    def __mul__(self, other) -> "PowerSeries1":
        if not isinstance(other, PowerSeries1):
            c = as_rational(other)
            return PowerSeries1([c * a for a in self._coeffs])
        d = min(self.maxdeg, other.maxdeg)
        return PowerSeries1.from_ring(rs_mul(self.to_ring(), other.to_ring(), _z, d + 1), d)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PowerSeries1):
            return NotImplemented
        return self._coeffs == other._coeffs

    __hash__ = None

    def derivative(self) -> "PowerSeries1":
        if self.maxdeg == 0:
            raise DomainError("Derivative of a maxdeg-0 series carries no information")
        return PowerSeries1.from_ring(rs_diff(self.to_ring(), _z), self.maxdeg - 1)

    def integral(self) -> "PowerSeries1":
        """Termwise antiderivative with constant term 0; maxdeg grows by one."""
        return PowerSeries1.from_ring(rs_integrate(self.to_ring(), _z), self.maxdeg + 1)

    def reciprocal(self) -> "PowerSeries1":
        """Multiplicative inverse; needs a nonzero constant term."""
        if not self._coeffs[0]:
            raise NotInvertibleError("Power series with zero constant term has no reciprocal")
        return PowerSeries1.from_ring(rs_series_inversion(self.to_ring(), _z, self.maxdeg + 1), self.maxdeg)

    def log(self) -> "PowerSeries1":
        """log of a series with constant term 1."""
        if self._coeffs[0] != 1:
            raise DomainError(f"log needs constant term 1, got {self._coeffs[0]}")
        return PowerSeries1.from_ring(rs_log(self.to_ring(), _z, self.maxdeg + 1), self.maxdeg)

    def exp(self) -> "PowerSeries1":
        """exp of a series with constant term 0."""
        if self._coeffs[0]:
            raise DomainError(f"exp needs constant term 0, got {self._coeffs[0]}")
        if not any(self._coeffs):
            return PowerSeries1.one(self.maxdeg)
        return PowerSeries1.from_ring(rs_exp(self.to_ring(), _z, self.maxdeg + 1), self.maxdeg)

    def shift_up(self) -> "PowerSeries1":
        """Multiply by z."""
        return PowerSeries1((ZERO,) + self._coeffs)

    def shift_down(self) -> "PowerSeries1":
        """Divide by z; needs constant term 0."""
        if self._coeffs[0]:
            raise DomainError("Cannot divide by z: constant term is nonzero")
        if self.maxdeg == 0:
            raise DomainError("Cannot divide a maxdeg-0 series by z")
        return PowerSeries1(self._coeffs[1:])

    def __repr__(self) -> str:
        return f"PowerSeries1([{', '.join(str(c) for c in self._coeffs)}])"


def compose(f: PowerSeries1, g: PowerSeries1) -> PowerSeries1:
    """f(g(z)) truncated at the smaller maxdeg; g must have g_0 = 0."""
    if g[0]:
        raise DomainError(f"Inner series of a composition needs constant term 0, got {g[0]}")
    d = min(f.maxdeg, g.maxdeg)
    return PowerSeries1.from_ring(rs_subs(f.to_ring(), {_z: g.to_ring()}, _z, d + 1), d)


def comp_inverse(f: PowerSeries1) -> PowerSeries1:
    """h with f(h(z)) = h(f(z)) = z up to degree maxdeg.

    Raises:
        DomainError: if f_0 != 0 or f_1 = 0.
    """
    if f[0]:
        raise DomainError(f"Compositional inverse needs f_0 = 0, got {f[0]}")
    if f.maxdeg < 1 or not f[1]:
        raise DomainError("Compositional inverse needs an invertible linear coefficient")
    d = f.maxdeg
    p = _REVERSION_RING.from_dict({(k, 0): to_qq(c) for k, c in enumerate(f.coefficients) if c})
    h = rs_series_reversion(p, _rz, d + 1, _ry)
    coeffs = [ZERO] * (d + 1)
    for (_, k), c in h.items():
        coeffs[k] = from_qq(c)
    return PowerSeries1(coeffs)


SeriesLike = Union[NCSeries, PowerSeries1]


def from_nc(f: NCSeries) -> PowerSeries1:
    """The one-variable series sum f_(1^k) z^k, constant term 0."""
    if f.s != 1:
        raise ValidationError(f"Expected a one-variable series, got alphabet size {f.s}")
    return PowerSeries1([ZERO] + [f.get((1,) * k) for k in range(1, f.maxdeg + 1)])


def to_nc(p: PowerSeries1) -> NCSeries:
    if p[0]:
        raise DomainError("Series with a constant term is not an NCSeries")
    if p.maxdeg < 1:
        raise DomainError("NCSeries need maxdeg >= 1")
    return NCSeries(1, p.maxdeg, {(1,) * k: p[k] for k in range(1, p.maxdeg + 1)})


def _as_power_series(f: SeriesLike) -> PowerSeries1:
    if isinstance(f, NCSeries):
        return from_nc(f)
    if f[0]:
        raise DomainError("Expected a series without constant term")
    return f


def f_transform(f: SeriesLike) -> PowerSeries1:
    """F(f) = f⁻¹(z)/z; constant term 1/f_1, maxdeg one less than f.

    Raises:
        NotInvertibleError: if f_1 = 0.
    """
    p = _as_power_series(f)
    if p.maxdeg < 1 or not p[1]:
        raise NotInvertibleError("F-transform needs f_1 != 0")
    return comp_inverse(p).shift_down()


def s_v_transform(m: SeriesLike) -> PowerSeries1:
    """S_V(m) = (1+z)·m⁻¹(z)/z for a moment series with m_1 != 0."""
    p = _as_power_series(m)
    if p.maxdeg < 1 or not p[1]:
        raise NotInvertibleError("S_V-transform needs an invertible first moment")
    q = comp_inverse(p).shift_down()
    return PowerSeries1([1, 1], q.maxdeg) * q


def log_morphism(f: SeriesLike) -> PowerSeries1:
    """LOG(f) = d/dz log F(f) for f with f_1 = 1; maxdeg two less than f."""
    p = _as_power_series(f)
    if p.maxdeg < 2:
        raise DomainError("LOG needs maxdeg >= 2")
    if p[1] != 1:
        raise DomainError(f"LOG is defined on series with f_1 = 1, got {p[1]}")
    return f_transform(p).log().derivative()


def exp_morphism(t: PowerSeries1) -> NCSeries:
    """Inverse of LOG: z·exp(∫t) is f⁻¹, so invert it compositionally."""
    inverse = t.integral().exp().shift_up()
    return to_nc(comp_inverse(inverse))


def exp_v(m: NCSeries, cap: Optional[int] = None) -> NCSeries:
    """EXP_V(m) = EXP((m ⊠ Moeb)/z) ⊠ Zeta on one-variable moment series.

    The additive group of moment series is identified with R[[z]] by
    dividing by z, so EXP_V is a bijection onto series with first moment 1.
    """
    if m.s != 1:
        raise ValidationError(f"EXP_V acts on one-variable series, got alphabet size {m.s}")
    t = from_nc(box_conv(m, moeb(1, m.maxdeg, cap), cap=cap)).shift_down()
    f = exp_morphism(t)
    return box_conv(f, zeta(1, f.maxdeg), cap=cap)


def log_v(mu: NCSeries, cap: Optional[int] = None) -> NCSeries:
    """LOG_V, the inverse of exp_v, on moment series with first moment 1."""
    if mu.s != 1:
        raise ValidationError(f"LOG_V acts on one-variable series, got alphabet size {mu.s}")
    if mu.maxdeg < 2:
        raise DomainError("LOG_V needs maxdeg >= 2")
    if mu.get((1,)) != 1:
        raise DomainError(f"LOG_V needs first moment 1, got {mu.get((1,))}")
    cumulants = box_conv(mu, moeb(1, mu.maxdeg, cap), cap=cap)
    m = to_nc(log_morphism(cumulants).shift_up())
    return box_conv(m, zeta(1, m.maxdeg), cap=cap)


def r_v(m: NCSeries, cap: Optional[int] = None) -> PowerSeries1:
    """R_V(m) = m ⊠ Moeb_1 as an ordinary power series."""
    if m.s != 1:
        raise ValidationError(f"R_V acts on one-variable series, got alphabet size {m.s}")
    return from_nc(box_conv(m, moeb(1, m.maxdeg, cap), cap=cap))


def r_inverse_relation(m: NCSeries) -> Tuple[PowerSeries1, PowerSeries1]:
    """Both sides of R⁻¹(z) = (1+z)·M⁻¹(z) for a moment series M = m."""
    moments = from_nc(m)
    lhs = comp_inverse(r_v(m))
    rhs = PowerSeries1([1, 1], moments.maxdeg) * comp_inverse(moments)
    return lhs, rhs


def symm_coordinates(maxdeg: int) -> Tuple[CoordPoly, ...]:
    """h_1, ..., h_{maxdeg-1} in the reduced coordinates X̄_j = X̄_(1^j).

    h_n is the z^{n+1} coefficient of the compositional inverse of the
    universal series u = z + Σ_{j>=2} X̄_j z^j, i.e. the t^n coefficient of
    F(u). Evaluating h_n at f gives the coefficient of z^n in f_transform(f).
    """
    if maxdeg < 2:
        raise DomainError(f"symm_coordinates needs maxdeg >= 2, got {maxdeg}")
    names = ",".join(["z", "y"] + [f"c{j}" for j in range(2, maxdeg + 1)])
    _, z, y, *cs = ring(names, QQ)
    universal = z + sum((c * z ** j for j, c in enumerate(cs, start=2)), z.ring.zero)
    inverse = rs_series_reversion(universal, z, maxdeg + 1, y)
    terms: Dict[int, Dict] = {n: {} for n in range(1, maxdeg)}
    for exps, c in inverse.items():
        n = exps[1] - 1
        if n in terms:
            words = [(1,) * j for j, e in enumerate(exps[2:], start=2) for _ in range(e)]
            terms[n][mono_from_words(words)] = from_qq(c)
    logger.debug("symm_coordinates: inverted universal series to degree %d", maxdeg)
    return tuple(CoordPoly(terms[n], reduced=True) for n in range(1, maxdeg))


def symm_display(h: CoordPoly, n: int) -> Dict[Tuple[Tuple[int, int], ...], Fraction]:
    """Printed form of h_n: sign (-1)^n and X̄_j relabeled as index j-1.

    Keys are sorted tuples of (index, exponent).
    """
    sign = 1 if n % 2 == 0 else -1
    out: Dict[Tuple[Tuple[int, int], ...], Fraction] = {}
    for m, c in h.terms():
        key = tuple(sorted((len(w) - 1, e) for w, e in m))
        out[key] = sign * c
    return out


def render_symm_display(display: Dict[Tuple[Tuple[int, int], ...], Fraction]) -> str:
    parts = []
    for key, c in sorted(display.items(), key=lambda item: (-sum(e for _, e in item[0]), item[0])):
        body = "*".join(f"Xbar{i}" + (f"^{e}" if e != 1 else "") for i, e in key) or "1"
        parts.append((c, body))
    out = []
    for i, (c, body) in enumerate(parts):
        text = body if abs(c) == 1 else f"{abs(c)}*{body}"
        if i == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append((" - " if c < 0 else " + ") + text)
    return "".join(out) or "0"
