"""Verification suites behind `ncf verify`.

Each suite checks one family of structural identities on exact rational
fixtures and returns CheckResult records. Suites are deterministic for a
fixed seed, alphabet size and truncation degree.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from ncfree.errors import NCFreeError
from ncfree.freeconv import (
    Membership,
    addv,
    box_conv,
    box_inverse,
    commutator,
    cumulants_from_moments,
    free_product_cumulants,
    grouped_cumulants,
    in_subgroup,
    membership,
    moeb,
    moments_from_cumulants,
    mulv,
    torus_factor,
    zeta,
)
from ncfree.hopf import CoordinateAlgebra, bilinear_part, coproduct, cumulant_polynomial, is_symmetric, lie_bracket
from ncfree.hopf import reduced_coproduct
from ncfree.ncpart import NCPartition, catalan, enumerate_nc, kreweras, kreweras_squared_shift, nc_join
from ncfree.onedim import (
    exp_morphism,
    exp_v,
    f_transform,
    log_morphism,
    log_v,
    r_inverse_relation,
    s_v_transform,
    symm_coordinates,
    symm_display,
)
from ncfree.representation import (
    build_rep,
    certify_triangular,
    certify_unipotent,
    nilpotency_index,
    one_dim_s_matrix,
    recover_coefficients,
    reduced_basis,
    s_transform,
)
from ncfree.series import NCSeries, add, all_words, cauchy_mul, eval_block_functional, scale, unit, zero

from .config import Config, get_config
from .fixtures import REFERENCE_KREWERAS_ARROWS, REFERENCE_NC_LISTS, FixtureFactory

logger = logging.getLogger(__name__)

# One-variable identities are checked at this truncation degree.
ONEDIM_MAXDEG = 8

# Hopf axioms are checked on every generator up to this word length, for s <= 2.
AXIOM_MAXDEG = 5

# Printed symm polynomials h_1..h_4, keyed by sorted (index, exponent) pairs
# after the X̄_j -> X̄_{j-1} relabeling and the sign (-1)^n.
REFERENCE_SYMM = {
    1: {((1, 1),): Fraction(1)},
    2: {((1, 2),): Fraction(2), ((2, 1),): Fraction(-1)},
    3: {((1, 3),): Fraction(5), ((1, 1), (2, 1)): Fraction(-5), ((3, 1),): Fraction(1)},
    4: {
        ((1, 4),): Fraction(14),
        ((1, 2), (2, 1)): Fraction(-21),
        ((1, 1), (3, 1)): Fraction(6),
        ((2, 2),): Fraction(3),
        ((4, 1),): Fraction(-1),
    },
}


@dataclass
class CheckResult:
    """Outcome of a single named check."""

    suite: str
    check: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteContext:
    """Parameters shared by every suite of one run."""

    config: Config
    factory: FixtureFactory
    s: int
    maxdeg: int
    jobs: int = 1

    @property
    def degree_bound(self) -> int:
        return self.maxdeg - 1 if self.config.degree_bound is None else self.config.degree_bound


class _Recorder:
    def __init__(self, suite: str):
        self.suite = suite
        self.results: List[CheckResult] = []

    def check(self, name: str, fn: Callable[[], object]) -> None:
        """Run fn; a truthy result passes, a string result is a failure detail."""
        try:
            outcome = fn()
        except (NCFreeError, RuntimeError, ArithmeticError) as e:
            self.results.append(CheckResult(self.suite, name, False, f"{type(e).__name__}: {e}"))
            return
        if isinstance(outcome, str):
            self.results.append(CheckResult(self.suite, name, False, outcome))
        else:
            self.results.append(CheckResult(self.suite, name, bool(outcome), "" if outcome else "identity violated"))


def _all(items: Iterable[bool]) -> bool:
    return all(items)


# ============================================================================
# ncpart
# ============================================================================


def suite_ncpart(ctx: SuiteContext) -> List[CheckResult]:
    rec = _Recorder("ncpart")
    top = min(8, ctx.config.nc_cap)
    rec.check("catalan_counts", lambda: _all(len(enumerate_nc(n)) == catalan(n) for n in range(1, top + 1)))

    def reference_lists():
        for n, listed in REFERENCE_NC_LISTS.items():
            if set(enumerate_nc(n)) != {NCPartition.from_blocks(b) for b in listed}:
                return f"NC({n}) differs from the reference list"
        return True

    def reference_arrows():
        for n, arrows in REFERENCE_KREWERAS_ARROWS.items():
            listed = [NCPartition.from_blocks(b) for b in REFERENCE_NC_LISTS[n]]
            for src, dst in arrows.items():
                if kreweras(listed[src - 1]) != listed[dst - 1]:
                    return f"K({listed[src - 1]}) = {kreweras(listed[src - 1])}, expected {listed[dst - 1]}"
        return True

    rec.check("reference_lists", reference_lists)
    rec.check("reference_kreweras_arrows", reference_arrows)
    rec.check("block_count_relation", lambda: _all(
        p.size + kreweras(p).size == n + 1 for n in range(1, top + 1) for p in enumerate_nc(n)))
    rec.check("kreweras_bijective", lambda: _all(
        len({kreweras(p) for p in enumerate_nc(n)}) == catalan(n) for n in range(1, top + 1)))
    rec.check("kreweras_squared_rotation", lambda: _all(
        kreweras_squared_shift(p) == p.rotated(-1) for n in range(1, top + 1) for p in enumerate_nc(n)))

    def order_reversing():
        for n in range(1, min(5, top) + 1):
            parts = enumerate_nc(n)
            for p in parts:
                for q in parts:
                    if p.refines(q) and not kreweras(q).refines(kreweras(p)):
                        return f"{p} <= {q} but K({q}) is not below K({p})"
        return True

    rec.check("kreweras_order_reversing", order_reversing)

    def join_laws():
        for n in range(1, min(4, top) + 1):
            parts = enumerate_nc(n)
            for p in parts:
                if nc_join(p, p) != p:
                    return f"join not idempotent at {p}"
                for q in parts:
                    j = nc_join(p, q)
                    if j != nc_join(q, p) or not (p.refines(j) and q.refines(j)):
                        return f"join of {p} and {q} is not a symmetric upper bound"
                    for r in parts:
                        if nc_join(j, r) != nc_join(p, nc_join(q, r)):
                            return f"join not associative at {p}, {q}, {r}"
        return True

    rec.check("join_lattice_laws", join_laws)
    return rec.results


# ============================================================================
# series
# ============================================================================


def suite_series(ctx: SuiteContext) -> List[CheckResult]:
    rec = _Recorder("series")
    fx = ctx.factory
    triples = [(fx.series(ctx.s, ctx.maxdeg), fx.series(ctx.s, ctx.maxdeg), fx.series(ctx.s, ctx.maxdeg))
               for _ in range(10)]
    rec.check("add_commutative", lambda: _all(add(f, g) == add(g, f) for f, g, _ in triples))
    rec.check("cauchy_associative", lambda: _all(
        cauchy_mul(cauchy_mul(f, g), h) == cauchy_mul(f, cauchy_mul(g, h)) for f, g, h in triples))
    rec.check("cauchy_distributive", lambda: _all(
        cauchy_mul(f, add(g, h)) == add(cauchy_mul(f, g), cauchy_mul(f, h)) for f, g, h in triples))

    def truncation():
        d = ctx.maxdeg - 1
        if d < 1:
            return True
        return _all(
            cauchy_mul(f.truncate(d), g.truncate(d)) == cauchy_mul(f, g).truncate(d)
            and add(f.truncate(d), g.truncate(d)) == add(f, g).truncate(d)
            and scale(3, f.truncate(d)) == scale(3, f).truncate(d)
            for f, g, _ in triples
        )

    rec.check("truncation_coherence", truncation)

    def block_functional_nonlinear():
        z = unit(1, 2)
        w, p = (1, 1), NCPartition.zero(2)
        return eval_block_functional(add(z, z), w, p) != 2 * eval_block_functional(z, w, p)

    rec.check("block_functional_nonlinear", block_functional_nonlinear)
    return rec.results


# ============================================================================
# group
# ============================================================================


def suite_group(ctx: SuiteContext) -> List[CheckResult]:
    rec = _Recorder("group")
    fx, s, d, jobs = ctx.factory, ctx.s, ctx.maxdeg, ctx.jobs
    count = ctx.config.group_fixtures
    e = unit(s, d)
    fixtures = [(fx.group_element(s, d), fx.group_element(s, d), fx.group_element(s, d)) for _ in range(count)]

    rec.check("associativity", lambda: _all(
        box_conv(box_conv(f, g, jobs), h, jobs) == box_conv(f, box_conv(g, h, jobs), jobs) for f, g, h in fixtures))
    rec.check("two_sided_unit", lambda: _all(
        box_conv(e, f, jobs) == f and box_conv(f, e, jobs) == f for f, _, _ in fixtures))
    rec.check("two_sided_inverse", lambda: _all(
        box_conv(f, box_inverse(f), jobs) == e and box_conv(box_inverse(f), f, jobs) == e for f, _, _ in fixtures))
    rec.check("closure", lambda: _all(membership(box_conv(f, g, jobs)) is not None for f, g, _ in fixtures))
    rec.check("moeb_inverts_zeta", lambda: box_conv(moeb(s, d), zeta(s, d)) == e == box_conv(zeta(s, d), moeb(s, d)))

    def s1_commutative():
        for _ in range(min(count, 20)):
            f, g = fx.series(1, ONEDIM_MAXDEG), fx.series(1, ONEDIM_MAXDEG)
            if box_conv(f, g) != box_conv(g, f):
                return "boxed convolution of one-variable series did not commute"
        return True

    rec.check("s1_commutative", s1_commutative)

    def noncommutative_witness():
        f = NCSeries(2, 3, {(1,): 1, (2,): 1, (1, 1): 1})
        g = NCSeries(2, 3, {(1,): 1, (2,): 1, (1, 2): 1})
        return box_conv(f, g).coeff((1, 2, 1)) == 1 and box_conv(g, f).coeff((1, 2, 1)) == 0

    rec.check("s2_noncommutative_witness", noncommutative_witness)

    def non_distributive():
        f = unit(1, 2)
        g = NCSeries(1, 2, {(1,): 1, (1, 1): 1})
        return box_conv(add(f, f), g) != add(box_conv(f, g), box_conv(f, g))

    rec.check("non_distributive_witness", non_distributive)
    return rec.results


# ============================================================================
# moments
# ============================================================================


def suite_moments(ctx: SuiteContext) -> List[CheckResult]:
    rec = _Recorder("moments")
    fx, s, d = ctx.factory, ctx.s, ctx.maxdeg
    fixtures = [fx.series(s, d) for _ in range(20)]
    rec.check("round_trip", lambda: _all(
        cumulants_from_moments(moments_from_cumulants(r, ctx.jobs), ctx.jobs) == r for r in fixtures))
    rec.check("unit_cumulants_give_zeta", lambda: moments_from_cumulants(unit(s, d)) == zeta(s, d))

    def kappa2():
        poly = cumulant_polynomial((1, 1))
        return {m: c for m, c in poly.terms()} == {(((1, 1), 1),): 1, (((1,), 2),): -1}

    def kappa3():
        poly = cumulant_polynomial((1, 2, 3))
        return sorted(c for _, c in poly.terms()) == [-1, -1, -1, 1, 2] and poly.coefficient(
            (((1,), 1), ((2,), 1), ((3,), 1))) == 2

    rec.check("kappa2_polynomial", kappa2)
    rec.check("kappa3_polynomial", kappa3)
    rec.check("addv_neutral", lambda: _all(addv(m, zero(s, d)) == m for m in fixtures[:5]))
    rec.check("mulv_zeta_neutral", lambda: _all(mulv(zeta(s, d), m) == m for m in fixtures[:5]))
    return rec.results


# ============================================================================
# freeness
# ============================================================================


def suite_freeness(ctx: SuiteContext) -> List[CheckResult]:
    rec = _Recorder("freeness")
    fx = ctx.factory
    s, d = min(ctx.s, 2), min(ctx.maxdeg, 4)
    pairs = [(fx.series(s, d), fx.series(s, d)) for _ in range(3)]
    rec.check("product_formula_matches_box_conv", lambda: _all(
        free_product_cumulants(f, g) == box_conv(f, g) for f, g in pairs))

    def full_grouping_gives_moments():
        r = fx.series(d, d)
        word = tuple(range(1, d + 1))
        return grouped_cumulants(r, (d,)) == moments_from_cumulants(r).coeff(word)

    def singleton_grouping_gives_cumulant():
        r = fx.series(d, d)
        return grouped_cumulants(r, tuple(range(1, d + 1))) == r.coeff(tuple(range(1, d + 1)))

    rec.check("full_grouping_gives_moment", full_grouping_gives_moments)
    rec.check("singleton_grouping_gives_cumulant", singleton_grouping_gives_cumulant)
    return rec.results


# ============================================================================
# hopf
# ============================================================================


def suite_hopf(ctx: SuiteContext) -> List[CheckResult]:
    rec = _Recorder("hopf")
    fx = ctx.factory
    s, d = min(ctx.s, 2), min(ctx.maxdeg, AXIOM_MAXDEG)
    full = CoordinateAlgebra(s, d)

    def axioms(algebra, min_length):
        for w in all_words(s, AXIOM_MAXDEG):
            if len(w) < min_length:
                continue
            failed = [k for k, ok in algebra.check_hopf_axioms(w).items() if not ok]
            if failed:
                return f"{', '.join(failed)} fail at {list(w)}"
        return True

    rec.check("axioms_full", lambda: axioms(CoordinateAlgebra(s, AXIOM_MAXDEG), 1))
    rec.check("axioms_reduced", lambda: axioms(CoordinateAlgebra(s, AXIOM_MAXDEG, reduced=True), 2))

    fixtures = [(fx.group_element(s, d), fx.group_element(s, d)) for _ in range(ctx.config.hopf_fixtures)]

    def coproduct_duality():
        for f, g in fixtures:
            fg = box_conv(f, g)
            if any(full.coproduct(w).evaluate(f, g) != fg.get(w) for w in all_words(s, d)):
                return "Δ evaluated at (f, g) differs from f ⊠ g"
        return True

    def antipode_duality():
        for f, _ in fixtures:
            inv = box_inverse(f)
            if any(full.antipode(w).evaluate(f) != inv.get(w) for w in all_words(s, d)):
                return "S evaluated at f differs from the inverse of f"
        return True

    rec.check("coproduct_duality", coproduct_duality)
    rec.check("antipode_duality", antipode_duality)
    rec.check("coproduct_term_counts", lambda: (
        len(reduced_coproduct((1, 2, 3), 3, 3)) == 5 and len(coproduct((1, 2, 3, 4), 4, 4)) == 14))
    rec.check("bilinear_asymmetric_witness", lambda: any(
        not is_symmetric(bilinear_part(w, 2, 3)) for w in all_words(2, 3) if len(w) == 3))
    rec.check("lie_bracket_s1_vanishes", lambda: _all(
        not lie_bracket((1,) * a, (1,) * b, 1, ONEDIM_MAXDEG - 2)
        for a in range(2, ONEDIM_MAXDEG - 2) for b in range(2, ONEDIM_MAXDEG - 2)))
    rec.check("lie_bracket_s2_witness", lambda: lie_bracket((1, 2), (1, 1), 2, 3).get((1, 2, 1)) == 1)
    return rec.results


# ============================================================================
# structure
# ============================================================================


def suite_structure(ctx: SuiteContext) -> List[CheckResult]:
    rec = _Recorder("structure")
    fx, s, d = ctx.factory, ctx.s, max(ctx.maxdeg, 3)
    count = max(1, ctx.config.group_fixtures // 10)
    j = 2

    def normality():
        for _ in range(count):
            f, g = fx.subgroup_element(s, d, j), fx.unipotent(s, d)
            if not in_subgroup(box_conv(box_conv(g, f), box_inverse(g)), j):
                return "conjugate left the subgroup"
        return True

    def additivity():
        for _ in range(count):
            f, h = fx.subgroup_element(s, d, j), fx.subgroup_element(s, d, j)
            fh = box_conv(f, h)
            if any(fh.get(w) != f.get(w) + h.get(w) for w in all_words(s, j + 1) if len(w) == j + 1):
                return f"boxed convolution is not additive at degree {j + 1}"
        return True

    rec.check("subgroup_normal", normality)
    rec.check("subgroup_additive_next_degree", additivity)
    rec.check("commutators_vanish_through_degree_2", lambda: _all(
        in_subgroup(commutator(fx.unipotent(s, d), fx.unipotent(s, d)), 2) for _ in range(count)))

    def torus_split():
        for _ in range(count):
            f = fx.group_element(s, d)
            t, p = torus_factor(f)
            if box_conv(t, p) != f or membership(p) is not Membership.UNIPOTENT:
                return "f != t ⊠ p"
        return True

    rec.check("torus_factor_recomposes", torus_split)
    return rec.results


# ============================================================================
# repr
# ============================================================================


def suite_repr(ctx: SuiteContext) -> List[CheckResult]:
    rec = _Recorder("repr")
    fx, s, d, bound = ctx.factory, ctx.s, ctx.maxdeg, ctx.degree_bound
    basis = reduced_basis(s, d, bound)
    count = max(1, ctx.config.hopf_fixtures // 10)
    pairs = [(fx.unipotent(s, d), fx.unipotent(s, d)) for _ in range(count)]
    reps = [(build_rep(f, basis=basis), build_rep(g, basis=basis)) for f, g in pairs]

    rec.check("homomorphism", lambda: _all(
        build_rep(box_conv(f, g), basis=basis) == mf @ mg for (f, g), (mf, mg) in zip(pairs, reps)))
    rec.check("faithful", lambda: _all(
        recover_coefficients(mf, basis) == f.truncate(min(d, bound + 1)) for (f, _), (mf, _) in zip(pairs, reps)))
    rec.check("triangular", lambda: _all(certify_triangular(mf, basis) for mf, _ in reps))
    rec.check("unipotent", lambda: _all(certify_unipotent(mf) for mf, _ in reps))
    rec.check("nilpotency_index_bound", lambda: _all(
        nilpotency_index(mf) is not None and nilpotency_index(mf) <= bound + 1 for mf, _ in reps))
    rec.check("inverse_matches_box_inverse", lambda: _all(
        build_rep(box_inverse(f), basis=basis) == mf.inverse() for (f, _), (mf, _) in zip(pairs, reps)))

    def s_transform_hom():
        sd = min(d, 3)
        for _ in range(2):
            f, g = fx.group_element(s, sd), fx.group_element(s, sd)
            if s_transform(box_conv(f, g)) != s_transform(f) @ s_transform(g):
                return "s_transform is not multiplicative"
        return True

    rec.check("s_transform_homomorphism", s_transform_hom)

    def one_dim():
        for _ in range(count):
            a, b = fx.unipotent(1, d), fx.unipotent(1, d)
            if one_dim_s_matrix(box_conv(a, b)) != one_dim_s_matrix(a) @ one_dim_s_matrix(b):
                return "one_dim_s_matrix is not multiplicative"
        return True

    rec.check("one_dim_s_matrix_multiplicative", one_dim)
    return rec.results


# ============================================================================
# onedim
# ============================================================================


def suite_onedim(ctx: SuiteContext) -> List[CheckResult]:
    rec = _Recorder("onedim")
    fx, n = ctx.factory, ONEDIM_MAXDEG
    count = ctx.config.onedim_fixtures
    unip = [(fx.unipotent(1, n), fx.unipotent(1, n)) for _ in range(count)]
    moments = [(fx.series(1, n), fx.series(1, n)) for _ in range(count)]

    rec.check("f_transform_multiplicative", lambda: _all(
        f_transform(box_conv(f, g)) == f_transform(f) * f_transform(g) for f, g in unip))
    rec.check("s_v_transform_multiplicative", lambda: _all(
        s_v_transform(mulv(f, g)) == s_v_transform(f) * s_v_transform(g) for f, g in unip))
    rec.check("s_v_is_f_of_cumulants", lambda: _all(
        s_v_transform(moments_from_cumulants(f)) == f_transform(f) for f, _ in unip))
    rec.check("log_additive", lambda: _all(
        log_morphism(box_conv(f, g)) == log_morphism(f) + log_morphism(g) for f, g in unip))
    rec.check("exp_inverts_log", lambda: _all(exp_morphism(log_morphism(f)) == f for f, _ in unip))
    rec.check("logv_inverts_expv", lambda: _all(log_v(exp_v(m)) == m for m, _ in moments))
    rec.check("expv_inverts_logv", lambda: _all(exp_v(log_v(mu)) == mu for mu, _ in unip))
    rec.check("expv_homomorphism", lambda: _all(
        exp_v(addv(a, b)) == mulv(exp_v(a), exp_v(b)) for a, b in moments))
    rec.check("product_through_logv", lambda: _all(
        mulv(a, b) == exp_v(addv(log_v(a), log_v(b))) for a, b in unip))
    rec.check("expv_zero_is_zeta", lambda: exp_v(zero(1, n)) == zeta(1, n + 1))

    def r_inverse():
        for m, _ in unip:
            lhs, rhs = r_inverse_relation(m)
            if lhs != rhs:
                return "R⁻¹(z) != (1+z)·M⁻¹(z)"
        return True

    rec.check("r_inverse_relation", r_inverse)
    return rec.results


# ============================================================================
# symm
# ============================================================================


def suite_symm(ctx: SuiteContext) -> List[CheckResult]:
    rec = _Recorder("symm")
    hs = symm_coordinates(6)

    rec.check("printed_polynomials", lambda: _all(
        symm_display(hs[n - 1], n) == expected for n, expected in REFERENCE_SYMM.items()))
    rec.check("catalan_leading_coefficients", lambda: _all(
        symm_display(hs[n - 1], n).get(((1, n),)) == catalan(n) for n in range(1, 6)))

    def evaluation():
        for _ in range(20):
            f = ctx.factory.unipotent(1, 6)
            ft = f_transform(f)
            if any(h.evaluate(f) != ft[k] for k, h in enumerate(hs, start=1)):
                return "h_n(f) differs from the F-transform coefficient"
        return True

    rec.check("matches_f_transform", evaluation)
    return rec.results


SUITES: Dict[str, Callable[[SuiteContext], List[CheckResult]]] = {
    "ncpart": suite_ncpart,
    "series": suite_series,
    "group": suite_group,
    "moments": suite_moments,
    "freeness": suite_freeness,
    "hopf": suite_hopf,
    "structure": suite_structure,
    "repr": suite_repr,
    "onedim": suite_onedim,
    "symm": suite_symm,
}


def run_suites(names: Optional[Sequence[str]] = None, s: Optional[int] = None, maxdeg: Optional[int] = None,
               seed: Optional[int] = None, jobs: Optional[int] = None,
               config: Optional[Config] = None) -> List[CheckResult]:
    """Run the named suites (all by default) in their fixed order.

    Raises:
        ValueError: on an unknown suite name.
    """
    config = config or get_config()
    wanted = list(SUITES) if not names or "all" in names else list(names)
    unknown = [name for name in wanted if name not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suite(s): {', '.join(unknown)}")
    results: List[CheckResult] = []
    for name in SUITES:
        if name not in wanted:
            continue
        # Every suite gets its own factory so results do not depend on which suites ran before.
        ctx = SuiteContext(
            config=config,
            factory=FixtureFactory.from_config(config, seed),
            s=config.default_s if s is None else s,
            maxdeg=config.default_maxdeg if maxdeg is None else maxdeg,
            jobs=config.jobs if jobs is None else jobs,
        )
        logger.info("running suite %s (s=%d, maxdeg=%d)", name, ctx.s, ctx.maxdeg)
        suite_results = SUITES[name](ctx)
        logger.debug("suite %s: %d/%d checks passed", name, sum(r.passed for r in suite_results),
                     len(suite_results))
        results.extend(suite_results)
    return results


def format_table(results: Sequence[CheckResult]) -> str:
    """Render a pass/fail table with a summary line."""
    width = max((len(r.check) for r in results), default=5)
    lines = [f"{'SUITE':10} {'CHECK':{width}} RESULT", "-" * (width + 18)]
    for r in results:
        line = f"{r.suite:10} {r.check:{width}} {'PASS' if r.passed else 'FAIL'}"
        if r.detail:
            line += f"  ({r.detail})"
        lines.append(line)
    failed = sum(1 for r in results if not r.passed)
    lines.append("-" * (width + 18))
    lines.append(f"{len(results) - failed} passed, {failed} failed")
    return "\n".join(lines)
