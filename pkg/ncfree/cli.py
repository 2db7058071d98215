#!/usr/bin/env python3
"""Main CLI entry point for ncfree.

This provides the `ncf` command with subcommand groups for every library
operation plus the verification harness.

Usage:
    ncf nc enumerate --n 4
    ncf nc kreweras --partition "[[1,2],[3,4]]"
    ncf conv box --f unit.json --g f.json
    ncf onedim symm --maxdeg 5
    ncf verify all --s 2 --maxdeg 4 --seed 7
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from . import __version__
from . import freeconv, hopf, ncpart, onedim, representation, series
from .errors import SizeError, ValidationError
from .serialize import (
    dumps,
    load_input,
    matrix_from_json,
    matrix_to_json,
    partition_from_json,
    partition_to_json,
    poly_to_json,
    power_series_from_json,
    power_series_to_json,
    series_from_json,
    series_to_json,
    tensor_to_json,
    word_values_to_json,
)
from .rational import as_rational, format_rational

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INVALID = 3


@dataclass(frozen=True)
class Command:
    """A leaf subcommand: its handler and the library operations it exposes."""

    handler: Callable[[argparse.Namespace], Any]
    operations: Tuple[str, ...] = ()
    # Raw handlers print their own output and return an exit status.
    raw: bool = False


# ============================================================================
# Argument helpers
# ============================================================================


def _config():
    from harness.config import get_config

    return get_config()


def _word(value: str) -> Tuple[int, ...]:
    """Parse "[1,2,1]" or "1,2,1"."""
    text = value.strip()
    if text.startswith("["):
        parsed = load_input(text)
    else:
        try:
            parsed = [int(x) for x in text.split(",") if x.strip()]
        except ValueError:
            raise ValidationError(f"Not a word: {value!r}") from None
    if not isinstance(parsed, list):
        raise ValidationError(f"Not a word: {value!r}")
    return series.validate_word(parsed)


def _int_list(value: str) -> List[int]:
    return list(_word(value))


def _cap(args: argparse.Namespace) -> int:
    return _config().nc_cap if args.nc_cap is None else args.nc_cap


def _check_cap(n: int, args: argparse.Namespace) -> None:
    cap = _cap(args)
    if n > cap:
        raise SizeError(f"Degree {n} exceeds the NC(n) cap {cap}")


def _series(value: str, args: argparse.Namespace) -> series.NCSeries:
    f = series_from_json(load_input(value))
    _check_cap(f.maxdeg, args)
    return f


def _partition(value: str, n: Optional[int] = None) -> ncpart.NCPartition:
    return partition_from_json(load_input(value), n)


def _onevar(value: str, args: argparse.Namespace):
    """A one-variable input: a coefficient array or a series object with s = 1."""
    obj = load_input(value)
    if isinstance(obj, list):
        return power_series_from_json(obj)
    f = series_from_json(obj)
    _check_cap(f.maxdeg, args)
    return f


def _dims(args: argparse.Namespace) -> Tuple[int, int]:
    config = _config()
    s = config.default_s if args.s is None else args.s
    maxdeg = config.default_maxdeg if args.maxdeg is None else args.maxdeg
    if s < 1 or maxdeg < 1:
        raise ValidationError(f"Need s >= 1 and maxdeg >= 1, got s={s}, maxdeg={maxdeg}")
    _check_cap(maxdeg, args)
    return s, maxdeg


def _jobs(args: argparse.Namespace) -> int:
    return _config().jobs if args.jobs is None else args.jobs


def _bound(args: argparse.Namespace) -> Optional[int]:
    return _config().degree_bound if args.D is None else args.D


def _add_output(parser):
    parser.add_argument("--output", "-o", type=Path, help="Write JSON here instead of standard output")


def _add_dims(parser):
    parser.add_argument("--s", type=int, help="Alphabet size (default from config)")
    parser.add_argument("--maxdeg", type=int, help="Truncation degree (default from config)")


def _leaf(subparsers, name: str, help_text: str, *inputs: Tuple[str, str], epilog: str = ""):
    parser = subparsers.add_parser(
        name,
        help=help_text,
        description=help_text,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=epilog,
    )
    for flag, text in inputs:
        parser.add_argument(flag, required=True, help=text)
    _add_output(parser)
    return parser


SERIES_HELP = "Series as inline JSON or a file path"


# ============================================================================
# nc
# ============================================================================


def add_nc_parser(subparsers):
    """Add the 'nc' command group."""
    parser = subparsers.add_parser(
        "nc",
        help="Non-crossing partitions and the Kreweras complement",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  ncf nc enumerate --n 4
  ncf nc kreweras --partition "[[1,2],[3,4]]"
  ncf nc join --partition "[[1,2],[3],[4]]" --other "[[1],[2,3],[4]]"
  ncf nc interval --n 5 --cuts 2,5
""",
    )
    actions = parser.add_subparsers(dest="action", metavar="<action>")
    p = _leaf(actions, "enumerate", "List NC(n)")
    p.add_argument("--n", type=int, required=True, help="Ground set size")
    _leaf(actions, "check", "Test whether a partition is non-crossing", ("--partition", "Blocks as JSON"))
    for name, text in (("kreweras", "Kreweras complement K(p)"), ("kreweras2", "K(K(p)), checked against the rotation")):
        p = _leaf(actions, name, text, ("--partition", "Blocks as JSON"))
        p.add_argument("--n", type=int, help="Ground set size (default: largest element)")
    p = _leaf(actions, "join", "Join of two partitions in NC(n)", ("--partition", "Blocks as JSON"),
              ("--other", "Blocks as JSON"))
    p.add_argument("--n", type=int, help="Ground set size (default: largest element)")
    p = _leaf(actions, "interval", "Interval partition from cut points", ("--cuts", "Cut points, e.g. 2,5"))
    p.add_argument("--n", type=int, required=True, help="Ground set size")
    return parser


def cmd_nc_enumerate(args):
    return [partition_to_json(p) for p in ncpart.enumerate_nc(args.n, _cap(args))]


def cmd_nc_check(args):
    blocks = load_input(args.partition)
    if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
        raise ValidationError("Expected a list of blocks")
    return ncpart.is_noncrossing(blocks)


def cmd_nc_kreweras(args):
    return partition_to_json(ncpart.kreweras(_partition(args.partition, args.n)))


def cmd_nc_kreweras2(args):
    return partition_to_json(ncpart.kreweras_squared_shift(_partition(args.partition, args.n)))


def cmd_nc_join(args):
    return partition_to_json(ncpart.nc_join(_partition(args.partition, args.n), _partition(args.other, args.n)))


def cmd_nc_interval(args):
    return partition_to_json(ncpart.interval_partition(args.n, _int_list(args.cuts)))


# ============================================================================
# series
# ============================================================================


def add_series_parser(subparsers):
    """Add the 'series' command group."""
    parser = subparsers.add_parser(
        "series",
        help="Series arithmetic, coefficients and moment-cumulant transforms",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  ncf series zeta --s 1 --maxdeg 5
  ncf series m2c --f moments.json -o cumulants.json
  ncf series coeff --f f.json --word 1,2,1
  ncf series block --f f.json --word 1,2,1,2 --partition "[[1,4],[2,3]]"
""",
    )
    actions = parser.add_subparsers(dest="action", metavar="<action>")
    _leaf(actions, "add", "Word-wise sum f + g", ("--f", SERIES_HELP), ("--g", SERIES_HELP))
    _leaf(actions, "scale", "Scalar multiple c*f", ("--c", "Rational, e.g. 3/4"), ("--f", SERIES_HELP))
    _leaf(actions, "mul", "Concatenation product f*g", ("--f", SERIES_HELP), ("--g", SERIES_HELP))
    _leaf(actions, "coeff", "Coefficient f_w", ("--f", SERIES_HELP), ("--word", "Word, e.g. 1,2,1"))
    _leaf(actions, "restrict", "Subword at increasing positions", ("--word", "Word, e.g. 1,2,1"),
          ("--block", "Positions, e.g. 1,3"))
    _leaf(actions, "block", "Block functional X_{w,p}(f)", ("--f", SERIES_HELP), ("--word", "Word"),
          ("--partition", "Blocks as JSON"))
    _leaf(actions, "m2c", "Cumulants from moments (M ⊠ Moeb)", ("--f", SERIES_HELP))
    _leaf(actions, "c2m", "Moments from cumulants (R ⊠ Zeta)", ("--f", SERIES_HELP))
    for name, text in (("zeta", "The all-ones series Zeta_s"), ("moeb", "The inverse of Zeta_s")):
        _add_dims(_leaf(actions, name, text))
    return parser


def cmd_series_add(args):
    return series_to_json(series.add(_series(args.f, args), _series(args.g, args)))


def cmd_series_scale(args):
    return series_to_json(series.scale(as_rational(args.c), _series(args.f, args)))


def cmd_series_mul(args):
    return series_to_json(series.cauchy_mul(_series(args.f, args), _series(args.g, args)))


def cmd_series_coeff(args):
    return format_rational(series.coeff(_series(args.f, args), _word(args.word)))


def cmd_series_restrict(args):
    return list(series.restrict_word(_word(args.word), _int_list(args.block)))


def cmd_series_block(args):
    w = _word(args.word)
    value = series.eval_block_functional(_series(args.f, args), w, _partition(args.partition, len(w)))
    return format_rational(value)


def cmd_series_m2c(args):
    return series_to_json(freeconv.cumulants_from_moments(_series(args.f, args), jobs=_jobs(args), cap=_cap(args)))


def cmd_series_c2m(args):
    return series_to_json(freeconv.moments_from_cumulants(_series(args.f, args), jobs=_jobs(args), cap=_cap(args)))


def cmd_series_zeta(args):
    return series_to_json(freeconv.zeta(*_dims(args)))


def cmd_series_moeb(args):
    return series_to_json(freeconv.moeb(*_dims(args), _cap(args)))


# ============================================================================
# conv
# ============================================================================


def add_conv_parser(subparsers):
    """Add the 'conv' command group."""
    parser = subparsers.add_parser(
        "conv",
        help="Boxed convolution group and free convolutions",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  ncf conv box --f f.json --g g.json
  ncf conv inv --f f.json
  ncf --jobs 4 conv mulv --f mu.json --g nu.json -o product.json
  ncf conv grouped --f r.json --cuts 2,4
""",
    )
    actions = parser.add_subparsers(dest="action", metavar="<action>")
    for name, text in (
        ("box", "Boxed convolution f ⊠ g"),
        ("addv", "Free additive convolution of moment series"),
        ("mulv", "Free multiplicative convolution of moment series"),
        ("commutator", "Group commutator f ⊠ g ⊠ f^-1 ⊠ g^-1"),
        ("free-product", "Cumulants of a product of free tuples via grouped cumulants"),
    ):
        _leaf(actions, name, text, ("--f", SERIES_HELP), ("--g", SERIES_HELP))
    _leaf(actions, "inv", "Inverse under boxed convolution", ("--f", SERIES_HELP))
    _leaf(actions, "torus", "Split f = t ⊠ p into torus and unipotent parts", ("--f", SERIES_HELP))
    p = _leaf(actions, "join-free", "Cumulants of the union of two free tuples", ("--f", SERIES_HELP),
              ("--g", SERIES_HELP))
    p.add_argument("--maxdeg", type=int, help="Truncation degree of the joined series")
    p = _leaf(actions, "grouped", "Cumulant of grouped products", ("--f", SERIES_HELP),
              ("--cuts", "Cut points, e.g. 2,4"))
    p.add_argument("--word", help="Word to evaluate (default 1,2,...,n)")
    return parser


def cmd_conv_box(args):
    return series_to_json(freeconv.box_conv(_series(args.f, args), _series(args.g, args), jobs=_jobs(args), cap=_cap(args)))


def cmd_conv_inv(args):
    return series_to_json(freeconv.box_inverse(_series(args.f, args), _cap(args)))


def cmd_conv_addv(args):
    return series_to_json(freeconv.addv(_series(args.f, args), _series(args.g, args), jobs=_jobs(args), cap=_cap(args)))


def cmd_conv_mulv(args):
    return series_to_json(freeconv.mulv(_series(args.f, args), _series(args.g, args), jobs=_jobs(args), cap=_cap(args)))


def cmd_conv_join_free(args):
    return series_to_json(freeconv.join_free(_series(args.f, args), _series(args.g, args), args.maxdeg))


def cmd_conv_grouped(args):
    word = _word(args.word) if args.word else None
    return format_rational(freeconv.grouped_cumulants(_series(args.f, args), _int_list(args.cuts), word, _cap(args)))


def cmd_conv_commutator(args):
    return series_to_json(freeconv.commutator(_series(args.f, args), _series(args.g, args), _cap(args)))


def cmd_conv_torus(args):
    t, p = freeconv.torus_factor(_series(args.f, args), _cap(args))
    return {"torus": series_to_json(t), "unipotent": series_to_json(p)}


def cmd_conv_free_product(args):
    return series_to_json(freeconv.free_product_cumulants(_series(args.f, args), _series(args.g, args), _cap(args)))


# ============================================================================
# hopf
# ============================================================================


def add_hopf_parser(subparsers):
    """Add the 'hopf' command group."""
    parser = subparsers.add_parser(
        "hopf",
        help="Coordinate Hopf algebra, formal group law and Lie bracket",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  ncf hopf coproduct --word 1,2,3,4 --s 4 --maxdeg 4
  ncf hopf antipode --word 1,1,1 --s 1 --maxdeg 3 --reduced
  ncf hopf bracket --word 1,2 --other 1,1 --s 2 --maxdeg 3
""",
    )
    actions = parser.add_subparsers(dest="action", metavar="<action>")
    for name, text in (
        ("coproduct", "Co-product of X_w"),
        ("reduced", "Co-product of the reduced generator Xbar_w"),
        ("fgl", "Formal group law component F_w"),
        ("bilinear", "Bilinear part B_w of the formal group law"),
        ("antipode", "Antipode S(X_w)"),
    ):
        p = _leaf(actions, name, text, ("--word", "Word, e.g. 1,2,1"))
        _add_dims(p)
        if name == "antipode":
            p.add_argument("--reduced", action="store_true", help="Use the reduced generators")
    _leaf(actions, "counit", "Counit of X_w", ("--word", "Word, e.g. 1,2,1"))
    p = _leaf(actions, "bracket", "Lie bracket [e_w, e_other]", ("--word", "Word"), ("--other", "Word"))
    _add_dims(p)
    return parser


def _word_dims(args):
    w = _word(args.word)
    s, maxdeg = _dims(args)
    return w, s, max(maxdeg, len(w))


def cmd_hopf_coproduct(args):
    w, s, maxdeg = _word_dims(args)
    return tensor_to_json(hopf.coproduct(w, s, maxdeg))


def cmd_hopf_reduced(args):
    w, s, maxdeg = _word_dims(args)
    return tensor_to_json(hopf.reduced_coproduct(w, s, maxdeg))


def cmd_hopf_fgl(args):
    w, s, maxdeg = _word_dims(args)
    return tensor_to_json(hopf.formal_group_law(w, s, maxdeg))


def cmd_hopf_bilinear(args):
    w, s, maxdeg = _word_dims(args)
    b = hopf.bilinear_part(w, s, maxdeg)
    out = tensor_to_json(b)
    out["symmetric"] = hopf.is_symmetric(b)
    return out


def cmd_hopf_antipode(args):
    w, s, maxdeg = _word_dims(args)
    return poly_to_json(hopf.antipode(w, s, maxdeg, reduced=args.reduced))


def cmd_hopf_counit(args):
    return format_rational(hopf.counit(hopf.CoordPoly.generator(_word(args.word))))


def cmd_hopf_bracket(args):
    w, s, maxdeg = _word_dims(args)
    other = _word(args.other)
    return word_values_to_json(hopf.lie_bracket(w, other, s, max(maxdeg, len(other))))


# ============================================================================
# repr
# ============================================================================


def add_repr_parser(subparsers):
    """Add the 'repr' command group."""
    parser = subparsers.add_parser(
        "repr",
        help="Matrix representations of the boxed convolution group",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  ncf repr build --f p.json --D 3 -o rep.json
  ncf repr certify --matrix rep.json
  ncf repr stransform --f f.json
  ncf repr sdim1 --f a.json
""",
    )
    actions = parser.add_subparsers(dest="action", metavar="<action>")
    for name, text in (
        ("build", "Representation of a unipotent series on the reduced basis"),
        ("torus", "Diagonal torus representation on the full basis"),
        ("stransform", "Representation of a group element on the full basis"),
    ):
        p = _leaf(actions, name, text, ("--f", SERIES_HELP))
        p.add_argument("--D", type=int, help="Weighted-degree bound (default maxdeg - 1)")
    _leaf(actions, "certify", "Check unipotency and triangularity", ("--matrix", "Matrix JSON or file path"))
    _leaf(actions, "sdim1", "First-row matrix of a one-variable series", ("--f", SERIES_HELP))
    return parser


def cmd_repr_build(args):
    f = _series(args.f, args)
    basis = representation.reduced_basis(f.s, f.maxdeg, _bound(args))
    return matrix_to_json(representation.build_rep(f, basis=basis), basis)


def cmd_repr_torus(args):
    f = _series(args.f, args)
    basis = representation.full_basis(f.s, f.maxdeg, _bound(args))
    return matrix_to_json(representation.build_torus_rep(f, basis), basis)


def cmd_repr_stransform(args):
    f = _series(args.f, args)
    bound = _bound(args)
    return matrix_to_json(representation.s_transform(f, bound), representation.full_basis(f.s, f.maxdeg, bound))


def cmd_repr_certify(args):
    m = matrix_from_json(load_input(args.matrix))
    return {
        "dim": m.dim,
        "unipotent": representation.certify_unipotent(m),
        "triangular": representation.certify_triangular(m),
        "nilpotency_index": representation.nilpotency_index(m),
    }


def cmd_repr_sdim1(args):
    return matrix_to_json(representation.one_dim_s_matrix(_series(args.f, args)))


# ============================================================================
# onedim
# ============================================================================


def add_onedim_parser(subparsers):
    """Add the 'onedim' command group."""
    parser = subparsers.add_parser(
        "onedim",
        help="One-variable transforms: F, S_V, LOG/EXP",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  ncf onedim finverse --f '["0","1","1"]'
  ncf onedim ftrafo --f f.json
  ncf onedim expv --f m.json -o mu.json
  ncf onedim symm --maxdeg 5
""",
    )
    actions = parser.add_subparsers(dest="action", metavar="<action>")
    one = "Coefficient array [a0, a1, ...] or a series object with s = 1"
    _leaf(actions, "compose", "Composition f(g(z))", ("--f", one), ("--g", one))
    for name, text in (
        ("finverse", "Compositional inverse"),
        ("ftrafo", "F-transform f^-1(z)/z"),
        ("svtrafo", "S_V-transform (1+z) m^-1(z)/z"),
        ("log", "LOG: d/dz log F(f)"),
        ("exp", "EXP, the inverse of LOG"),
        ("expv", "EXP_V on moment series"),
        ("logv", "LOG_V on moment series with first moment 1"),
        ("rv", "Cumulant power series of a moment series"),
    ):
        _leaf(actions, name, text, ("--f", one))
    p = _leaf(actions, "symm", "Universal F-transform coefficients h_n")
    p.add_argument("--maxdeg", type=int, required=True, help="Largest generator degree (>= 2)")
    return parser


def _as_power(value, args) -> onedim.PowerSeries1:
    obj = _onevar(value, args)
    return onedim.from_nc(obj) if isinstance(obj, series.NCSeries) else obj


def _as_nc(value, args) -> series.NCSeries:
    obj = _onevar(value, args)
    return obj if isinstance(obj, series.NCSeries) else onedim.to_nc(obj)


def cmd_onedim_compose(args):
    return power_series_to_json(onedim.compose(_as_power(args.f, args), _as_power(args.g, args)))


def cmd_onedim_finverse(args):
    return power_series_to_json(onedim.comp_inverse(_as_power(args.f, args)))


def cmd_onedim_ftrafo(args):
    return power_series_to_json(onedim.f_transform(_onevar(args.f, args)))


def cmd_onedim_svtrafo(args):
    return power_series_to_json(onedim.s_v_transform(_onevar(args.f, args)))


def cmd_onedim_log(args):
    return power_series_to_json(onedim.log_morphism(_onevar(args.f, args)))


def cmd_onedim_exp(args):
    return series_to_json(onedim.exp_morphism(power_series_from_json(load_input(args.f))))


def cmd_onedim_expv(args):
    return series_to_json(onedim.exp_v(_as_nc(args.f, args), _cap(args)))


def cmd_onedim_logv(args):
    return series_to_json(onedim.log_v(_as_nc(args.f, args), _cap(args)))


def cmd_onedim_rv(args):
    return power_series_to_json(onedim.r_v(_as_nc(args.f, args), _cap(args)))


def cmd_onedim_symm(args):
    _check_cap(args.maxdeg, args)
    out = []
    for n, h in enumerate(onedim.symm_coordinates(args.maxdeg), start=1):
        out.append({
            "n": n,
            "poly": poly_to_json(h),
            "display": onedim.render_symm_display(onedim.symm_display(h, n)),
        })
    return out


# ============================================================================
# verify / config
# ============================================================================


def add_verify_parser(subparsers):
    """Add the 'verify' command."""
    from harness.suites import SUITES

    parser = subparsers.add_parser(
        "verify",
        help="Run the verification suites",
        description="Check structural identities on seeded fixtures",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"""
Suites: all, {', '.join(SUITES)}

Examples:
  ncf verify all --s 2 --maxdeg 4 --seed 7
  ncf verify group hopf --seed 11
  ncf --jobs 4 verify group
""",
    )
    parser.add_argument("suites", nargs="*", metavar="SUITE", help="Suites to run (default: all)")
    _add_dims(parser)
    parser.add_argument("--seed", type=int, help="Fixture seed (default from config)")
    return parser


def cmd_verify(args):
    from harness.suites import SUITES, format_table, run_suites

    names = args.suites or ["all"]
    unknown = [n for n in names if n != "all" and n not in SUITES]
    if unknown:
        print(f"Error: unknown suite(s): {', '.join(unknown)}", file=sys.stderr)
        return EXIT_USAGE
    s, maxdeg = _dims(args)
    if maxdeg < 2:
        raise ValidationError("verify needs maxdeg >= 2")
    results = run_suites(names, s=s, maxdeg=maxdeg, seed=args.seed, jobs=_jobs(args))
    print(format_table(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


def add_config_parser(subparsers):
    """Add the 'config' command group."""
    parser = subparsers.add_parser(
        "config",
        help="Show or create configuration",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  ncf config show
  ncf config init
  ncf config init --path ~/.config/ncfree/config.toml --force
""",
    )
    actions = parser.add_subparsers(dest="action", metavar="<action>")
    actions.add_parser("show", help="Print the effective configuration")
    p = actions.add_parser("init", help="Write a sample configuration file")
    p.add_argument("--path", type=Path, default=Path(".ncfree.toml"), help="Target file (default: .ncfree.toml)")
    p.add_argument("--force", "-f", action="store_true", help="Overwrite an existing file")
    return parser


def cmd_config_show(args):
    for key, value in _config().to_dict().items():
        print(f"{key} = {value if value is not None else '(default)'}")
    return EXIT_OK


def cmd_config_init(args):
    from harness.config import generate_sample_config

    path = args.path.expanduser()
    if path.exists() and not args.force:
        print(f"Error: {path} already exists (use --force to overwrite)", file=sys.stderr)
        return EXIT_INVALID
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(generate_sample_config(), encoding="utf-8")
    print(f"Wrote {path}")
    return EXIT_OK


# ============================================================================
# Dispatch
# ============================================================================

COMMANDS: Dict[Tuple[str, str], Command] = {
    ("nc", "enumerate"): Command(cmd_nc_enumerate, ("enumerate_nc",)),
    ("nc", "check"): Command(cmd_nc_check, ("is_noncrossing",)),
    ("nc", "kreweras"): Command(cmd_nc_kreweras, ("kreweras",)),
    ("nc", "kreweras2"): Command(cmd_nc_kreweras2, ("kreweras_squared_shift",)),
    ("nc", "join"): Command(cmd_nc_join, ("nc_join",)),
    ("nc", "interval"): Command(cmd_nc_interval, ("interval_partition",)),
    ("series", "add"): Command(cmd_series_add, ("add",)),
    ("series", "scale"): Command(cmd_series_scale, ("scale",)),
    ("series", "mul"): Command(cmd_series_mul, ("cauchy_mul",)),
    ("series", "coeff"): Command(cmd_series_coeff, ("coeff",)),
    ("series", "restrict"): Command(cmd_series_restrict, ("restrict_word",)),
    ("series", "block"): Command(cmd_series_block, ("eval_block_functional",)),
    ("series", "m2c"): Command(cmd_series_m2c, ("cumulants_from_moments",)),
    ("series", "c2m"): Command(cmd_series_c2m, ("moments_from_cumulants",)),
    ("series", "zeta"): Command(cmd_series_zeta, ("zeta",)),
    ("series", "moeb"): Command(cmd_series_moeb, ("moeb",)),
    ("conv", "box"): Command(cmd_conv_box, ("box_conv",)),
    ("conv", "inv"): Command(cmd_conv_inv, ("box_inverse",)),
    ("conv", "addv"): Command(cmd_conv_addv, ("addv",)),
    ("conv", "mulv"): Command(cmd_conv_mulv, ("mulv",)),
    ("conv", "join-free"): Command(cmd_conv_join_free, ("join_free",)),
    ("conv", "grouped"): Command(cmd_conv_grouped, ("grouped_cumulants",)),
    ("conv", "commutator"): Command(cmd_conv_commutator, ("commutator",)),
    ("conv", "torus"): Command(cmd_conv_torus, ("torus_factor",)),
    ("conv", "free-product"): Command(cmd_conv_free_product, ("free_product_cumulants",)),
    ("hopf", "coproduct"): Command(cmd_hopf_coproduct, ("coproduct",)),
    ("hopf", "counit"): Command(cmd_hopf_counit, ("counit",)),
    ("hopf", "antipode"): Command(cmd_hopf_antipode, ("antipode",)),
    ("hopf", "reduced"): Command(cmd_hopf_reduced, ("reduced_coproduct",)),
    ("hopf", "fgl"): Command(cmd_hopf_fgl, ("formal_group_law",)),
    ("hopf", "bilinear"): Command(cmd_hopf_bilinear, ("bilinear_part",)),
    ("hopf", "bracket"): Command(cmd_hopf_bracket, ("lie_bracket",)),
    ("repr", "build"): Command(cmd_repr_build, ("build_rep",)),
    ("repr", "torus"): Command(cmd_repr_torus, ("build_torus_rep",)),
    ("repr", "stransform"): Command(cmd_repr_stransform, ("s_transform",)),
    ("repr", "certify"): Command(cmd_repr_certify, ("certify_unipotent", "certify_triangular")),
    ("repr", "sdim1"): Command(cmd_repr_sdim1, ("one_dim_s_matrix",)),
    ("onedim", "compose"): Command(cmd_onedim_compose, ("compose",)),
    ("onedim", "finverse"): Command(cmd_onedim_finverse, ("comp_inverse",)),
    ("onedim", "ftrafo"): Command(cmd_onedim_ftrafo, ("f_transform",)),
    ("onedim", "svtrafo"): Command(cmd_onedim_svtrafo, ("s_v_transform",)),
    ("onedim", "log"): Command(cmd_onedim_log, ("log_morphism",)),
    ("onedim", "exp"): Command(cmd_onedim_exp, ("exp_morphism",)),
    ("onedim", "expv"): Command(cmd_onedim_expv, ("exp_v",)),
    ("onedim", "logv"): Command(cmd_onedim_logv, ("log_v",)),
    ("onedim", "rv"): Command(cmd_onedim_rv, ("r_v",)),
    ("onedim", "symm"): Command(cmd_onedim_symm, ("symm_coordinates",)),
    ("verify", ""): Command(cmd_verify, raw=True),
    ("config", "show"): Command(cmd_config_show, raw=True),
    ("config", "init"): Command(cmd_config_init, raw=True),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncf",
        description="ncfree - exact non-crossing partitions, boxed convolution and free transforms",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Commands:
  nc       Non-crossing partitions and the Kreweras complement
  series   Series arithmetic and moment-cumulant transforms
  conv     Boxed convolution group and free convolutions
  hopf     Coordinate Hopf algebra, formal group law, Lie bracket
  repr     Matrix representations
  onedim   One-variable transforms
  verify   Run the verification suites
  config   Show or create configuration

Series JSON:
  {"s": 2, "maxdeg": 3, "coeffs": [{"word": [1], "value": "1"}, {"word": [1,2], "value": "-3/4"}]}

For help on a specific command:
  ncf <command> --help

Environment Variables:
  NCF_SEED, NCF_JOBS, NCF_NC_CAP, NCF_S, NCF_MAXDEG, NCF_DEGREE_BOUND
""",
    )
    parser.add_argument("--version", "-V", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", "-v", action="store_true", help="Log debug output to stderr")
    parser.add_argument("--jobs", "-j", type=int, metavar="N", help="Worker processes for coefficient work")
    parser.add_argument("--nc-cap", type=int, metavar="N", help="Largest n for NC(n) enumeration")

    subparsers = parser.add_subparsers(dest="command", metavar="<command>")
    add_nc_parser(subparsers)
    add_series_parser(subparsers)
    add_conv_parser(subparsers)
    add_hopf_parser(subparsers)
    add_repr_parser(subparsers)
    add_onedim_parser(subparsers)
    add_verify_parser(subparsers)
    add_config_parser(subparsers)
    return parser


def _emit(payload: Any, output: Optional[Path]) -> None:
    text = dumps(payload)
    if output is None:
        print(text)
    else:
        output.write_text(text + "\n", encoding="utf-8")


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the ncf command."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    if not args.command:
        parser.print_help()
        return EXIT_OK
    if args.jobs is not None and args.jobs < 1:
        print("Error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE

    action = getattr(args, "action", "") or ""
    command = COMMANDS.get((args.command, action))
    if command is None:
        print(f"Error: '{args.command}' needs an action (see: ncf {args.command} --help)", file=sys.stderr)
        return EXIT_USAGE

    try:
        if command.raw:
            return command.handler(args)
        _emit(command.handler(args), getattr(args, "output", None))
    except ValidationError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
