"""ncfree: exact combinatorics of multivariate free probability.

Non-crossing partitions, the boxed convolution group of truncated
non-commutative power series, its coordinate Hopf algebra, faithful matrix
representations and the one-dimensional transform calculus, all over exact
rationals.
"""

__version__ = "0.1.0"

from .errors import (
    NCFreeError,
    ValidationError,
    SizeError,
    AlphabetMismatchError,
    DegreeMismatchError,
    NotInvertibleError,
    DomainError,
)

# Public operations, each reachable from exactly one CLI subcommand.
OPERATIONS = (
    # ncpart
    "enumerate_nc",
    "is_noncrossing",
    "kreweras",
    "kreweras_squared_shift",
    "nc_join",
    "interval_partition",
    # series
    "add",
    "scale",
    "cauchy_mul",
    "coeff",
    "restrict_word",
    "eval_block_functional",
    # freeconv
    "box_conv",
    "box_inverse",
    "zeta",
    "moeb",
    "moments_from_cumulants",
    "cumulants_from_moments",
    "addv",
    "mulv",
    "join_free",
    "grouped_cumulants",
    "free_product_cumulants",
    "commutator",
    "torus_factor",
    # hopf
    "coproduct",
    "counit",
    "antipode",
    "reduced_coproduct",
    "formal_group_law",
    "bilinear_part",
    "lie_bracket",
    # representation
    "build_rep",
    "build_torus_rep",
    "s_transform",
    "certify_unipotent",
    "certify_triangular",
    "one_dim_s_matrix",
    # onedim
    "compose",
    "comp_inverse",
    "f_transform",
    "s_v_transform",
    "log_morphism",
    "exp_morphism",
    "exp_v",
    "log_v",
    "r_v",
    "symm_coordinates",
)

__all__ = [
    "__version__",
    "OPERATIONS",
    "NCFreeError",
    "ValidationError",
    "SizeError",
    "AlphabetMismatchError",
    "DegreeMismatchError",
    "NotInvertibleError",
    "DomainError",
]
