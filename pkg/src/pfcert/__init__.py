"""pfcert: exact log-concavity and Polya frequency certification.

Everything runs on arbitrary-precision rationals; no floating point is
used anywhere a verdict is produced.
"""

from .polynomials import (
    Poly,
    as_fraction,
    poly_gcd,
    shift_argument,
    square_free_decomposition,
    square_free_part,
)
from .roots import Interval, RootLocationReport, count_roots_in_interval, is_real_rooted
from .binomial_basis import (
    binomial_poly,
    binomial_to_power,
    diamond,
    diamond_by_transform,
    logconcavity_step_identity,
    power_to_binomial,
    signed_reflection,
    to_binomial_basis,
)
from .sequences import (
    Explicit,
    KFoldVerdict,
    MinorWitness,
    PolyInterp,
    RationalGF,
    SequenceSource,
    Truncation,
    finite_pf_check,
    k_fold_check,
    lc_iterate,
    lc_step,
    lc_step_poly,
    lc_step_terms,
    terms,
    toeplitz_minor_search,
)
from .certify import (
    Certificate,
    ClassLabel,
    ClosureCheck,
    Refusal,
    binomial_column,
    certify_infinite_logconcavity,
    classify,
    pf_interpolation_check,
)
from .symmetric import (
    DEFAULT_SEED,
    IdentityTranscript,
    binomial_symbol_poly,
    catalan,
    check_catalan_esym_identity,
    check_catalan_jacobi_identity,
    check_hermite_turan_identity,
    check_weighted_esym_identity,
    derivative_product_transform,
    elem_sym,
    gamma_weights,
    hermite,
    interleave_even,
    interleave_odd,
    interval_transform,
    jacobi11,
    symbol_poly,
)
from .identity_suite import (
    check_diamond_dual,
    check_shift_compatibility,
    check_step_factorization,
    run_identity_suite,
)

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "as_fraction",
    "poly_gcd",
    "shift_argument",
    "square_free_decomposition",
    "square_free_part",
    "Interval",
    "RootLocationReport",
    "count_roots_in_interval",
    "is_real_rooted",
    "binomial_poly",
    "binomial_to_power",
    "diamond",
    "diamond_by_transform",
    "logconcavity_step_identity",
    "power_to_binomial",
    "signed_reflection",
    "to_binomial_basis",
    "Explicit",
    "KFoldVerdict",
    "MinorWitness",
    "PolyInterp",
    "RationalGF",
    "SequenceSource",
    "Truncation",
    "finite_pf_check",
    "k_fold_check",
    "lc_iterate",
    "lc_step",
    "lc_step_poly",
    "lc_step_terms",
    "terms",
    "toeplitz_minor_search",
    "Certificate",
    "ClassLabel",
    "ClosureCheck",
    "Refusal",
    "binomial_column",
    "certify_infinite_logconcavity",
    "classify",
    "pf_interpolation_check",
    "DEFAULT_SEED",
    "IdentityTranscript",
    "binomial_symbol_poly",
    "catalan",
    "check_catalan_esym_identity",
    "check_catalan_jacobi_identity",
    "check_hermite_turan_identity",
    "check_weighted_esym_identity",
    "derivative_product_transform",
    "elem_sym",
    "gamma_weights",
    "hermite",
    "interleave_even",
    "interleave_odd",
    "interval_transform",
    "jacobi11",
    "symbol_poly",
    "check_diamond_dual",
    "check_shift_compatibility",
    "check_step_factorization",
    "run_identity_suite",
    "__version__",
]
