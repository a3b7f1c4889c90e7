"""Exact construction and certification of characteristic polynomials of
simple ordinary abelian varieties over finite fields."""

from .analysis import (
    ModulusCheckResult,
    RealWeilPoly,
    RootReport,
    count_real_roots,
    exact_modulus_check,
    numeric_roots,
    real_weil_transform,
    reconstruct_symmetric,
    sturm_count_in_interval,
)
from .engine import (
    ClassificationReport,
    ClassifyOptions,
    ParamTuple,
    SearchRange,
    absolute_simplicity_power_test,
    absolutely_simple_g2,
    certify_ordinary,
    certify_simple,
    classify,
    construct,
    search,
    search_summary,
    validate_tuple,
)
from .intpoly import (
    IntPoly,
    QPolynomial,
    char_poly_of_power,
    check_q_symmetry,
    cyclotomic,
    minimal_poly_of_power,
    reduce_mod,
    resultant,
    squarefree_part,
)
from .modpoly import (
    DegreeProfile,
    ModPoly,
    distinct_degree_profile,
    ff_gcd,
    guerrier_check,
    is_irreducible_mod,
    powmod,
)
from .numtheory import (
    PrimePower,
    euler_phi,
    integer_sqrt,
    is_prime,
    is_primitive_root_mod,
    mod_inverse,
    multiplicative_order,
    prime_power_decompose,
)
from .surd import LLReport, QuadSurd, ll_unit_circle_check, m_max, substitute_sqrt_scale

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "ClassifyOptions",
    "DegreeProfile",
    "IntPoly",
    "LLReport",
    "ModPoly",
    "ModulusCheckResult",
    "ParamTuple",
    "PrimePower",
    "QPolynomial",
    "QuadSurd",
    "RealWeilPoly",
    "RootReport",
    "SearchRange",
    "absolute_simplicity_power_test",
    "absolutely_simple_g2",
    "certify_ordinary",
    "certify_simple",
    "char_poly_of_power",
    "check_q_symmetry",
    "classify",
    "construct",
    "count_real_roots",
    "cyclotomic",
    "distinct_degree_profile",
    "euler_phi",
    "exact_modulus_check",
    "ff_gcd",
    "guerrier_check",
    "integer_sqrt",
    "is_irreducible_mod",
    "is_prime",
    "is_primitive_root_mod",
    "ll_unit_circle_check",
    "m_max",
    "minimal_poly_of_power",
    "mod_inverse",
    "multiplicative_order",
    "numeric_roots",
    "powmod",
    "prime_power_decompose",
    "real_weil_transform",
    "reconstruct_symmetric",
    "reduce_mod",
    "resultant",
    "search",
    "search_summary",
    "squarefree_part",
    "sturm_count_in_interval",
    "substitute_sqrt_scale",
    "validate_tuple",
]
