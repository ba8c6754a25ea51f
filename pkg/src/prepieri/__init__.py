"""Exact verification of row-determinant Pieri-type identities."""

from .algebra import (
    Generator,
    IncompatibleRingError,
    Kind,
    Polynomial,
    first_difference,
    gen_H,
    gen_X,
    gen_g,
    gen_h,
    gen_lam,
)
from .combinatorics import (
    Permutation,
    act,
    binary_compositions,
    cover_det,
    eta_tuple,
    iverson_geq_det,
    oplus,
    permutations,
    signed_match_sum,
    tuple_abs,
    tuple_add,
    weak_compositions,
    xi_tuple,
)
from .rowdet import SquareMatrix, rowdet
from .rules import (
    PieriContext,
    cor_e_sides,
    cor_h_sides,
    first_rule_sides,
    second_rule_sides,
    t_alpha,
    verify_cor_e,
    verify_cor_h,
    verify_first,
    verify_second,
)
from .schur import (
    StraightenResult,
    alt_pieri_equiv,
    horizontal_strips,
    jacobi_trudi,
    straighten,
    vertical_strips,
)
from .nsym import immaculate, verify_right_pieri
from .ninth_variation import NinthContext, s_mu_beta, verify_fun_rule
from .multilinear import (
    MultilinearElement,
    decompose,
    is_antisymmetric,
    t_set,
    verify_decomposition,
)

__all__ = [
    "Generator",
    "IncompatibleRingError",
    "Kind",
    "Polynomial",
    "first_difference",
    "gen_H",
    "gen_X",
    "gen_g",
    "gen_h",
    "gen_lam",
    "Permutation",
    "act",
    "binary_compositions",
    "cover_det",
    "eta_tuple",
    "iverson_geq_det",
    "oplus",
    "permutations",
    "signed_match_sum",
    "tuple_abs",
    "tuple_add",
    "weak_compositions",
    "xi_tuple",
    "SquareMatrix",
    "rowdet",
    "PieriContext",
    "cor_e_sides",
    "cor_h_sides",
    "first_rule_sides",
    "second_rule_sides",
    "t_alpha",
    "verify_cor_e",
    "verify_cor_h",
    "verify_first",
    "verify_second",
    "StraightenResult",
    "alt_pieri_equiv",
    "horizontal_strips",
    "jacobi_trudi",
    "straighten",
    "vertical_strips",
    "immaculate",
    "verify_right_pieri",
    "NinthContext",
    "s_mu_beta",
    "verify_fun_rule",
    "MultilinearElement",
    "decompose",
    "is_antisymmetric",
    "t_set",
    "verify_decomposition",
]
