"""Exact enumeration and cross-verification of Cayley permutations,
Burge matrices, matrices of linear orders, and the identities tying
their counts together."""

from .kernel import (
    BiPoly,
    IntPoly,
    RatSeries,
    ballot_block_poly,
    binomial,
    fubini,
    multichoose,
    stirling1,
    stirling2,
)
from .words import (
    AscentSetSpec,
    alpha_count,
    ascent_set,
    beta_brute,
    beta_perm_determinant,
    caylerian_brute,
    cayley_to_ballot,
    ballot_to_cayley,
    descent_set,
    enumerate_ballots,
    enumerate_cayley,
    is_cayley_word,
    stat_set,
)
from .burge import (
    BurgeWord,
    enumerate_burge,
    enumerate_mat,
    matrix_to_word,
    two_sided_brute,
    word_to_matrix,
)
from .lomat import (
    AtomBallot,
    LinOrderMatrix,
    SignedLOMatrix,
    act,
    atoms,
    enumerate_genmat,
    enumerate_signed,
    factor_action,
    from_atom_ballot,
    gamma,
    prod,
    tau,
    to_atom_ballot,
)
from .identities import (
    CheckResult,
    UnconvergedError,
    beta_formula,
    carlitz_series,
    caylerian_formula,
    count_genmat,
    count_mat,
    double_sum_mat,
    halving_sum,
    pairing_check,
    run_suite,
    two_sided_formula,
)

__all__ = [
    "BiPoly",
    "IntPoly",
    "RatSeries",
    "ballot_block_poly",
    "binomial",
    "fubini",
    "multichoose",
    "stirling1",
    "stirling2",
    "AscentSetSpec",
    "alpha_count",
    "ascent_set",
    "beta_brute",
    "beta_perm_determinant",
    "caylerian_brute",
    "cayley_to_ballot",
    "ballot_to_cayley",
    "descent_set",
    "enumerate_ballots",
    "enumerate_cayley",
    "is_cayley_word",
    "stat_set",
    "BurgeWord",
    "enumerate_burge",
    "enumerate_mat",
    "matrix_to_word",
    "two_sided_brute",
    "word_to_matrix",
    "AtomBallot",
    "LinOrderMatrix",
    "SignedLOMatrix",
    "act",
    "atoms",
    "enumerate_genmat",
    "enumerate_signed",
    "factor_action",
    "from_atom_ballot",
    "gamma",
    "prod",
    "tau",
    "to_atom_ballot",
    "CheckResult",
    "UnconvergedError",
    "beta_formula",
    "carlitz_series",
    "caylerian_formula",
    "count_genmat",
    "count_mat",
    "double_sum_mat",
    "halving_sum",
    "pairing_check",
    "run_suite",
    "two_sided_formula",
]

__version__ = "0.1.0"
