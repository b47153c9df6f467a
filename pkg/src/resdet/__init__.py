"""Determinants of power-residue matrices over prime fields.

The library computes det[(alpha_i + d * alpha_j)^n] mod p over the
ascending k-th power residues alpha_1 < ... < alpha_q of an odd prime p
(q = (p-1)/k), evaluates the known closed forms for these determinants,
and verifies every closed form against independent brute-force
computation.  See the README for the identity catalogue and the CLI.
"""

from .closed_forms import (
    SquareSplit,
    binomial_mod,
    double_factorial_mod,
    e_factorial,
    factorial_mod,
    residue_det_closed_form,
    sqrt_symbol_shift1,
    sqrt_symbol_shift1_k2,
    sqrt_symbol_shift3,
    sqrt_symbol_shift3_k2,
    square_split,
)
from .ekm import (
    CriterionIntegers,
    EkmReport,
    Factorization,
    criterion_integers,
    ekm_by_criterion,
    ekm_by_scan,
    factor,
    shifted_det_divisible,
)
from .finite_field import (
    CHI_MINUS_ONE,
    CHI_ONE,
    CHI_OTHER,
    CHI_ZERO,
    MAX_MODULUS,
    CharacterValue,
    PrimeModulus,
    chi_k,
    count_nonresidues_quarter,
    is_prime,
    legendre,
    prime_modulus,
    primes_up_to,
    primitive_root,
    sqrt_mod,
)
from .residue_matrix import (
    MAX_EXACT_DIM,
    ResidueList,
    ResidueMatrix,
    build_matrix,
    det_exact,
    det_mod,
    det_mod_p,
    kth_residues,
    pfaffian_mod,
    pfaffian_mod_p,
    residue_diff_product,
    structured_det,
)
from .selftest import SuiteResult, run_selftest
from .verify import (
    CHECKS,
    VerificationRecord,
    SweepSummary,
    run_sweep,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "CHECKS",
    "CHI_MINUS_ONE",
    "CHI_ONE",
    "CHI_OTHER",
    "CHI_ZERO",
    "CharacterValue",
    "CriterionIntegers",
    "EkmReport",
    "Factorization",
    "MAX_EXACT_DIM",
    "MAX_MODULUS",
    "PrimeModulus",
    "ResidueList",
    "ResidueMatrix",
    "SquareSplit",
    "SuiteResult",
    "SweepSummary",
    "VerificationRecord",
    "binomial_mod",
    "build_matrix",
    "chi_k",
    "count_nonresidues_quarter",
    "criterion_integers",
    "det_exact",
    "det_mod",
    "det_mod_p",
    "double_factorial_mod",
    "e_factorial",
    "ekm_by_criterion",
    "ekm_by_scan",
    "factor",
    "factorial_mod",
    "is_prime",
    "kth_residues",
    "legendre",
    "pfaffian_mod",
    "pfaffian_mod_p",
    "prime_modulus",
    "primes_up_to",
    "primitive_root",
    "residue_det_closed_form",
    "residue_diff_product",
    "run_selftest",
    "run_sweep",
    "shifted_det_divisible",
    "sqrt_mod",
    "sqrt_symbol_shift1",
    "sqrt_symbol_shift1_k2",
    "sqrt_symbol_shift3",
    "sqrt_symbol_shift3_k2",
    "square_split",
    "structured_det",
    "summarize",
]
