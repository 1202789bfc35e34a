"""Exact Drazin inverses over Q(i) and closed formulas for the Drazin inverse of a sum."""

from .drazin import DrazinTriple, drazin, index, is_nilpotent, spectral_idempotent, verify_drazin
from .exact import GaussianRational, Matrix, inverse, power, rref
from .formulas import (
    Condition,
    HypothesisViolation,
    VerificationReport,
    cd_eq6,
    check_condition,
    evaluate,
    full_report,
    sum_cor21,
    sum_cor22,
    sum_cor23,
    sum_cor24,
    sum_cor25,
    sum_dual,
    sum_lemma12,
    sum_lemma13,
    sum_thm21,
    sum_thm22,
    sum_thm23,
)
from .generate import GenSpec, gen_drazin_matrix, gen_pair, gen_triangular
from .pierce import PierceBlocks, corner_drazin, decompose, lemma11_triangular_drazin

__version__ = "0.1.0"
