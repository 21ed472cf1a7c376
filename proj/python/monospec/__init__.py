"""High-precision workbench for monopole spectral curves."""

from _monospec import (
    DomainError,
    ConstraintError,
    PrecisionError,
    AccuracyError,
    VerificationError,
    eval_expr,
    es_solve,
    solve_ratio,
    hyp2f1_unit,
    hyp_ratio,
    modular_partner,
    gamma_q,
    ellip_k,
    ellip_e,
    weier_half_period,
    richelot_periods,
    ramanujan_sum,
    build_table1,
    build_symmetric_trigonal,
    check_h1,
    charge2_es_check,
    find_relation,
    rational_detect,
    algebraicity_probe,
    __version__,
)

__all__ = [
    "DomainError",
    "ConstraintError",
    "PrecisionError",
    "AccuracyError",
    "VerificationError",
    "eval_expr",
    "es_solve",
    "solve_ratio",
    "hyp2f1_unit",
    "hyp_ratio",
    "modular_partner",
    "gamma_q",
    "ellip_k",
    "ellip_e",
    "weier_half_period",
    "richelot_periods",
    "ramanujan_sum",
    "build_table1",
    "build_symmetric_trigonal",
    "check_h1",
    "charge2_es_check",
    "find_relation",
    "rational_detect",
    "algebraicity_probe",
    "__version__",
]
