from ._experiments import approximation_report, run_trials
from ._formulas import (
    FORMULA_TABLES,
    b_k,
    b_k_by_recurrence,
    b_k_float,
    backward_prob,
    backward_prob_float,
    expected_total_backward,
    expected_total_backward_float,
    formula_table,
    h_prob,
    h_prob_by_recurrence,
    h_prob_float,
    h_prob_product,
)
from ._oracles import (
    VerificationReport,
    VerificationRow,
    oracle_backward_prob,
    oracle_expected_insertion_cost,
    oracle_merge_comparison,
    oracle_stage_backward,
    simulate_merge,
    verify_theorem,
)

__all__ = [
    "b_k",
    "b_k_by_recurrence",
    "b_k_float",
    "expected_total_backward",
    "expected_total_backward_float",
    "h_prob",
    "h_prob_product",
    "h_prob_by_recurrence",
    "h_prob_float",
    "backward_prob",
    "backward_prob_float",
    "formula_table",
    "FORMULA_TABLES",
    "oracle_expected_insertion_cost",
    "oracle_stage_backward",
    "oracle_merge_comparison",
    "oracle_backward_prob",
    "simulate_merge",
    "verify_theorem",
    "VerificationReport",
    "VerificationRow",
    "run_trials",
    "approximation_report",
]
