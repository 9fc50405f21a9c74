from .operators import phase_shift_operator, k_expectation, measure_diagonal
from .plan import canonical_plan, CANONICAL_ANGLES
from .reconstruction import (
    reconstruct_offdiagonal,
    exact_expectations,
    measure_offdiagonal,
    reconstruct_full,
)
from .audit import (
    expectation_decomposition_audit,
    contrast_identities,
    p_m_term,
    s_nm_term,
    cross_term,
    printed_cross_term,
)

__all__ = [
    "phase_shift_operator",
    "k_expectation",
    "measure_diagonal",
    "canonical_plan",
    "CANONICAL_ANGLES",
    "reconstruct_offdiagonal",
    "exact_expectations",
    "measure_offdiagonal",
    "reconstruct_full",
    "expectation_decomposition_audit",
    "contrast_identities",
    "p_m_term",
    "s_nm_term",
    "cross_term",
    "printed_cross_term",
]
