"""Element reconstruction from projective expectations."""

import logging
import math
from typing import List, Optional, Sequence

import numpy as np

from app.errors import DimensionMismatch, WrongArity
from app.linalg import ComplexMatrix, DensityMatrix
from app.models import ElementDiagnostics, ElementEstimate, ReconstructionPlan
from .audit import p_m_term, s_nm_term
from .operators import k_expectation, measure_diagonal
from .plan import canonical_plan

logger = logging.getLogger(__name__)


def reconstruct_offdiagonal(
    expectations: Sequence[float],
    d: int,
    plan: ReconstructionPlan,
) -> ElementEstimate:
    """Combine six expectations, ordered as ``plan.settings``, into rho_nm."""
    values = np.asarray(expectations, dtype=float)
    if values.shape != (6,):
        raise WrongArity(f"expected exactly 6 expectation values, got {values.size}")
    if plan.dim != d:
        raise DimensionMismatch(f"plan built for d={plan.dim}, reconstruction asked for d={d}")
    return ElementEstimate(
        n=plan.n,
        m=plan.m,
        real_part=float(np.dot(plan.eta_real, values)),
        imag_part=float(np.dot(plan.eta_imag, values)),
        expectations=values.tolist(),
    )


def exact_expectations(rho: DensityMatrix, plan: ReconstructionPlan) -> List[float]:
    """The six <K> values of ``plan`` evaluated on ``rho``."""
    if plan.dim != rho.dim:
        raise DimensionMismatch(f"plan built for d={plan.dim}, state has d={rho.dim}")
    return [k_expectation(rho, setting) for setting in plan.settings]


def measure_offdiagonal(
    rho: DensityMatrix,
    n: int,
    m: int,
    plan: Optional[ReconstructionPlan] = None,
    with_diagnostics: bool = False,
) -> ElementEstimate:
    """Reconstruct rho_nm from exact expectations of the canonical plan."""
    if plan is None:
        plan = canonical_plan(rho.dim, n, m)
    elif (plan.n, plan.m) != (n, m):
        raise DimensionMismatch(f"plan built for ({plan.n}, {plan.m}), asked for ({n}, {m})")
    estimate = reconstruct_offdiagonal(exact_expectations(rho, plan), rho.dim, plan)
    if not with_diagnostics:
        return estimate

    diagnostics = ElementDiagnostics(
        p_m_zero=p_m_term(rho, m, 0.0),
        p_m_pi=p_m_term(rho, m, math.pi),
        s_nm=[s_nm_term(rho, n, m, t) for t in (0.0, math.pi / 2, -math.pi / 2)],
    )
    return estimate.model_copy(update={"diagnostics": diagnostics})


def reconstruct_full(rho: DensityMatrix) -> ComplexMatrix:
    """Rebuild the whole matrix from d diagonal readouts and d(d-1)/2 elements."""
    d = rho.dim
    out = np.zeros((d, d), dtype=np.complex128)
    for n in range(d):
        out[n, n] = measure_diagonal(rho, n)
    for n in range(d):
        for m in range(n + 1, d):
            value = measure_offdiagonal(rho, n, m).value
            out[n, m] = value
            out[m, n] = np.conj(value)
    logger.debug("reconstructed %d x %d matrix from %d element queries", d, d, d * (d - 1) // 2)
    return out
