"""Finite-shot estimation of expectations and elements."""

import logging
import math
from typing import Optional

import numpy as np

from app.errors import IndicesEqual, ZeroShots
from app.linalg import DensityMatrix
from app.models import NoisyElementEstimate, PhaseSetting, ReconstructionPlan, ShotRecord
from app.protocol import canonical_plan, k_expectation, measure_diagonal, reconstruct_offdiagonal
from .rng import derive_seed, draw_binomial, make_generator

logger = logging.getLogger(__name__)


def _check_shots(shots: int) -> None:
    if shots < 1:
        raise ZeroShots(f"shots must be at least 1, got {shots}")


def sample_expectation(rho: DensityMatrix, setting: PhaseSetting, shots: int, seed: int) -> ShotRecord:
    """Draw ``shots`` prepare-shift-postselect trials; success means the all-zero outcome."""
    _check_shots(shots)
    p = k_expectation(rho, setting)
    successes = draw_binomial(make_generator(seed), shots, p)
    return ShotRecord(setting=setting, shots=shots, successes=successes, seed=seed)


def sample_diagonal(rho: DensityMatrix, n: int, shots: int, seed: int) -> ShotRecord:
    """Computational-basis readout: count outcome n over ``shots`` trials."""
    _check_shots(shots)
    p = measure_diagonal(rho, n)
    successes = draw_binomial(make_generator(seed), shots, p)
    return ShotRecord(basis_index=n, shots=shots, successes=successes, seed=seed)


def binomial_stderr(record: ShotRecord) -> float:
    p = record.estimate
    return math.sqrt(p * (1 - p) / record.shots)


def estimate_element(
    rho: DensityMatrix,
    n: int,
    m: int,
    shots_per_setting: int,
    seed: int,
    plan: Optional[ReconstructionPlan] = None,
) -> NoisyElementEstimate:
    """Sample the six settings with equal shots and reconstruct rho_nm with standard errors."""
    _check_shots(shots_per_setting)
    if n == m:
        raise IndicesEqual(f"off-diagonal estimate needs n != m, got n = m = {n}")
    plan = plan or canonical_plan(rho.dim, n, m)

    records = [
        sample_expectation(rho, setting, shots_per_setting, derive_seed(seed, index))
        for index, setting in enumerate(plan.settings)
    ]
    estimates = np.array([r.estimate for r in records])
    element = reconstruct_offdiagonal(estimates, rho.dim, plan)

    variances = estimates * (1 - estimates) / shots_per_setting
    real_stderr = math.sqrt(float(np.dot(np.square(plan.eta_real), variances)))
    imag_stderr = math.sqrt(float(np.dot(np.square(plan.eta_imag), variances)))
    logger.debug(
        "sampled rho_%d%d with %d shots/setting: %.5f%+.5fi", n, m, shots_per_setting,
        element.real_part, element.imag_part,
    )
    return NoisyElementEstimate(
        n=n,
        m=m,
        real_part=element.real_part,
        imag_part=element.imag_part,
        real_stderr=real_stderr,
        imag_stderr=imag_stderr,
        total_shots=shots_per_setting * len(records),
        estimates=estimates.tolist(),
        seed=seed,
    )
