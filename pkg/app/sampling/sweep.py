"""Shot-count convergence sweeps."""

import logging
from typing import Sequence

import numpy as np
import pandas as pd

from app.errors import StateValidationError
from app.linalg import DensityMatrix
from app.protocol import measure_offdiagonal
from .rng import derive_seed
from .shots import estimate_element

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ["M", "rmse_real", "rmse_imag", "mean_stderr"]


def convergence_sweep(
    rho: DensityMatrix,
    n: int,
    m: int,
    shot_grid: Sequence[int],
    repeats: int,
    seed: int,
) -> pd.DataFrame:
    """Empirical RMSE of the sampled element against the exact one, per shot count."""
    if repeats < 8:
        raise StateValidationError(f"a sweep needs at least 8 repeats, got {repeats}")
    truth = measure_offdiagonal(rho, n, m)

    rows = []
    for grid_index, shots in enumerate(shot_grid):
        runs = [
            estimate_element(rho, n, m, int(shots), derive_seed(seed, grid_index, r))
            for r in range(repeats)
        ]
        real = np.array([e.real_part for e in runs])
        imag = np.array([e.imag_part for e in runs])
        rows.append({
            "M": int(shots),
            "rmse_real": float(np.sqrt(np.mean((real - truth.real_part) ** 2))),
            "rmse_imag": float(np.sqrt(np.mean((imag - truth.imag_part) ** 2))),
            "mean_stderr": float(np.mean([e.real_stderr for e in runs])),
        })
        logger.debug("sweep M=%d: %s", shots, rows[-1])
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)
