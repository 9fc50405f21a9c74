"""Density matrix validation."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import numpy.typing as npt
from scipy import linalg

from app.config import settings
from app.errors import DimensionMismatch, NotHermitian, NotPSD, TraceNotOne

logger = logging.getLogger(__name__)

ComplexMatrix = npt.NDArray[np.complex128]


@dataclass(frozen=True)
class DensityMatrix:
    """Validated density matrix with the residuals it was accepted with."""
    matrix: ComplexMatrix
    hermiticity_residual: float
    trace_residual: float
    min_eigenvalue: float

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def _as_square(matrix) -> ComplexMatrix:
    mat = np.array(matrix, dtype=np.complex128, copy=True)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] < 1:
        raise DimensionMismatch(f"expected a non-empty square matrix, got shape {mat.shape}")
    return mat


def validate_density(matrix, tol: Optional[float] = None) -> DensityMatrix:
    """Check Hermiticity, unit trace and positivity of ``matrix`` at tolerance ``tol``."""
    tol = settings.validation_tol if tol is None else tol
    mat = _as_square(matrix)

    hermiticity = float(np.max(np.abs(mat - mat.conj().T)))
    if hermiticity > tol:
        raise NotHermitian(f"hermiticity residual {hermiticity:.3e} exceeds {tol:.1e}")

    trace_residual = float(abs(np.trace(mat) - 1.0))
    if trace_residual > tol:
        raise TraceNotOne(f"trace residual {trace_residual:.3e} exceeds {tol:.1e}")

    # eigenvalues of the Hermitian part; the anti-Hermitian part is below tol
    min_eig = float(linalg.eigvalsh(0.5 * (mat + mat.conj().T))[0])
    if min_eig < -tol:
        raise NotPSD(f"minimum eigenvalue {min_eig:.3e} below -{tol:.1e}")

    mat.setflags(write=False)
    logger.debug(
        "validated d=%d state: herm=%.2e trace=%.2e min_eig=%.2e",
        mat.shape[0], hermiticity, trace_residual, min_eig,
    )
    return DensityMatrix(
        matrix=mat,
        hermiticity_residual=hermiticity,
        trace_residual=trace_residual,
        min_eigenvalue=min_eig,
    )


def frobenius_distance(a, b) -> float:
    """Frobenius norm of a - b; accepts arrays or DensityMatrix values."""
    a = a.matrix if isinstance(a, DensityMatrix) else np.asarray(a)
    b = b.matrix if isinstance(b, DensityMatrix) else np.asarray(b)
    return float(np.linalg.norm(a - b, ord="fro"))
