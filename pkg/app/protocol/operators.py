"""Phase-shifting operators and projective expectations."""

import numpy as np

from app.errors import IndexOutOfRange
from app.linalg import ComplexMatrix, DensityMatrix
from app.models import PhaseSetting


def _check_index(d: int, index: int, name: str = "index") -> None:
    if not 0 <= index < d:
        raise IndexOutOfRange(f"{name} {index} outside [0, {d})")


def phase_shift_operator(d: int, n: int, theta: float) -> ComplexMatrix:
    """Q_n(theta) = I + (e^{i theta} - 1)|n><n|."""
    _check_index(d, n, "n")
    q = np.eye(d, dtype=np.complex128)
    q[n, n] = np.exp(1j * theta)
    return q


def plus_bra(d: int) -> np.ndarray:
    return np.full(d, 1 / np.sqrt(d), dtype=np.complex128)


def k_expectation(rho: DensityMatrix, setting: PhaseSetting) -> float:
    """Tr[rho K] = <+|Q_m(phi) Q_n(theta) rho Q_n(theta)^dag Q_m(phi)^dag|+>."""
    d = rho.dim
    _check_index(d, setting.n, "n")
    _check_index(d, setting.m, "m")
    shift = phase_shift_operator(d, setting.m, setting.phi) @ phase_shift_operator(
        d, setting.n, setting.theta
    )
    bra = plus_bra(d) @ shift
    value = (bra @ rho.matrix @ bra.conj()).real
    return float(np.clip(value, 0.0, 1.0))


def measure_diagonal(rho: DensityMatrix, n: int) -> float:
    """<n|rho|n>, the computational-basis probability of outcome n."""
    _check_index(rho.dim, n, "n")
    return float(rho.matrix[n, n].real)
