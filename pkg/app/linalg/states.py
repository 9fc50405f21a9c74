"""State construction: pure states, Ginibre ensemble, GHZ."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import numpy.typing as npt

from app.config import settings
from app.errors import BadRank, IndexOutOfRange, NotNormalized, StateValidationError, TooFewQubits
from .validation import DensityMatrix, validate_density

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StateVector:
    """Pure-state amplitudes in the computational basis."""
    dim: int
    amplitudes: npt.NDArray[np.complex128]

    @classmethod
    def from_amplitudes(cls, amplitudes) -> "StateVector":
        amps = np.array(amplitudes, dtype=np.complex128, copy=True).reshape(-1)
        amps.setflags(write=False)
        return cls(dim=amps.shape[0], amplitudes=amps)

    @property
    def norm_residual(self) -> float:
        return float(abs(np.vdot(self.amplitudes, self.amplitudes).real - 1.0))


def _check_dim(d: int) -> None:
    if d < 1:
        raise StateValidationError(f"dimension must be at least 1, got {d}")


def from_statevector(psi: StateVector, tol: Optional[float] = None) -> DensityMatrix:
    """Return |psi><psi|."""
    tol = settings.normalization_tol if tol is None else tol
    if psi.norm_residual > tol:
        raise NotNormalized(f"norm residual {psi.norm_residual:.3e} exceeds {tol:.1e}")
    return validate_density(np.outer(psi.amplitudes, psi.amplitudes.conj()))


def random_density(d: int, rank: int, seed: int) -> DensityMatrix:
    """Ginibre state G G^dagger / Tr(G G^dagger) with G a d x rank complex normal matrix."""
    _check_dim(d)
    if seed < 0:
        raise StateValidationError(f"seed must be non-negative, got {seed}")
    if not 1 <= rank <= d:
        raise BadRank(f"rank must lie in [1, {d}], got {rank}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    # exact Hermitian symmetrisation removes rounding in the product
    rho = 0.5 * (rho + rho.conj().T)
    logger.debug("ginibre state d=%d rank=%d seed=%d", d, rank, seed)
    return validate_density(rho)


def ghz_state(num_qubits: int) -> StateVector:
    """(|0...0> + |1...1>)/sqrt(2) on num_qubits qubits."""
    if num_qubits < 2:
        raise TooFewQubits(f"a GHZ state needs at least 2 qubits, got {num_qubits}")
    amps = np.zeros(2 ** num_qubits, dtype=np.complex128)
    amps[0] = amps[-1] = 1 / np.sqrt(2)
    return StateVector.from_amplitudes(amps)


def plus_state(d: int) -> StateVector:
    """Uniform superposition (1/sqrt(d)) sum_i |i>."""
    _check_dim(d)
    return StateVector.from_amplitudes(np.full(d, 1 / np.sqrt(d)))


def basis_state(d: int, index: int) -> StateVector:
    if not 0 <= index < d:
        raise IndexOutOfRange(f"basis index {index} outside [0, {d})")
    amps = np.zeros(d, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector.from_amplitudes(amps)


def maximally_mixed(d: int) -> DensityMatrix:
    _check_dim(d)
    return validate_density(np.eye(d) / d)


def dense_ghz_fidelity(rho: DensityMatrix, num_qubits: int) -> float:
    """<GHZ|rho|GHZ> from the full matrix; reference value for element-based estimates."""
    ghz = ghz_state(num_qubits).amplitudes
    return float(np.vdot(ghz, rho.matrix @ ghz).real)
