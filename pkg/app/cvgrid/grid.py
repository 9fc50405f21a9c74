"""Continuous-variable states on a finite position grid.

Grid points are cell centres x_a = x_min + (a + 1/2) dx with dx = (x_max - x_min)/G.
The stored matrix holds rho(x_a, x_b) * dx, so it is an ordinary unit-trace
density matrix of dimension G and the discrete six-setting formulas apply
unchanged. The continuum kernel is recovered as rho(x', x'') = rho_grid(a, b) / dx.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from app.config import settings
from app.errors import DimensionMismatch, IndicesEqual, StateValidationError, SupportClipped
from app.linalg import DensityMatrix, StateVector, from_statevector, validate_density
from app.models import ElementEstimate, PhaseSetting
from app.protocol import k_expectation, measure_offdiagonal
from app.protocol.operators import _check_index

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridState:
    grid_points: int
    x_min: float
    x_max: float
    rho: DensityMatrix

    def __post_init__(self):
        if self.grid_points < 4:
            raise StateValidationError(f"a grid needs at least 4 points, got {self.grid_points}")
        if self.x_max <= self.x_min:
            raise StateValidationError(f"empty interval [{self.x_min}, {self.x_max}]")
        if self.rho.dim != self.grid_points:
            raise DimensionMismatch(
                f"matrix dimension {self.rho.dim} does not match G={self.grid_points}"
            )

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.grid_points

    @property
    def positions(self) -> np.ndarray:
        return self.x_min + (np.arange(self.grid_points) + 0.5) * self.dx


def _check_grid(G: int, x_min: float, x_max: float) -> float:
    if G < 4:
        raise StateValidationError(f"a grid needs at least 4 points, got {G}")
    if x_max <= x_min:
        raise StateValidationError(f"empty interval [{x_min}, {x_max}]")
    return (x_max - x_min) / G


def gaussian_wavefunction(x, center: float, width: float):
    """Normalised psi(x) = (2 pi w^2)^(-1/4) exp(-(x - c)^2 / (4 w^2))."""
    return (2 * math.pi * width ** 2) ** -0.25 * np.exp(
        -((np.asarray(x) - center) ** 2) / (4 * width ** 2)
    )


def gaussian_grid_state(
    G: int, x_min: float, x_max: float, center: float, width: float
) -> GridState:
    """Pure Gaussian wave packet, normalised on the grid.

    Raises SupportClipped when the density |psi|^2 (not the amplitude psi)
    at x_min or x_max reaches ``settings.cv_boundary_tol``.
    """
    if width <= 0:
        raise StateValidationError(f"width must be positive, got {width}")
    dx = _check_grid(G, x_min, x_max)
    edge_density = float(np.max(gaussian_wavefunction([x_min, x_max], center, width) ** 2))
    if edge_density >= settings.cv_boundary_tol:
        raise SupportClipped(
            f"boundary density {edge_density:.3e} not below {settings.cv_boundary_tol:.1e}"
        )
    positions = x_min + (np.arange(G) + 0.5) * dx
    amps = gaussian_wavefunction(positions, center, width) * math.sqrt(dx)
    amps = amps / np.linalg.norm(amps)
    rho = from_statevector(StateVector.from_amplitudes(amps))
    logger.debug("gaussian grid state G=%d center=%g width=%g", G, center, width)
    return GridState(grid_points=G, x_min=x_min, x_max=x_max, rho=rho)


def uniform_grid_state(G: int, x_min: float, x_max: float) -> GridState:
    """Pure state with equal amplitude 1/sqrt(G) at every grid point."""
    _check_grid(G, x_min, x_max)
    rho = from_statevector(StateVector.from_amplitudes(np.full(G, 1 / math.sqrt(G))))
    return GridState(grid_points=G, x_min=x_min, x_max=x_max, rho=rho)


def position_mixture(
    G: int, x_min: float, x_max: float, weights: Optional[np.ndarray] = None
) -> GridState:
    """Classical mixture of position eigenstates (diagonal, no coherence)."""
    _check_grid(G, x_min, x_max)
    w = np.ones(G) if weights is None else np.asarray(weights, dtype=float)
    rho = validate_density(np.diag(w / w.sum()))
    return GridState(grid_points=G, x_min=x_min, x_max=x_max, rho=rho)


def _check_pair(state: GridState, a_idx: int, b_idx: int) -> None:
    _check_index(state.grid_points, a_idx, "a_idx")
    _check_index(state.grid_points, b_idx, "b_idx")
    if a_idx == b_idx:
        raise IndicesEqual(f"grid indices must differ, got {a_idx} twice")


def cv_k_expectation(
    state: GridState, a_idx: int, b_idx: int, theta: float, phi: float
) -> float:
    """Post-selection probability onto the normalised uniform grid state."""
    _check_pair(state, a_idx, b_idx)
    return k_expectation(state.rho, PhaseSetting(n=a_idx, m=b_idx, theta=theta, phi=phi))


def cv_reconstruct(state: GridState, a_idx: int, b_idx: int) -> ElementEstimate:
    """rho(x_a, x_b) * dx from the six-setting plan with d = G."""
    _check_pair(state, a_idx, b_idx)
    return measure_offdiagonal(state.rho, a_idx, b_idx)


def continuum_element(state: GridState, a_idx: int, b_idx: int) -> complex:
    """Reconstructed kernel value rho(x_a, x_b) in inverse position units."""
    return cv_reconstruct(state, a_idx, b_idx).value / state.dx


def nearest_index(state: GridState, x: float) -> int:
    return int(np.argmin(np.abs(state.positions - x)))


def element_at(state: GridState, x1: float, x2: float) -> complex:
    """Kernel value at the grid points nearest to the physical positions x1, x2."""
    return continuum_element(state, nearest_index(state, x1), nearest_index(state, x2))
