from .grid import (
    GridState,
    gaussian_wavefunction,
    gaussian_grid_state,
    uniform_grid_state,
    position_mixture,
    cv_k_expectation,
    cv_reconstruct,
    continuum_element,
    nearest_index,
    element_at,
)
from .contrasts import CVContrasts, coherence_overlap, cv_contrasts

__all__ = [
    "GridState",
    "gaussian_wavefunction",
    "gaussian_grid_state",
    "uniform_grid_state",
    "position_mixture",
    "cv_k_expectation",
    "cv_reconstruct",
    "continuum_element",
    "nearest_index",
    "element_at",
    "CVContrasts",
    "coherence_overlap",
    "cv_contrasts",
]
