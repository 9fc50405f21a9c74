"""Continuous-variable contrast quantities."""

import math

import numpy as np
from pydantic import BaseModel

from app.protocol import CANONICAL_ANGLES
from .grid import GridState, _check_pair, cv_k_expectation


class CVContrasts(BaseModel):
    """q, p, p' phi-contrasts and the element they imply."""
    q: float
    p: float
    p_prime: float
    real_part: float
    imag_part: float


def coherence_overlap(state: GridState, a_idx: int, b_idx: int, phi: float) -> complex:
    """<x_a|rho|y_b(phi)> with y_b(phi) = Q_b(phi)^dag sum_x |x> (unnormalised).

    The phi = 0 and phi = pi values differ by exactly 2 rho_grid(a, b).
    """
    _check_pair(state, a_idx, b_idx)
    y = np.ones(state.grid_points, dtype=np.complex128)
    y[b_idx] = np.exp(-1j * phi)
    return complex(state.rho.matrix[a_idx, :] @ y)


def cv_contrasts(state: GridState, a_idx: int, b_idx: int) -> CVContrasts:
    """Contrasts K(theta, 0) - K(theta, pi) for theta = 0, pi/2, -pi/2.

    Re = (G/8)(2q - p - p'), Im = (G/8)(p' - p).
    """
    k = {
        (theta, phi): cv_k_expectation(state, a_idx, b_idx, theta, phi)
        for theta, phi in CANONICAL_ANGLES
    }
    half = math.pi / 2
    q = k[(0.0, 0.0)] - k[(0.0, math.pi)]
    p = k[(half, 0.0)] - k[(half, math.pi)]
    p_prime = k[(-half, 0.0)] - k[(-half, math.pi)]
    G = state.grid_points
    return CVContrasts(
        q=q,
        p=p,
        p_prime=p_prime,
        real_part=G / 8 * (2 * q - p - p_prime),
        imag_part=G / 8 * (p_prime - p),
    )
