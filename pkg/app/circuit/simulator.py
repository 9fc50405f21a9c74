"""Density-matrix simulation of compiled circuits."""

import logging
from typing import NamedTuple, Optional

import numpy as np

from app.config import settings
from app.errors import DimensionMismatch
from app.linalg import DensityMatrix, validate_density
from app.models import GateCircuit, PostSelectAllZero
from .gates import gate_unitary

logger = logging.getLogger(__name__)


class SimulationResult(NamedTuple):
    post_state: Optional[DensityMatrix]
    success_probability: float


def simulate_circuit(rho: DensityMatrix, circuit: GateCircuit) -> SimulationResult:
    """Conjugate rho by each gate; a final post-selection projects onto |0...0>."""
    dim = 2 ** circuit.num_qubits
    if rho.dim != dim:
        raise DimensionMismatch(
            f"state has d={rho.dim}, circuit acts on {circuit.num_qubits} qubits (d={dim})"
        )
    state = np.array(rho.matrix)
    for gate in circuit.gates:
        if isinstance(gate, PostSelectAllZero):
            probability = max(float(state[0, 0].real), 0.0)
            if probability < settings.postselect_floor:
                logger.warning("post-selection probability %.3e below floor", probability)
                return SimulationResult(None, probability)
            projected = np.zeros_like(state)
            projected[0, 0] = 1.0
            return SimulationResult(validate_density(projected), probability)
        u = gate_unitary(gate, circuit.num_qubits)
        state = u @ state @ u.conj().T
    return SimulationResult(validate_density(state), 1.0)
