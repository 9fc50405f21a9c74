"""Compilation of phase settings into X layers, controlled-phase gates and post-selection.

Extension point: qudit systems would replace X by a cyclic shift and the
Hadamard layer by a d-dimensional Fourier gate. No qudit gate set is defined,
so every compiler entry point takes ``local_dim`` and rejects anything but 2.
"""

import logging

from app.errors import IndexOutOfRange
from app.models import (
    ControlledPhase,
    GateCircuit,
    HadamardAll,
    PhaseSetting,
    PostSelectAllZero,
    XLayer,
)

logger = logging.getLogger(__name__)


def _require_qubits(local_dim: int) -> None:
    if local_dim != 2:
        raise NotImplementedError(f"no gate set defined for local dimension {local_dim}")


def _check_basis_index(num_qubits: int, index: int) -> None:
    if not 0 <= index < 2 ** num_qubits:
        raise IndexOutOfRange(f"basis index {index} outside [0, {2 ** num_qubits})")


def _qubits_with_bit(num_qubits: int, index: int, bit: int) -> tuple:
    """Qubits k (1-based, MSB first) whose bit i_k of ``index`` equals ``bit``."""
    return tuple(
        k for k in range(1, num_qubits + 1) if (index >> (num_qubits - k)) & 1 == bit
    )


def compile_phase_shift(num_qubits: int, n: int, theta: float, local_dim: int = 2) -> GateCircuit:
    """Q_n(theta) as X^{i_k+1} layer, multi-controlled phase, X^{i_k+1} layer.

    Empty X layers are left out.
    """
    _require_qubits(local_dim)
    _check_basis_index(num_qubits, n)
    flips = _qubits_with_bit(num_qubits, n, 0)
    gates = []
    if flips:
        gates.append(XLayer(targets=flips))
    gates.append(ControlledPhase(angle=theta))
    if flips:
        gates.append(XLayer(targets=flips))
    return GateCircuit(num_qubits=num_qubits, gates=gates)


def compile_measurement(num_qubits: int, setting: PhaseSetting, local_dim: int = 2) -> GateCircuit:
    """Full circuit for <K_{n,m}^{(theta,phi)}>: two phase shifts, H layer, post-select 0...0."""
    _require_qubits(local_dim)
    _check_basis_index(num_qubits, setting.n)
    _check_basis_index(num_qubits, setting.m)
    circuit = (
        compile_phase_shift(num_qubits, setting.n, setting.theta)
        + compile_phase_shift(num_qubits, setting.m, setting.phi)
        + GateCircuit(num_qubits=num_qubits, gates=[HadamardAll(), PostSelectAllZero()])
    )
    logger.debug("compiled %s into %d gates", setting, len(circuit.gates))
    return circuit


def compile_diagonal_readout(num_qubits: int, n: int) -> GateCircuit:
    """Map |n> to |0...0> and post-select: success probability is rho_nn."""
    _check_basis_index(num_qubits, n)
    ones = _qubits_with_bit(num_qubits, n, 1)
    gates = [XLayer(targets=ones)] if ones else []
    return GateCircuit(num_qubits=num_qubits, gates=[*gates, PostSelectAllZero()])
