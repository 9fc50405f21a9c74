"""Unitaries of the circuit primitives.

Qubit 1 is the most significant bit of the basis index, so the kron order is
qubit 1 first.
"""

from functools import reduce

import numpy as np
from scipy.linalg import hadamard

from app.models import ControlledPhase, Gate, GateCircuit, HadamardAll, PostSelectAllZero, XLayer

_I2 = np.eye(2, dtype=np.complex128)
_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)


def gate_unitary(gate: Gate, num_qubits: int) -> np.ndarray:
    """Dense 2^N x 2^N unitary of one gate."""
    dim = 2 ** num_qubits
    if isinstance(gate, XLayer):
        factors = [_X if q in gate.targets else _I2 for q in range(1, num_qubits + 1)]
        return reduce(np.kron, factors)
    if isinstance(gate, ControlledPhase):
        diag = np.ones(dim, dtype=np.complex128)
        diag[-1] = np.exp(1j * gate.angle)
        return np.diag(diag)
    if isinstance(gate, HadamardAll):
        return hadamard(dim).astype(np.complex128) / np.sqrt(dim)
    if isinstance(gate, PostSelectAllZero):
        raise ValueError("post-selection is not unitary")
    raise TypeError(f"unknown gate {gate!r}")


def circuit_unitary(circuit: GateCircuit) -> np.ndarray:
    """Product of all unitary gates, ignoring a trailing post-selection."""
    u = np.eye(2 ** circuit.num_qubits, dtype=np.complex128)
    for gate in circuit.gates:
        if isinstance(gate, PostSelectAllZero):
            continue
        u = gate_unitary(gate, circuit.num_qubits) @ u
    return u
