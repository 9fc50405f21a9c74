"""Partial-readout applications: GHZ fidelity, l1 coherence, Bell witness."""

import logging
import math
from typing import Union

from app.errors import DimensionMismatch, TooFewQubits
from app.linalg import DensityMatrix
from app.models import FidelityReport
from .oracles import ElementOracle, as_oracle

logger = logging.getLogger(__name__)

Source = Union[DensityMatrix, ElementOracle]


def ghz_fidelity(source: Source, num_qubits: int) -> FidelityReport:
    """F = (rho_00 + rho_DD)/2 + Re rho_0D with D = 2^N - 1.

    Three queries; the report lists the four corner elements, the fourth being
    the conjugate of rho_0D.
    """
    if num_qubits < 2:
        raise TooFewQubits(f"GHZ fidelity needs N >= 2, got {num_qubits}")
    oracle = as_oracle(source)
    if oracle.dim != 2 ** num_qubits:
        raise DimensionMismatch(f"state has d={oracle.dim}, expected 2^{num_qubits}")
    last = oracle.dim - 1

    first_diag = oracle.diagonal(0)
    last_diag = oracle.diagonal(last)
    corner = oracle.element(0, last)

    fidelity = 0.5 * (first_diag.real_part + last_diag.real_part) + corner.real_part
    stderr = math.sqrt(
        0.25 * first_diag.real_stderr ** 2
        + 0.25 * last_diag.real_stderr ** 2
        + corner.real_stderr ** 2
    )
    logger.debug("GHZ-%d fidelity %.6f +- %.2e", num_qubits, fidelity, stderr)
    return FidelityReport(
        num_qubits=num_qubits,
        fidelity=fidelity,
        stderr=stderr,
        elements_used=[(0, 0), (last, last), (0, last), (last, 0)],
        element_values=[first_diag, last_diag, corner, corner.conjugate()],
        queries=3,
    )


def l1_coherence(source: Source) -> float:
    """sum_{n != m} |rho_nm|, using rho_mn = conj(rho_nm)."""
    oracle = as_oracle(source)
    total = 0.0
    for n in range(oracle.dim):
        for m in range(n + 1, oracle.dim):
            total += 2 * abs(oracle.element(n, m).value)
    return total


def bell_witness(source: Source) -> float:
    """Tr[W rho] for W = I/2 - |Phi+><Phi+|; negative certifies entanglement."""
    oracle = as_oracle(source)
    if oracle.dim != 4:
        raise DimensionMismatch(f"Bell witness needs a two-qubit state, got d={oracle.dim}")
    overlap = 0.5 * (oracle.diagonal(0).real_part + oracle.diagonal(3).real_part)
    overlap += oracle.element(0, 3).real_part
    return 0.5 - overlap
