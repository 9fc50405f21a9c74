"""Element oracles: the "give me element (n, m)" interface the applications consume.

Three backends answer the same queries: exact expectations, finite-shot
sampling and gate-level circuit simulation.
"""

import math
from typing import Protocol, Union, runtime_checkable

from app.circuit import compile_diagonal_readout, compile_measurement, simulate_circuit
from app.errors import DimensionMismatch
from app.linalg import DensityMatrix
from app.models import ElementReading
from app.protocol import canonical_plan, measure_diagonal, measure_offdiagonal, reconstruct_offdiagonal
from app.sampling import binomial_stderr, derive_seed, estimate_element, sample_diagonal

# substream tags so diagonal and off-diagonal queries never share draws
_OFFDIAGONAL_STREAM = 0
_DIAGONAL_STREAM = 1


@runtime_checkable
class ElementOracle(Protocol):
    dim: int

    def diagonal(self, n: int) -> ElementReading: ...

    def element(self, n: int, m: int) -> ElementReading: ...


class ExactOracle:
    """Readings from exact projective expectations."""

    def __init__(self, rho: DensityMatrix):
        self.rho = rho
        self.dim = rho.dim

    def diagonal(self, n: int) -> ElementReading:
        return ElementReading(n=n, m=n, real_part=measure_diagonal(self.rho, n))

    def element(self, n: int, m: int) -> ElementReading:
        estimate = measure_offdiagonal(self.rho, n, m)
        return ElementReading(n=n, m=m, real_part=estimate.real_part, imag_part=estimate.imag_part)


class SampledOracle:
    """Readings from ``shots`` trials per setting, seeded per query."""

    def __init__(self, rho: DensityMatrix, shots: int, seed: int):
        self.rho = rho
        self.dim = rho.dim
        self.shots = shots
        self.seed = seed

    def diagonal(self, n: int) -> ElementReading:
        record = sample_diagonal(
            self.rho, n, self.shots, derive_seed(self.seed, _DIAGONAL_STREAM, n)
        )
        return ElementReading(
            n=n, m=n, real_part=record.estimate, real_stderr=binomial_stderr(record), source="sampled"
        )

    def element(self, n: int, m: int) -> ElementReading:
        estimate = estimate_element(
            self.rho, n, m, self.shots, derive_seed(self.seed, _OFFDIAGONAL_STREAM, n, m)
        )
        return ElementReading(
            n=n,
            m=m,
            real_part=estimate.real_part,
            imag_part=estimate.imag_part,
            real_stderr=estimate.real_stderr,
            imag_stderr=estimate.imag_stderr,
            source="sampled",
        )


class CircuitOracle:
    """Readings from post-selection probabilities of simulated compiled circuits."""

    def __init__(self, rho: DensityMatrix):
        num_qubits = int(round(math.log2(rho.dim)))
        if 2 ** num_qubits != rho.dim:
            raise DimensionMismatch(f"circuit backend needs d = 2^N, got d={rho.dim}")
        self.rho = rho
        self.dim = rho.dim
        self.num_qubits = num_qubits

    def diagonal(self, n: int) -> ElementReading:
        result = simulate_circuit(self.rho, compile_diagonal_readout(self.num_qubits, n))
        return ElementReading(n=n, m=n, real_part=result.success_probability, source="circuit")

    def element(self, n: int, m: int) -> ElementReading:
        plan = canonical_plan(self.dim, n, m)
        expectations = [
            simulate_circuit(self.rho, compile_measurement(self.num_qubits, s)).success_probability
            for s in plan.settings
        ]
        estimate = reconstruct_offdiagonal(expectations, self.dim, plan)
        return ElementReading(
            n=n, m=m, real_part=estimate.real_part, imag_part=estimate.imag_part, source="circuit"
        )


def as_oracle(source: Union[DensityMatrix, ElementOracle]) -> ElementOracle:
    """Wrap a bare state in the exact backend; oracles pass through."""
    if isinstance(source, DensityMatrix):
        return ExactOracle(source)
    return source
