"""Application report models."""

from typing import List, Literal, Tuple

from pydantic import BaseModel, ConfigDict, NonNegativeInt


class ElementReading(BaseModel):
    """One density-matrix element as delivered by an element oracle."""
    model_config = ConfigDict(frozen=True)

    n: NonNegativeInt
    m: NonNegativeInt
    real_part: float
    imag_part: float = 0.0
    real_stderr: float = 0.0
    imag_stderr: float = 0.0
    source: Literal["exact", "sampled", "circuit"] = "exact"

    @property
    def value(self) -> complex:
        return complex(self.real_part, self.imag_part)

    def conjugate(self) -> "ElementReading":
        return self.model_copy(
            update={"n": self.m, "m": self.n, "imag_part": -self.imag_part}
        )


class FidelityReport(BaseModel):
    """GHZ fidelity built from a handful of element queries."""
    num_qubits: int
    fidelity: float
    stderr: float = 0.0
    elements_used: List[Tuple[int, int]]
    element_values: List[ElementReading]
    queries: int
