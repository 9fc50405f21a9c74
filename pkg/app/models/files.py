"""JSON payloads of state files."""

from typing import List, Tuple

from pydantic import BaseModel, Field, model_validator

ComplexPair = Tuple[float, float]


class DensityFile(BaseModel):
    """Row-major density matrix entries as [re, im] pairs."""
    dim: int = Field(ge=1)
    entries: List[ComplexPair]

    @model_validator(mode="after")
    def check_count(self):
        if len(self.entries) != self.dim ** 2:
            raise ValueError(f"expected {self.dim ** 2} entries for dim {self.dim}, got {len(self.entries)}")
        return self


class StateVectorFile(BaseModel):
    """State vector amplitudes as [re, im] pairs."""
    dim: int = Field(ge=1)
    amps: List[ComplexPair]

    @model_validator(mode="after")
    def check_count(self):
        if len(self.amps) != self.dim:
            raise ValueError(f"expected {self.dim} amplitudes, got {len(self.amps)}")
        return self


class GridFile(BaseModel):
    """Grid-discretized continuous-variable state."""
    G: int = Field(ge=4)
    x_min: float
    x_max: float
    entries: List[ComplexPair]

    @model_validator(mode="after")
    def check_count(self):
        if len(self.entries) != self.G ** 2:
            raise ValueError(f"expected {self.G ** 2} entries for G {self.G}, got {len(self.entries)}")
        if self.x_max <= self.x_min:
            raise ValueError("x_max must exceed x_min")
        return self
