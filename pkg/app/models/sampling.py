"""Finite-shot sampling models."""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, NonNegativeInt, PositiveInt, model_validator

from .protocol import PhaseSetting


class ShotRecord(BaseModel):
    """Bernoulli tally of one measurement setting.

    ``setting`` is None for a computational-basis readout of ``basis_index``.
    """
    model_config = ConfigDict(frozen=True)

    setting: Optional[PhaseSetting] = None
    basis_index: Optional[NonNegativeInt] = None
    shots: PositiveInt
    successes: NonNegativeInt
    seed: NonNegativeInt

    @model_validator(mode="after")
    def check_tally(self):
        if self.successes > self.shots:
            raise ValueError(f"successes {self.successes} exceed shots {self.shots}")
        return self

    @property
    def estimate(self) -> float:
        return self.successes / self.shots


class NoisyElementEstimate(BaseModel):
    """Element reconstructed from sampled expectations, with binomial standard errors."""
    model_config = ConfigDict(frozen=True)

    n: NonNegativeInt
    m: NonNegativeInt
    real_part: float
    imag_part: float
    real_stderr: float
    imag_stderr: float
    total_shots: int
    estimates: List[float]
    seed: NonNegativeInt

    @property
    def value(self) -> complex:
        return complex(self.real_part, self.imag_part)
