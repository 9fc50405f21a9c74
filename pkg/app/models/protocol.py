"""Models for phase settings, reconstruction plans and element estimates."""

import math
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, model_validator

CANONICAL_THETAS = (0.0, math.pi / 2, -math.pi / 2)
CANONICAL_PHIS = (0.0, math.pi)


class PhaseSetting(BaseModel):
    """One projective operator K_{n,m}^{(theta,phi)}."""
    model_config = ConfigDict(frozen=True)

    n: NonNegativeInt
    m: NonNegativeInt
    theta: float = 0.0
    phi: float = 0.0

    def is_canonical(self) -> bool:
        """True for the (theta, phi) values used by the six-setting plan."""
        return (
            self.n != self.m
            and any(math.isclose(self.theta, t, abs_tol=1e-12) for t in CANONICAL_THETAS)
            and any(math.isclose(self.phi, p, abs_tol=1e-12) for p in CANONICAL_PHIS)
        )


class ReconstructionPlan(BaseModel):
    """Six settings plus the coefficient vectors that combine their expectations."""
    model_config = ConfigDict(frozen=True)

    dim: int = Field(ge=2)
    n: NonNegativeInt
    m: NonNegativeInt
    settings: List[PhaseSetting]
    eta_real: List[float]
    eta_imag: List[float]

    @model_validator(mode="after")
    def check_shape(self):
        if not (len(self.settings) == len(self.eta_real) == len(self.eta_imag) == 6):
            raise ValueError("a reconstruction plan has exactly six settings and coefficients")
        if abs(sum(self.eta_real)) > 1e-12 or abs(sum(self.eta_imag)) > 1e-12:
            raise ValueError("plan coefficients must sum to zero")
        return self


class ElementDiagnostics(BaseModel):
    """Oracle terms of the expectation expansion, computed from the state itself."""
    p_m_zero: float
    p_m_pi: float
    s_nm: List[float]  # one per canonical theta: 0, pi/2, -pi/2


class ElementEstimate(BaseModel):
    """Reconstructed off-diagonal element together with the expectations it came from."""
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    n: NonNegativeInt
    m: NonNegativeInt
    real_part: float = Field(alias="re")
    imag_part: float = Field(alias="im")
    expectations: List[float]
    diagnostics: Optional[ElementDiagnostics] = None

    @property
    def value(self) -> complex:
        return complex(self.real_part, self.imag_part)


class ExpectationAudit(BaseModel):
    """Decomposition <K> = p_m(phi) + s_nm(theta) + cross term."""
    setting: PhaseSetting
    expectation: float
    p_m: float
    s_nm: float
    cross_term: float
    predicted_cross_term: float
    printed_cross_term: float

    @property
    def residual(self) -> float:
        return abs(self.cross_term - self.predicted_cross_term)


class ContrastCheck(BaseModel):
    """One phi-contrast <K(theta,0)> - <K(theta,pi)> against its predicted value."""
    theta: float
    measured: float
    predicted: float

    @property
    def residual(self) -> float:
        return abs(self.measured - self.predicted)
