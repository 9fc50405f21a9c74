"""The six-setting reconstruction plan."""

import logging
import math

from app.errors import IndexOutOfRange, IndicesEqual
from app.models import PhaseSetting, ReconstructionPlan

logger = logging.getLogger(__name__)

# (theta, phi) in canonical order; expectation vectors are addressed by position
CANONICAL_ANGLES = (
    (0.0, 0.0),
    (0.0, math.pi),
    (math.pi / 2, 0.0),
    (math.pi / 2, math.pi),
    (-math.pi / 2, 0.0),
    (-math.pi / 2, math.pi),
)
_ETA_REAL = (2, -2, -1, 1, -1, 1)
_ETA_IMAG = (0, 0, 1, -1, -1, 1)


def canonical_plan(d: int, n: int, m: int) -> ReconstructionPlan:
    """Settings and coefficients giving Re and Im of rho_nm from six expectations."""
    if not (0 <= n < d and 0 <= m < d):
        raise IndexOutOfRange(f"indices ({n}, {m}) outside [0, {d})")
    if n == m:
        raise IndicesEqual(f"off-diagonal reconstruction needs n != m, got n = m = {n}")
    settings = [PhaseSetting(n=n, m=m, theta=t, phi=p) for t, p in CANONICAL_ANGLES]
    logger.debug("canonical plan d=%d (n, m)=(%d, %d)", d, n, m)
    return ReconstructionPlan(
        dim=d,
        n=n,
        m=m,
        settings=settings,
        eta_real=[d / 8 * c for c in _ETA_REAL],
        eta_imag=[-d / 8 * c for c in _ETA_IMAG],
    )
