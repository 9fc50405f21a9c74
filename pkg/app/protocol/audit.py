"""Oracle decomposition of <K> into p_m, s_nm and the coherence cross term.

All terms are computed from the state by direct products; nothing here is
inferred from measured expectations.
"""

import math
from typing import List, Optional

import numpy as np

from app.config import settings
from app.errors import IndicesEqual, VerificationError
from app.linalg import DensityMatrix
from app.models import ContrastCheck, ExpectationAudit, PhaseSetting
from .operators import _check_index, k_expectation, phase_shift_operator, plus_bra


def p_m_term(rho: DensityMatrix, m: int, phi: float) -> float:
    """p_m(phi) = <+|Q_m(phi) rho Q_m(phi)^dag|+>."""
    bra = plus_bra(rho.dim) @ phase_shift_operator(rho.dim, m, phi)
    return float((bra @ rho.matrix @ bra.conj()).real)


def s_nm_term(rho: DensityMatrix, n: int, m: int, theta: float) -> float:
    """s_nm(theta): the theta-only part of <K>, relative to theta = 0."""
    d = rho.dim
    mat = rho.matrix
    mask = np.ones(d)
    mask[m] = 0.0
    row = mat[n, :] @ mask   # sum_{i != m} <n|rho|i>
    col = mask @ mat[:, n]   # sum_{i != m} <i|rho|n>
    value = (
        2 / d * (1 - math.cos(theta)) * mat[n, n]
        + (np.exp(1j * theta) - 1) / d * row
        + (np.exp(-1j * theta) - 1) / d * col
    )
    return float(value.real)


def cross_term(d: int, theta: float, phi: float, rho_nm: complex) -> float:
    """(2/d)[cos(theta-phi) - cos phi] Re - (2/d)[sin(theta-phi) + sin phi] Im."""
    return (
        2 / d * (math.cos(theta - phi) - math.cos(phi)) * rho_nm.real
        - 2 / d * (math.sin(theta - phi) + math.sin(phi)) * rho_nm.imag
    )


def printed_cross_term(d: int, theta: float, phi: float, rho_nm: complex) -> float:
    """Cross term with the Im coefficient as originally printed: sin(theta-phi) - sin phi.

    Agrees with :func:`cross_term` only for phi in {0, pi}.
    """
    return (
        2 / d * (math.cos(theta - phi) - math.cos(phi)) * rho_nm.real
        - 2 / d * (math.sin(theta - phi) - math.sin(phi)) * rho_nm.imag
    )


def expectation_decomposition_audit(
    rho: DensityMatrix,
    setting: PhaseSetting,
    tol: Optional[float] = None,
) -> ExpectationAudit:
    """Split <K> into p_m(phi), s_nm(theta) and the cross term, and check the cross term."""
    n, m = setting.n, setting.m
    if n == m:
        raise IndicesEqual(f"audit needs n != m, got n = m = {n}")
    d = rho.dim
    _check_index(d, n, "n")
    _check_index(d, m, "m")

    # unclipped sandwich so the three terms add up exactly
    shift = phase_shift_operator(d, m, setting.phi) @ phase_shift_operator(d, n, setting.theta)
    bra = plus_bra(d) @ shift
    expectation = float((bra @ rho.matrix @ bra.conj()).real)

    p_m = p_m_term(rho, m, setting.phi)
    s_nm = s_nm_term(rho, n, m, setting.theta)
    rho_nm = complex(rho.matrix[n, m])
    audit = ExpectationAudit(
        setting=setting,
        expectation=expectation,
        p_m=p_m,
        s_nm=s_nm,
        cross_term=expectation - p_m - s_nm,
        predicted_cross_term=cross_term(d, setting.theta, setting.phi, rho_nm),
        printed_cross_term=printed_cross_term(d, setting.theta, setting.phi, rho_nm),
    )
    tol = settings.verify_tol if tol is None else tol
    if audit.residual > tol:
        raise VerificationError(
            f"cross term {audit.cross_term:.3e} differs from prediction "
            f"{audit.predicted_cross_term:.3e} by {audit.residual:.3e}"
        )
    return audit


def contrast_identities(rho: DensityMatrix, n: int, m: int) -> List[ContrastCheck]:
    """<K(theta,0)> - <K(theta,pi)> for theta in (0, pi/2, -pi/2) against the prediction

    p_m(0) - p_m(pi) + (4/d)(cos theta - 1) Re rho_nm - (4/d) sin theta Im rho_nm.
    """
    if n == m:
        raise IndicesEqual(f"contrasts need n != m, got n = m = {n}")
    d = rho.dim
    rho_nm = complex(rho.matrix[n, m])
    base = p_m_term(rho, m, 0.0) - p_m_term(rho, m, math.pi)
    checks = []
    for theta in (0.0, math.pi / 2, -math.pi / 2):
        measured = k_expectation(rho, PhaseSetting(n=n, m=m, theta=theta, phi=0.0)) - k_expectation(
            rho, PhaseSetting(n=n, m=m, theta=theta, phi=math.pi)
        )
        predicted = (
            base
            + 4 / d * (math.cos(theta) - 1) * rho_nm.real
            - 4 / d * math.sin(theta) * rho_nm.imag
        )
        checks.append(ContrastCheck(theta=theta, measured=measured, predicted=predicted))
    return checks
