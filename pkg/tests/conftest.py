"""Shared state fixtures."""

import numpy as np
import pytest

from app.linalg import from_statevector, ghz_state, maximally_mixed, random_density, StateVector


@pytest.fixture
def ghz2():
    return from_statevector(ghz_state(2))


@pytest.fixture
def mixed4():
    return maximally_mixed(4)


@pytest.fixture
def ginibre4():
    return random_density(4, 4, 1)


@pytest.fixture
def phase_qubit():
    """Pure qubit (|0> + e^{i pi/4}|1>)/sqrt(2), so rho_01 = e^{-i pi/4}/2."""
    amps = np.array([1, np.exp(1j * np.pi / 4)]) / np.sqrt(2)
    return from_statevector(StateVector.from_amplitudes(amps))
