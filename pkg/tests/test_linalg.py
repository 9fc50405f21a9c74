"""Density matrix validation and state construction tests."""

import math

import numpy as np
import pytest

from app.circuit import circuit_unitary, compile_measurement
from app.errors import (
    BadRank,
    DimensionMismatch,
    NotHermitian,
    NotNormalized,
    NotPSD,
    StateValidationError,
    TooFewQubits,
    TraceNotOne,
)
from app.linalg import (
    StateVector,
    basis_state,
    dense_ghz_fidelity,
    frobenius_distance,
    from_statevector,
    ghz_state,
    maximally_mixed,
    plus_state,
    random_density,
    validate_density,
)
from app.models import PhaseSetting


def test_maximally_mixed_is_valid():
    """I/2 validates with zero residuals."""
    rho = validate_density(np.eye(2) / 2)
    assert rho.dim == 2
    assert rho.hermiticity_residual == 0.0
    assert rho.trace_residual == 0.0
    assert rho.min_eigenvalue == pytest.approx(0.5)


@pytest.mark.parametrize("matrix, error", [
    ([[0.5, 0.6], [0.6, 0.5]], NotPSD),
    ([[1, 1j], [1j, 0]], NotHermitian),
    ([[0.5, 0], [0, 0.4]], TraceNotOne),
    ([[0.5, 0, 0], [0, 0.5, 0]], DimensionMismatch),
])
def test_invalid_matrices_rejected(matrix, error):
    """Each broken invariant raises its own error."""
    with pytest.raises(error):
        validate_density(matrix)


def test_validated_matrix_is_read_only():
    rho = maximally_mixed(3)
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 1.0


def test_validation_copies_input():
    source = np.eye(2) / 2
    rho = validate_density(source)
    source[0, 0] = 7.0
    assert rho.matrix[0, 0] == 0.5


@pytest.mark.parametrize("amps, expected", [
    ([1, 0], [[1, 0], [0, 0]]),
    ([1 / np.sqrt(2), 1 / np.sqrt(2)], [[0.5, 0.5], [0.5, 0.5]]),
])
def test_from_statevector(amps, expected):
    rho = from_statevector(StateVector.from_amplitudes(amps))
    np.testing.assert_allclose(rho.matrix, expected, atol=1e-15)


def test_from_statevector_keeps_relative_phase(phase_qubit):
    assert phase_qubit.matrix[0, 1] == pytest.approx(np.exp(-1j * np.pi / 4) / 2, abs=1e-15)


def test_unnormalized_vector_rejected():
    with pytest.raises(NotNormalized):
        from_statevector(StateVector.from_amplitudes([1, 1]))


def test_random_density_rank_one_is_pure():
    rho = random_density(2, 1, 7)
    assert abs(rho.min_eigenvalue) < 1e-12
    assert np.linalg.matrix_rank(rho.matrix, tol=1e-10) == 1


def test_random_density_full_rank():
    rho = random_density(4, 4, 1)
    assert abs(np.trace(rho.matrix) - 1) < 1e-12
    assert rho.min_eigenvalue > 0


def test_random_density_is_deterministic():
    np.testing.assert_array_equal(random_density(5, 3, 11).matrix, random_density(5, 3, 11).matrix)


@pytest.mark.parametrize("rank", [0, 5])
def test_random_density_bad_rank(rank):
    with pytest.raises(BadRank):
        random_density(4, rank, 0)


def test_random_density_invariants_over_seeds():
    rng = np.random.default_rng(2024)
    for _ in range(100):
        d = int(rng.integers(1, 17))
        rank = int(rng.integers(1, d + 1))
        seed = int(rng.integers(0, 2 ** 31))
        rho = random_density(d, rank, seed)
        assert rho.hermiticity_residual <= 1e-12
        assert rho.trace_residual <= 1e-12
        assert rho.min_eigenvalue >= -1e-12


@pytest.mark.parametrize("call", [
    lambda: random_density(4, 4, -1),
    lambda: random_density(0, 1, 0),
    lambda: plus_state(-1),
    lambda: plus_state(0),
    lambda: maximally_mixed(0),
])
def test_bad_sizes_and_seeds_rejected(call):
    with pytest.raises(StateValidationError):
        call()


def test_validation_is_unitarily_invariant():
    rng = np.random.default_rng(31)
    for seed in range(20):
        rho = random_density(8, int(rng.integers(1, 9)), seed)
        setting = PhaseSetting(
            n=int(rng.integers(0, 4)), m=int(rng.integers(4, 8)),
            theta=float(rng.uniform(-math.pi, math.pi)), phi=float(rng.uniform(-math.pi, math.pi)),
        )
        u = circuit_unitary(compile_measurement(3, setting))
        rotated = validate_density(u @ rho.matrix @ u.conj().T)
        assert abs(rotated.hermiticity_residual - rho.hermiticity_residual) <= 1e-9
        assert abs(rotated.trace_residual - rho.trace_residual) <= 1e-9
        assert rotated.min_eigenvalue == pytest.approx(rho.min_eigenvalue, abs=1e-9)


def test_ghz_amplitudes():
    np.testing.assert_allclose(ghz_state(2).amplitudes, [1 / np.sqrt(2), 0, 0, 1 / np.sqrt(2)])
    amps = ghz_state(3).amplitudes
    assert np.flatnonzero(amps).tolist() == [0, 7]


def test_ghz_density_has_four_corner_entries():
    rho = from_statevector(ghz_state(2))
    nonzero = np.argwhere(np.abs(rho.matrix) > 1e-15)
    assert len(nonzero) == 4
    np.testing.assert_allclose(np.abs(rho.matrix[tuple(nonzero.T)]), 0.5)


def test_ghz_needs_two_qubits():
    with pytest.raises(TooFewQubits):
        ghz_state(1)


def test_dense_ghz_fidelity():
    assert dense_ghz_fidelity(from_statevector(ghz_state(3)), 3) == pytest.approx(1.0)
    assert dense_ghz_fidelity(from_statevector(basis_state(8, 0)), 3) == pytest.approx(0.5)


def test_frobenius_distance_accepts_both_forms():
    a = from_statevector(plus_state(2))
    assert frobenius_distance(a, a.matrix) == 0.0
    assert frobenius_distance(a, maximally_mixed(2)) == pytest.approx(np.sqrt(0.5))
