"""GHZ fidelity, l1 coherence and Bell witness over the element oracles."""

import math

import numpy as np
import pytest

from app.applications import (
    CircuitOracle,
    ElementOracle,
    ExactOracle,
    SampledOracle,
    bell_witness,
    ghz_fidelity,
    l1_coherence,
)
from app.errors import DimensionMismatch, TooFewQubits
from app.linalg import (
    StateVector,
    basis_state,
    dense_ghz_fidelity,
    from_statevector,
    ghz_state,
    maximally_mixed,
    plus_state,
    random_density,
)


class CountingOracle:
    """Wraps an oracle and counts the queries it answers."""

    def __init__(self, inner):
        self.inner = inner
        self.dim = inner.dim
        self.diagonal_calls = 0
        self.element_calls = 0

    def diagonal(self, n):
        self.diagonal_calls += 1
        return self.inner.diagonal(n)

    def element(self, n, m):
        self.element_calls += 1
        return self.inner.element(n, m)


@pytest.mark.parametrize("num_qubits", [2, 3, 4])
def test_ghz_fidelity_exact(num_qubits):
    oracle = CountingOracle(ExactOracle(from_statevector(ghz_state(num_qubits))))
    report = ghz_fidelity(oracle, num_qubits)
    assert report.fidelity == pytest.approx(1.0, abs=1e-10)
    assert report.queries == 3
    assert oracle.diagonal_calls + oracle.element_calls == 3
    assert oracle.element_calls == 1
    last = 2 ** num_qubits - 1
    assert report.elements_used == [(0, 0), (last, last), (0, last), (last, 0)]
    assert report.element_values[3].imag_part == -report.element_values[2].imag_part


@pytest.mark.parametrize("rho, expected", [
    (maximally_mixed(4), 0.25),
    (from_statevector(basis_state(4, 0)), 0.5),
])
def test_ghz_fidelity_examples(rho, expected):
    assert ghz_fidelity(rho, 2).fidelity == pytest.approx(expected, abs=1e-12)


def test_ghz_fidelity_matches_dense_value():
    rng = np.random.default_rng(69)
    for seed in range(50):
        num_qubits = int(rng.integers(2, 5))
        dim = 2 ** num_qubits
        rho = random_density(dim, int(rng.integers(1, dim + 1)), seed)
        expected = dense_ghz_fidelity(rho, num_qubits)
        assert ghz_fidelity(rho, num_qubits).fidelity == pytest.approx(expected, abs=1e-10)


def test_ghz_fidelity_argument_checks():
    with pytest.raises(TooFewQubits):
        ghz_fidelity(maximally_mixed(2), 1)
    with pytest.raises(DimensionMismatch):
        ghz_fidelity(maximally_mixed(4), 3)


def test_sampled_ghz_fidelity_coverage():
    """At least 99% of seeded runs land within five reported standard errors of the truth."""
    rho = random_density(8, 2, 4)
    truth = dense_ghz_fidelity(rho, 3)
    covered = 0
    for seed in range(500):
        report = ghz_fidelity(SampledOracle(rho, 100_000, seed), 3)
        assert report.stderr > 0
        covered += abs(report.fidelity - truth) <= 5 * report.stderr
    assert covered / 500 >= 0.99


def test_l1_coherence_examples(phase_qubit):
    assert l1_coherence(maximally_mixed(3)) == pytest.approx(0.0, abs=1e-12)
    assert l1_coherence(from_statevector(plus_state(2))) == pytest.approx(1.0, abs=1e-10)
    assert l1_coherence(phase_qubit) == pytest.approx(1.0, abs=1e-10)


def test_l1_coherence_matches_matrix():
    rho = random_density(4, 4, 9)
    expected = np.abs(rho.matrix).sum() - np.abs(np.diag(rho.matrix)).sum()
    assert l1_coherence(rho) == pytest.approx(expected, abs=1e-10)


@pytest.mark.parametrize("rho, expected", [
    (from_statevector(ghz_state(2)), -0.5),
    (maximally_mixed(4), 0.25),
    (from_statevector(basis_state(4, 0)), 0.0),
])
def test_bell_witness(rho, expected):
    assert bell_witness(rho) == pytest.approx(expected, abs=1e-10)


def test_bell_witness_needs_two_qubits():
    with pytest.raises(DimensionMismatch):
        bell_witness(maximally_mixed(8))


def test_circuit_oracle_agrees_with_exact():
    rho = random_density(4, 4, 21)
    exact, circuit = ExactOracle(rho), CircuitOracle(rho)
    for n, m in [(0, 1), (0, 3), (2, 1)]:
        assert circuit.element(n, m).value == pytest.approx(exact.element(n, m).value, abs=1e-10)
    assert circuit.diagonal(2).real_part == pytest.approx(exact.diagonal(2).real_part, abs=1e-12)
    assert circuit.element(0, 1).source == "circuit"


def test_circuit_oracle_ghz_fidelity():
    assert ghz_fidelity(CircuitOracle(from_statevector(ghz_state(3))), 3).fidelity == pytest.approx(1.0, abs=1e-10)


def test_circuit_oracle_needs_qubits():
    with pytest.raises(DimensionMismatch):
        CircuitOracle(maximally_mixed(3))


def test_oracles_satisfy_protocol(ghz2):
    for oracle in (ExactOracle(ghz2), SampledOracle(ghz2, 10, 1), CircuitOracle(ghz2)):
        assert isinstance(oracle, ElementOracle)


def test_sampled_oracle_is_deterministic(ghz2):
    a = SampledOracle(ghz2, 1_000, 8).element(0, 3)
    b = SampledOracle(ghz2, 1_000, 8).element(0, 3)
    assert a == b
    assert a.source == "sampled"


def test_sampled_bell_witness_detects_entanglement():
    amps = np.array([1, 0, 0, 1]) / math.sqrt(2)
    rho = from_statevector(StateVector.from_amplitudes(amps))
    assert bell_witness(SampledOracle(rho, 200_000, 3)) < -0.4
