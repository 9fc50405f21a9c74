"""Seeded shot sampling, element estimates and convergence sweeps."""

import math

import numpy as np
import pytest

from app.errors import IndicesEqual, StateValidationError, ZeroShots
from app.linalg import StateVector, from_statevector, maximally_mixed, plus_state
from app.models import PhaseSetting
from app.protocol import measure_offdiagonal
from app.sampling import (
    SWEEP_COLUMNS,
    binomial_stderr,
    convergence_sweep,
    derive_seed,
    draw_binomial,
    estimate_element,
    make_generator,
    sample_diagonal,
    sample_expectation,
)


def test_derive_seed_is_stable_and_distinct():
    assert derive_seed(42, 0) == derive_seed(42, 0)
    assert len({derive_seed(42, g) for g in range(6)}) == 6
    assert derive_seed(42, 0, 1) != derive_seed(42, 1, 0)


@pytest.mark.parametrize("shots", [1_000, 1_000_000])
def test_draw_binomial_edges(shots):
    rng = make_generator(0)
    assert draw_binomial(rng, shots, 0.0) == 0
    assert draw_binomial(rng, shots, 1.0) == shots


def test_draw_binomial_band():
    successes = draw_binomial(make_generator(7), 10_000, 0.5)
    assert 4600 <= successes <= 5400


def test_inverse_cdf_branch_band():
    draws = [draw_binomial(make_generator(s), 1_000_000, 0.3) for s in range(20)]
    assert all(abs(k - 300_000) <= 5 * math.sqrt(1_000_000 * 0.21) for k in draws)


def test_sample_expectation_certain_outcomes():
    minus = from_statevector(StateVector.from_amplitudes([1 / math.sqrt(2), -1 / math.sqrt(2)]))
    plus = from_statevector(plus_state(2))
    setting = PhaseSetting(n=0, m=1)
    assert sample_expectation(minus, setting, 500, 1).successes == 0
    assert sample_expectation(plus, setting, 500, 1).successes == 500


def test_zero_shots_rejected(mixed4):
    with pytest.raises(ZeroShots):
        sample_expectation(mixed4, PhaseSetting(n=0, m=1), 0, 1)
    with pytest.raises(ZeroShots):
        estimate_element(mixed4, 0, 1, 0, 1)


def test_sample_diagonal(ghz2):
    record = sample_diagonal(ghz2, 0, 10_000, 3)
    assert record.basis_index == 0
    assert record.setting is None
    assert abs(record.estimate - 0.5) <= 5 * binomial_stderr(record)


def test_estimate_needs_offdiagonal(mixed4):
    with pytest.raises(IndicesEqual):
        estimate_element(mixed4, 2, 2, 100, 1)


def test_estimate_maximally_mixed():
    estimate = estimate_element(maximally_mixed(4), 0, 1, 1_000_000, 5)
    assert abs(estimate.real_part) <= 5 * estimate.real_stderr
    assert abs(estimate.imag_part) <= 5 * estimate.imag_stderr
    assert estimate.total_shots == 6_000_000
    assert len(estimate.estimates) == 6


def test_estimate_phase_qubit(phase_qubit):
    estimate = estimate_element(phase_qubit, 0, 1, 1_000_000, 11)
    assert abs(estimate.real_part - math.sqrt(2) / 4) <= 5 * estimate.real_stderr
    assert abs(estimate.imag_part + math.sqrt(2) / 4) <= 5 * estimate.imag_stderr


def test_estimate_is_deterministic(ginibre4):
    first = estimate_element(ginibre4, 0, 2, 20_000, 99)
    second = estimate_element(ginibre4, 0, 2, 20_000, 99)
    assert first.model_dump_json() == second.model_dump_json()


def test_estimates_unbiased(ginibre4):
    truth = measure_offdiagonal(ginibre4, 1, 2)
    runs = [estimate_element(ginibre4, 1, 2, 5_000, seed) for seed in range(200)]
    real = np.array([r.real_part for r in runs])
    stderr = np.mean([r.real_stderr for r in runs])
    assert abs(real.mean() - truth.real_part) <= 5 * stderr / math.sqrt(len(runs))


def test_stderr_matches_spread(phase_qubit):
    """Reported standard error agrees with the empirical spread within a factor 1.3."""
    runs = [estimate_element(phase_qubit, 0, 1, 1_000, seed) for seed in range(500)]
    for attr in ("real", "imag"):
        values = np.array([getattr(r, f"{attr}_part") for r in runs])
        reported = np.mean([getattr(r, f"{attr}_stderr") for r in runs])
        ratio = values.std(ddof=1) / reported
        assert 1 / 1.3 <= ratio <= 1.3


def test_sweep_scaling(ginibre4):
    """RMSE falls by about sqrt(100) between 1e4 and 1e6 shots."""
    frame = convergence_sweep(ginibre4, 0, 1, [10_000, 1_000_000], repeats=32, seed=2024)
    assert list(frame.columns) == SWEEP_COLUMNS
    assert frame["M"].tolist() == [10_000, 1_000_000]
    ratio = frame["rmse_real"].iloc[0] / frame["rmse_real"].iloc[1]
    assert 5 <= ratio <= 20
    assert frame["mean_stderr"].iloc[1] < frame["mean_stderr"].iloc[0]


def test_sweep_zero_variance_state():
    """Every setting has probability 0 on this state, so the sweep is noiseless."""
    amps = np.array([0, 0, 1, -1]) / math.sqrt(2)
    rho = from_statevector(StateVector.from_amplitudes(amps))
    frame = convergence_sweep(rho, 0, 1, [100, 10_000], repeats=8, seed=1)
    assert frame["rmse_real"].tolist() == [0.0, 0.0]
    assert frame["rmse_imag"].tolist() == [0.0, 0.0]


def test_sweep_needs_repeats(ginibre4):
    with pytest.raises(StateValidationError):
        convergence_sweep(ginibre4, 0, 1, [100], repeats=4, seed=1)


def test_sweep_is_deterministic(ginibre4):
    a = convergence_sweep(ginibre4, 0, 3, [1_000], repeats=8, seed=3)
    b = convergence_sweep(ginibre4, 0, 3, [1_000], repeats=8, seed=3)
    assert a.equals(b)
