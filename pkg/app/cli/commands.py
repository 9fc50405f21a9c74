"""Subcommand handlers.

Each handler takes a validated RunConfig (plus the raw namespace for
command-specific flags) and returns the text destined for stdout.
"""

import logging
import math
import sys
from argparse import Namespace

import pandas as pd

from app.applications import CircuitOracle, ExactOracle, SampledOracle, bell_witness, ghz_fidelity, l1_coherence
from app.circuit import compile_measurement, dump_circuit, simulate_circuit
from app.config import settings
from app.cvgrid import GridState, continuum_element, cv_reconstruct, gaussian_grid_state
from app.errors import (
    DimensionMismatch,
    IndexOutOfRange,
    QubitLimitExceeded,
    SpecParseError,
    VerificationError,
)
from app.linalg import (
    DensityMatrix,
    StateVector,
    frobenius_distance,
    from_statevector,
    ghz_state,
    plus_state,
    random_density,
)
from app.models import PhaseSetting, RunConfig
from app.protocol import k_expectation, measure_offdiagonal, reconstruct_full
from app.sampling import convergence_sweep, estimate_element
from app.utils import StateFileManager, emit, render, to_payload
from .parser import parse_generator_spec

logger = logging.getLogger(__name__)


def build_config(args: Namespace) -> RunConfig:
    fmt = getattr(args, "output_format", None)
    if fmt is None:
        fmt = "csv" if args.command == "sweep" else settings.output_format
    return RunConfig(
        command=args.command,
        state_path=getattr(args, "state_path", None),
        generator=getattr(args, "spec", None),
        n=getattr(args, "n", None),
        m=getattr(args, "m", None),
        theta=getattr(args, "theta", None),
        phi=getattr(args, "phi", None),
        shots=getattr(args, "shots", None),
        seed=getattr(args, "seed", None),
        out=getattr(args, "out", None),
        output_format=fmt,
    )


def _require(config: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(config, name) is None:
            flag = "--state" if name == "state_path" else f"--{name}"
            raise SpecParseError(f"{config.command} needs {flag}")


def _density(config: RunConfig) -> DensityMatrix:
    _require(config, "state_path")
    return StateFileManager(config.state_path).load_density()


def _residuals(name: str, rho: DensityMatrix) -> dict:
    return {
        "generator": name,
        "dim": rho.dim,
        "hermiticity_residual": rho.hermiticity_residual,
        "trace_residual": rho.trace_residual,
        "min_eigenvalue": rho.min_eigenvalue,
    }


def cmd_state(config: RunConfig, args: Namespace) -> str:
    name, values = parse_generator_spec(config.generator or [])
    if name == "ginibre":
        state = random_density(*values)
    elif name == "ghz":
        state = from_statevector(ghz_state(*values))
    elif name == "plus":
        state = from_statevector(plus_state(*values))
    elif name == "statevector":
        loaded = StateFileManager(values[0]).load()
        if not isinstance(loaded, StateVector):
            raise SpecParseError(f"{values[0]} does not hold a state vector", position=2)
        state = from_statevector(loaded)
    else:
        state = gaussian_grid_state(*values)

    rho = state.rho if isinstance(state, GridState) else state
    residuals = _residuals(name, rho)
    logger.info("generated %s state of dimension %d", name, rho.dim)
    if config.out:
        StateFileManager(config.out).save(state)
        return render(residuals, config.output_format)
    sys.stderr.write(render(residuals, "json"))
    return to_payload(state).model_dump_json() + "\n"


def cmd_measure(config: RunConfig, args: Namespace) -> str:
    _require(config, "n", "m")
    rho = _density(config)
    n, m = config.n, config.m
    if n == m:
        oracle = SampledOracle(rho, config.shots, config.seed) if config.shots else ExactOracle(rho)
        payload = oracle.diagonal(n)
    elif config.shots:
        payload = estimate_element(rho, n, m, config.shots, config.seed)
    else:
        payload = measure_offdiagonal(rho, n, m)
    return emit(payload, config.output_format, config.out)


def cmd_circuit(config: RunConfig, args: Namespace) -> str:
    _require(config, "n", "m")
    num_qubits = args.qubits
    if num_qubits < 1:
        raise IndexOutOfRange(f"--qubits must be at least 1, got {num_qubits}")
    if num_qubits > settings.compile_max_qubits:
        raise QubitLimitExceeded(
            f"compiling {num_qubits} qubits exceeds the limit of {settings.compile_max_qubits}"
        )
    d = 2 ** num_qubits
    for label, index in (("n", config.n), ("m", config.m)):
        if not 0 <= index < d:
            raise IndexOutOfRange(f"--{label} {index} outside [0, {d}) for {num_qubits} qubits")
    setting = PhaseSetting(n=config.n, m=config.m, theta=config.theta or 0.0, phi=config.phi or 0.0)
    circuit = compile_measurement(num_qubits, setting)
    text = dump_circuit(circuit)

    if config.state_path:
        if num_qubits > settings.verify_max_qubits:
            raise QubitLimitExceeded(
                f"verifying {num_qubits} qubits exceeds the limit of {settings.verify_max_qubits}"
            )
        rho = _density(config)
        if rho.dim != 2 ** num_qubits:
            raise DimensionMismatch(f"state has d={rho.dim}, circuit needs d={2 ** num_qubits}")
        probability = simulate_circuit(rho, circuit).success_probability
        expectation = k_expectation(rho, setting)
        difference = abs(probability - expectation)
        if difference > settings.verify_tol:
            raise VerificationError(
                f"circuit probability {probability!r} differs from expectation "
                f"{expectation!r} by {difference:.3e}"
            )
        text += (
            f"# probability {probability!r}\n"
            f"# expectation {expectation!r}\n"
            f"# difference {difference!r}\n"
        )

    if config.out:
        with open(config.out, "w") as f:
            f.write(text)
    return text


def cmd_full(config: RunConfig, args: Namespace) -> str:
    rho = _density(config)
    reconstructed = reconstruct_full(rho)
    error = frobenius_distance(reconstructed, rho.matrix)
    if error > settings.full_reconstruction_tol:
        raise VerificationError(f"full reconstruction is off by {error:.3e} in Frobenius norm")
    rows = [
        {"n": n, "m": m, "re": float(reconstructed[n, m].real), "im": float(reconstructed[n, m].imag)}
        for n in range(rho.dim)
        for m in range(rho.dim)
    ]
    if config.output_format == "csv":
        return emit(pd.DataFrame(rows), "csv", config.out)
    return emit({"dim": rho.dim, "frobenius_error": error, "entries": rows}, "json", config.out)


def cmd_sweep(config: RunConfig, args: Namespace) -> str:
    _require(config, "n", "m", "seed")
    rho = _density(config)
    frame = convergence_sweep(rho, config.n, config.m, args.shot_grid, args.repeats, config.seed)
    return emit(frame, config.output_format, config.out)


def cmd_fidelity(config: RunConfig, args: Namespace) -> str:
    rho = _density(config)
    if args.circuit:
        if config.shots:
            raise SpecParseError("--circuit evaluates exact probabilities and takes no --shots")
        oracle = CircuitOracle(rho)
    elif config.shots:
        oracle = SampledOracle(rho, config.shots, config.seed)
    else:
        oracle = ExactOracle(rho)

    if args.kind == "ghz":
        num_qubits = int(round(math.log2(rho.dim)))
        if 2 ** num_qubits != rho.dim:
            raise DimensionMismatch(f"GHZ fidelity needs d = 2^N, got d={rho.dim}")
        payload = ghz_fidelity(oracle, num_qubits)
    elif args.kind == "bell":
        witness = bell_witness(oracle)
        payload = {"witness": witness, "entangled": witness < 0}
    else:
        payload = {"dim": rho.dim, "l1_coherence": l1_coherence(oracle)}
    return emit(payload, config.output_format, config.out)


def cmd_cv(config: RunConfig, args: Namespace) -> str:
    _require(config, "state_path", "n", "m")
    state = StateFileManager(config.state_path).load_grid()
    a, b = config.n, config.m
    estimate = cv_reconstruct(state, a, b)
    kernel = continuum_element(state, a, b)
    payload = {
        "a": a,
        "b": b,
        "x_a": float(state.positions[a]),
        "x_b": float(state.positions[b]),
        "dx": state.dx,
        "re": estimate.real_part,
        "im": estimate.imag_part,
        "continuum_re": kernel.real,
        "continuum_im": kernel.imag,
        "expectations": estimate.expectations,
    }
    return emit(payload, config.output_format, config.out)


COMMANDS = {
    "state": cmd_state,
    "measure": cmd_measure,
    "circuit": cmd_circuit,
    "full": cmd_full,
    "sweep": cmd_sweep,
    "fidelity": cmd_fidelity,
    "cv": cmd_cv,
}
