from .gates import gate_unitary, circuit_unitary
from .compiler import compile_phase_shift, compile_measurement, compile_diagonal_readout
from .simulator import simulate_circuit, SimulationResult
from .textio import dump_circuit, parse_circuit

__all__ = [
    "gate_unitary",
    "circuit_unitary",
    "compile_phase_shift",
    "compile_measurement",
    "compile_diagonal_readout",
    "simulate_circuit",
    "SimulationResult",
    "dump_circuit",
    "parse_circuit",
]
