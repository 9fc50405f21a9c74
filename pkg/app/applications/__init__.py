from .oracles import ElementOracle, ExactOracle, SampledOracle, CircuitOracle, as_oracle
from .reports import ghz_fidelity, l1_coherence, bell_witness

__all__ = [
    "ElementOracle",
    "ExactOracle",
    "SampledOracle",
    "CircuitOracle",
    "as_oracle",
    "ghz_fidelity",
    "l1_coherence",
    "bell_witness",
]
