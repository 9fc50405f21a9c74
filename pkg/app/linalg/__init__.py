from .validation import DensityMatrix, ComplexMatrix, validate_density, frobenius_distance
from .states import (
    StateVector,
    from_statevector,
    random_density,
    ghz_state,
    plus_state,
    basis_state,
    maximally_mixed,
    dense_ghz_fidelity,
)

__all__ = [
    "DensityMatrix",
    "ComplexMatrix",
    "validate_density",
    "frobenius_distance",
    "StateVector",
    "from_statevector",
    "random_density",
    "ghz_state",
    "plus_state",
    "basis_state",
    "maximally_mixed",
    "dense_ghz_fidelity",
]
