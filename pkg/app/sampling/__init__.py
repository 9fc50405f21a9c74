from .rng import make_generator, derive_seed, draw_binomial
from .shots import (
    sample_expectation,
    sample_diagonal,
    binomial_stderr,
    estimate_element,
)
from .sweep import convergence_sweep, SWEEP_COLUMNS

__all__ = [
    "make_generator",
    "derive_seed",
    "draw_binomial",
    "sample_expectation",
    "sample_diagonal",
    "binomial_stderr",
    "estimate_element",
    "convergence_sweep",
    "SWEEP_COLUMNS",
]
