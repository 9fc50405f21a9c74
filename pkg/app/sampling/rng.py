"""Seeded random streams and binomial draws.

Generators are PCG64 seeded through numpy's SeedSequence; substreams are
addressed by spawn keys, so (seed, keys) always yields the same draws.
"""

import logging

import numpy as np
from scipy.stats import binom

from app.config import settings

logger = logging.getLogger(__name__)


def make_generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def derive_seed(seed: int, *keys: int) -> int:
    """64-bit seed of the substream (seed, keys...)."""
    sequence = np.random.SeedSequence(seed, spawn_key=tuple(int(k) for k in keys))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def draw_binomial(rng: np.random.Generator, shots: int, p: float) -> int:
    """Binomial(shots, p) by Bernoulli summation or, for large shot counts, inverse CDF."""
    p = min(max(float(p), 0.0), 1.0)
    if shots < settings.bernoulli_threshold:
        return int(np.count_nonzero(rng.random(shots) < p))
    if p == 0.0:
        return 0
    if p == 1.0:
        return shots
    logger.debug("inverse-CDF binomial draw: shots=%d p=%.6f", shots, p)
    u = 1.0 - rng.random()  # (0, 1]
    return int(binom.ppf(u, shots, p))
