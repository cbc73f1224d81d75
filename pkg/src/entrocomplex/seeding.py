"""Deterministic seed derivation for ensemble sweeps.

Every (control index, realization index) work item gets its own seed derived
from the base seed with a splitmix64-style mixer, so parallel execution order
can never change the numbers.
"""

from __future__ import annotations

import numpy as np

_MASK = 0xFFFFFFFFFFFFFFFF


def splitmix64(x: int) -> int:
    """One splitmix64 scramble of a 64-bit word."""
    z = (x + 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return (z ^ (z >> 31)) & _MASK


def derive_seed(base_seed: int, *indices: int) -> int:
    """Mix a base seed with any number of nonnegative indices.

    The result depends on the order of the indices, is deterministic, and is
    well spread even for consecutive inputs.
    """
    h = splitmix64(base_seed & _MASK)
    for ix in indices:
        h = splitmix64(h ^ splitmix64(int(ix) & _MASK))
    return h


def as_rng(seed_or_rng) -> np.random.Generator:
    """Accept either an integer seed or an existing Generator."""
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)
