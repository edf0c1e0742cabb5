"""Seeded random streams.

Every generator is a numpy ``Generator`` over PCG64. Independent substreams
are derived from a master seed with the SplitMix64 finalizer, so replication
``i`` of an experiment always sees the same draws no matter the order in
which replications run.
"""

from __future__ import annotations

import numpy as np

RngState = np.random.Generator

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    """SplitMix64 output function (Steele, Lea & Flood 2014)."""
    z = (x + _GOLDEN_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def make_rng(seed: int) -> RngState:
    """Generator for a master seed."""
    return np.random.Generator(np.random.PCG64(int(seed) & _MASK64))


def substream(seed: int, index: int) -> RngState:
    """Generator for substream ``index`` of master ``seed``."""
    mixed = splitmix64((int(seed) & _MASK64) ^ splitmix64(int(index) & _MASK64))
    return np.random.Generator(np.random.PCG64(mixed))


def as_rng(rng: RngState | int | None) -> RngState:
    """Accept a Generator, an integer seed, or None (fresh entropy)."""
    if isinstance(rng, np.random.Generator):
        return rng
    if rng is None:
        return np.random.default_rng()
    return make_rng(rng)
