"""
SplitMix64, in scalar and vectorised form.

The k-th output (k = 1, 2, ...) for seed ``s`` is ``mix(s + k * GAMMA)`` with
all arithmetic modulo 2**64, so draw k can be computed without the ones
before it.  Constants are those of Steele, Lea and Flood (2014).
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

GAMMA = 0x9E3779B97F4A7C15
MUL1 = 0xBF58476D1CE4E5B9
MUL2 = 0x94D049BB133111EB
MASK = (1 << 64) - 1


def mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * MUL1) & MASK
    z = ((z ^ (z >> 27)) * MUL2) & MASK
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + GAMMA) & MASK
        return mix(self.state)


def draws(seed: int, count: int) -> np.ndarray:
    """The first ``count`` outputs for ``seed`` as a uint64 array."""
    k = np.arange(1, count + 1, dtype=np.uint64)
    z = k * np.uint64(GAMMA) + np.uint64(seed & MASK)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(MUL1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(MUL2)
    return z ^ (z >> np.uint64(31))


def bernoulli_threshold(p: Fraction) -> int:
    """floor(p * 2**64); a draw below it counts as success."""
    if not 0 <= p <= 1:
        raise ValueError(f"probability {p} outside [0, 1]")
    return (p.numerator << 64) // p.denominator


def bernoulli_mask(seed: int, count: int, p: Fraction) -> np.ndarray:
    """Independent Bernoulli(p) trials, trial k decided by draw k."""
    threshold = bernoulli_threshold(p)
    if threshold > MASK:
        return np.ones(count, dtype=bool)
    return draws(seed, count) < np.uint64(threshold)
