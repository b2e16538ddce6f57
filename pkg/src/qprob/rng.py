"""
SplitMix64, the 64-bit generator used by the sampler.

State advances by the golden-ratio increment 0x9E3779B97F4A7C15 and each
output is the state passed through the finalizer

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

with all arithmetic mod 2^64. Uniform doubles in [0, 1) take the top 53
bits: (x >> 11) * 2^-53. Reference outputs for seed 1234567 begin
6457827717110365317, 3203168211198807973, 9817491932198370423.

The i-th output (0-based) depends only on seed + (i + 1) * increment, so a
block of draws is computed in one vectorized pass.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB
_TWO_M53 = 2.0**-53


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Scalar generator; see the module docstring for the algorithm."""

    def __init__(self, seed: int):
        if not 0 <= int(seed) <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.state = int(seed)

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return _mix(self.state)

    def random(self) -> float:
        return (self.next_u64() >> 11) * _TWO_M53


def u64_block(seed: int, n: int, start: int = 0) -> np.ndarray:
    """Outputs ``start`` .. ``start + n - 1`` of SplitMix64(seed) as uint64."""
    if not 0 <= int(seed) <= MASK64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    with np.errstate(over="ignore"):
        k = np.arange(start + 1, start + n + 1, dtype=np.uint64)
        z = np.uint64(seed) + k * np.uint64(GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
        return z ^ (z >> np.uint64(31))


def uniform_block(seed: int, n: int, start: int = 0) -> np.ndarray:
    """Uniform doubles in [0, 1) matching :meth:`SplitMix64.random`."""
    return (u64_block(seed, n, start) >> np.uint64(11)).astype(np.float64) * _TWO_M53
