"""
Monte-Carlo sampling of measurement outcomes.

Outcomes are drawn by inverse CDF over the Born distribution, with outcomes
in ascending eigenvalue order and uniforms from SplitMix64. The report for a
given (observable, state, n, seed) is therefore bit-for-bit reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL
from .quantum import MeasurementDistribution, measure
from .rng import uniform_block


@dataclass(frozen=True)
class SampleOutcome:
    value: float
    theoretical_prob: float
    count: int
    empirical_freq: float
    z_score: float | None


@dataclass(frozen=True)
class SampleReport:
    observable_id: str
    state_id: str
    n_samples: int
    seed: int
    outcomes: tuple[SampleOutcome, ...]

    def to_dict(self) -> dict:
        return {
            "observable_id": self.observable_id,
            "state_id": self.state_id,
            "n_samples": self.n_samples,
            "seed": self.seed,
            "outcomes": [
                {
                    "value": o.value + 0.0,
                    "theoretical_prob": o.theoretical_prob + 0.0,
                    "count": o.count,
                    "empirical_freq": o.empirical_freq,
                    "z_score": o.z_score,
                }
                for o in self.outcomes
            ],
        }


def inverse_cdf_counts(probs, n: int, seed: int) -> np.ndarray:
    """Counts per outcome over ``n`` inverse-CDF draws.

    Draw u lands on the first outcome j with u < cdf_j. The cdf is pinned to
    exactly 1 from the last outcome of positive probability onward, so
    zero-probability outcomes are never drawn and rounding in the cumulative
    sum cannot push a draw past the end.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"number of samples must be >= 1, got {n}")
    p = np.asarray(probs, dtype=float)
    if p.ndim != 1 or p.size == 0 or np.any(p < 0):
        raise ValueError("probabilities must be a nonempty nonnegative vector")
    positive = np.flatnonzero(p > 0)
    if positive.size == 0:
        raise ValueError("probabilities are all zero")
    cdf = np.cumsum(p)
    cdf[positive[-1]:] = 1.0
    u = uniform_block(seed, n)
    idx = np.searchsorted(cdf, u, side="right")
    return np.bincount(idx, minlength=p.size)


def z_score(freq: float, p: float, n: int) -> float:
    """(freq - p) * sqrt(n / (p (1 - p)))."""
    return (freq - p) * math.sqrt(n / (p * (1.0 - p)))


def sample_distribution(
    dist: MeasurementDistribution,
    n: int,
    seed: int,
    observable_id: str = "observable",
    state_id: str = "state",
    tol: float = DEFAULT_TOL,
) -> SampleReport:
    """Sample a measurement distribution and compare with the Born values.

    z-scores are omitted (None) for outcomes whose probability is within
    ``tol`` of 0 or 1, where the binomial variance vanishes.
    """
    probs = dist.probabilities
    counts = inverse_cdf_counts(probs, n, seed)
    outcomes = []
    for o, c in zip(dist.outcomes, counts):
        freq = int(c) / n
        p = o.probability
        z = z_score(freq, p, n) if tol < p < 1.0 - tol else None
        outcomes.append(SampleOutcome(o.value, p, int(c), freq, z))
    return SampleReport(observable_id, state_id, int(n), int(seed), tuple(outcomes))


def sample(a, z, n: int, seed: int, tol: float = DEFAULT_TOL, **ids) -> SampleReport:
    """Measure ``a`` in state ``z`` and sample ``n`` outcomes."""
    return sample_distribution(measure(a, z, tol), n, seed, tol=tol, **ids)
