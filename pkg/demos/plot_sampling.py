"""
Reproducible Monte-Carlo sampling
=================================

Outcomes are drawn by inverse CDF with a SplitMix64 stream, so a fixed seed
always gives the same counts.
"""

import numpy as np

from qprob import pauli, sample
from qprob.serialize import dumps

plus = np.array([1.0, 1.0]) / np.sqrt(2)

report = sample(pauli(3), plus, 100_000, seed=42, observable_id="sigma3", state_id="plus")
for o in report.outcomes:
    print(f"value {o.value:+.0f}: count {o.count}  freq {o.empirical_freq:.5f}"
          f"  (p = {o.theoretical_prob:.3f}, z = {o.z_score:+.3f})")

# same seed, same bytes
again = sample(pauli(3), plus, 100_000, seed=42, observable_id="sigma3", state_id="plus")
print("identical reports:", dumps(report.to_dict()) == dumps(again.to_dict()))

# the three-sigma band for n = 1e5 draws at p = 1/2
print("3 sigma band:", 3 * np.sqrt(0.25 / 1e5))
