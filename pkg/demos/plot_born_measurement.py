"""
Measuring an observable
=======================

The Born rule turns an observable and a unit vector into a probability
distribution over eigenvalues, with a post-measurement state per outcome.
"""

import numpy as np

from qprob import expected_value, measure, pauli

sq = 1 / np.sqrt(2)
state = np.array([sq, 1j * sq])  # +1 eigenvector of sigma_2

for k in (1, 2, 3):
    d = measure(pauli(k), state)
    print(f"sigma_{k}:")
    for o in d.outcomes:
        post = None if o.post_state is None else np.round(o.post_state.vector, 3)
        print(f"    value {o.value:+.0f}  p = {o.probability:.6f}  post = {post}")
    # <z, A z> agrees with the mean of the distribution
    print(f"    <A> = {expected_value(pauli(k), state):+.6f}"
          f"   sum lambda p = {d.values @ d.probabilities:+.6f}")
