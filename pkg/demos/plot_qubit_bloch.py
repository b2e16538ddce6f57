"""
Qubits and the Bloch sphere
===========================

Unit vectors in C^2, up to phase, correspond to points on the unit sphere.
Antipodal points are orthogonal states, and the spin-1/2 probabilities are
read off the coordinates.
"""

import numpy as np

from qprob import BlochVector, bloch, from_bloch, measure, non_classicality_witness, pauli, spin_observable
from qprob.linalg import identity, inner

b = BlochVector(0.6, 0.0, 0.8)
z = from_bloch(b)
print("state   :", np.round(z.vector, 4))
print("back    :", bloch(z))

# a global phase does not move the point
print("phase   :", bloch(np.exp(0.7j) * z.vector))

# opposite points are orthogonal
print("<z, -z> :", abs(inner(z.vector, from_bloch(-b).vector)))

# spin along x: P(+1/2) = (1 + b_x) / 2
d = measure(spin_observable(1), z)
print("spin x  :", {float(v): round(float(p), 6) for v, p in zip(d.values, d.probabilities)}, " expected", (1 + b.x) / 2)

# two projectors that do not commute
i2 = identity(2)
w = non_classicality_witness([1, 0], (i2 + pauli(3)) / 2, (i2 + pauli(1)) / 2)
print("||[E,F]|| =", w.commutator_norm, " P(E or F) =", w.prob_join, " P(E) + P(F) =", w.prob_e + w.prob_f)
