"""
Spectral resolution of a Hermitian matrix
=========================================

A Hermitian matrix splits into distinct real eigenvalues, each carrying an
orthogonal projector onto its eigenspace.
"""

import numpy as np

from qprob import pauli, reconstruct, spectral_resolution

# a 3x3 observable with a doubly degenerate eigenvalue
a = np.diag([2.0, 2.0, -1.0]).astype(complex)
u = np.linalg.qr(np.random.default_rng(0).standard_normal((3, 3)))[0]
a = u @ a @ u.T

r = spectral_resolution(a)
for value, e in r.terms:
    print(f"lambda = {value:+.6f}   rank = {e.rank}")

# the projectors are mutually orthogonal and add up to the identity
p = r.projectors
print("max |E0 E1|     :", np.abs(p[0] @ p[1]).max())
print("max |sum E - I| :", np.abs(sum(p) - np.eye(3)).max())
print("max |A - sum lambda E| :", np.abs(a - reconstruct(r)).max())

# sigma_2 has complex entries but real spectrum
print("spectrum of sigma_2:", spectral_resolution(pauli(2)).values)
