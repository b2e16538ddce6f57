"""
Qubits: pure states of C^2 and their Bloch-sphere coordinates.

The point of S^2 attached to a state z is the vector of Pauli expectations
(<sigma_1>_z, <sigma_2>_z, <sigma_3>_z). It depends only on the phase class
of z, and distinct classes give distinct points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .classical import FiniteProbabilitySpace
from .errors import DimensionError
from .linalg import DEFAULT_TOL, check_tol, pauli
from .quantum import PureState, as_state, expected_value

BIT_LABELS = ("↑", "↓")


@dataclass(frozen=True)
class BlochVector:
    x: float
    y: float
    z: float

    def __array__(self, dtype=None, copy=None):
        return np.array([self.x, self.y, self.z], dtype=dtype)

    @property
    def length(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def __neg__(self):
        return BlochVector(-self.x, -self.y, -self.z)


def bloch(z, tol: float = DEFAULT_TOL) -> BlochVector:
    """Bloch coordinates of a qubit state.

    >>> bloch([1, 0])
    BlochVector(x=0.0, y=0.0, z=1.0)
    """
    z = as_state(z, tol)
    if z.dim != 2:
        raise DimensionError(f"Bloch coordinates need a state in C^2, got C^{z.dim}")
    return BlochVector(*(expected_value(pauli(k), z, tol) for k in (1, 2, 3)))


def from_bloch(b, tol: float = DEFAULT_TOL) -> PureState:
    """State (cos(theta/2), e^{i phi} sin(theta/2)) at polar angle theta and
    azimuth phi of ``b``.

    The first component is always real and nonnegative; this picks one
    representative per phase class.
    """
    tol = check_tol(tol)
    x, y, zc = (float(c) for c in np.asarray(b, dtype=float))
    r = math.sqrt(x * x + y * y + zc * zc)
    if abs(r - 1.0) > tol:
        raise ValueError(f"Bloch vector has length {r!r}, expected 1")
    theta = math.acos(max(-1.0, min(1.0, zc)))
    phi = math.atan2(y, x)
    v = np.array([math.cos(theta / 2), np.exp(1j * phi) * math.sin(theta / 2)])
    return PureState(v, tol)


def classical_bits(weights: Sequence[float] = (0.5, 0.5)) -> FiniteProbabilitySpace:
    """The classical two-outcome space {up, down}.

    Its pure states are the two Dirac weights (1, 0) and (0, 1), against a
    whole sphere of qubit states.
    """
    return FiniteProbabilitySpace(BIT_LABELS, weights)


def spin_observable(k: int) -> np.ndarray:
    """Spin component sigma_k / 2."""
    return 0.5 * pauli(k)
