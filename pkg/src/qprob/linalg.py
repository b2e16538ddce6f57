"""
Dense complex linear algebra on C^n and MAT(n; C).

Vectors are 1-d ``complex128`` arrays of length n and matrices are 2-d
``complex128`` arrays of shape (n, n). Every public function accepts anything
:func:`numpy.asarray` understands and routes it through :func:`as_vector` or
:func:`as_matrix`, which reject NaN/Inf and malformed shapes.

Comparisons use an absolute tolerance on the largest entry modulus
(``max_norm``), defaulting to :data:`DEFAULT_TOL`.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError

DEFAULT_TOL = 1e-9

_PAULI = {
    1: ((0, 1), (1, 0)),
    2: ((0, -1j), (1j, 0)),
    3: ((1, 0), (0, -1)),
}


def check_tol(tol: float) -> float:
    tol = float(tol)
    if not tol >= 0.0:
        raise ValueError(f"tolerance must be nonnegative, got {tol!r}")
    return tol


def as_vector(z) -> np.ndarray:
    """Return ``z`` as a finite complex vector of positive length."""
    v = np.asarray(z, dtype=np.complex128)
    if v.ndim != 1 or v.shape[0] < 1:
        raise DimensionError(f"expected a nonempty 1-d vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return v


def as_matrix(a) -> np.ndarray:
    """Return ``a`` as a finite square complex matrix."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionError(f"expected a square n x n matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def frozen(a: np.ndarray) -> np.ndarray:
    """Read-only copy of ``a``."""
    out = np.array(a, copy=True)
    out.setflags(write=False)
    return out


def _same_dim(*arrays):
    n = arrays[0].shape[0]
    for x in arrays[1:]:
        if x.shape[0] != n:
            raise DimensionError(
                f"incompatible operands: dimensions {[y.shape[0] for y in arrays]}"
            )


def inner(z, w) -> complex:
    """Inner product sum_j conj(z_j) w_j, conjugate-linear in ``z``.

    >>> inner([1, 1j], [1, 1])
    (1-1j)
    """
    z, w = as_vector(z), as_vector(w)
    _same_dim(z, w)
    return complex(np.vdot(z, w))


def norm(z) -> float:
    """Euclidean norm. Computed from |z_j|^2 so it is real by construction."""
    z = as_vector(z)
    return float(np.sqrt(np.sum(z.real * z.real + z.imag * z.imag)))


def max_norm(a) -> float:
    """Largest entry modulus of a vector or matrix."""
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def frobenius(a) -> float:
    a = np.asarray(a)
    return float(np.sqrt(np.sum(a.real * a.real + a.imag * a.imag)))


def adjoint(a) -> np.ndarray:
    """Conjugate transpose. Exact: ``adjoint(adjoint(a))`` equals ``a`` bitwise."""
    return as_matrix(a).conj().T.copy()


def mat_mul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    _same_dim(a, b)
    return a @ b


def mat_add(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    _same_dim(a, b)
    return a + b


def scalar_mul(lam, a) -> np.ndarray:
    lam = complex(lam)
    if not np.isfinite(lam):
        raise ValueError("scalar must be finite")
    return lam * as_matrix(a)


def mat_apply(a, z) -> np.ndarray:
    """Action of a matrix on a vector, (Az)_j = sum_k A_jk z_k."""
    a, z = as_matrix(a), as_vector(z)
    _same_dim(a, z)
    return a @ z


def outer(z, w=None) -> np.ndarray:
    """The rank-one matrix z w*; with one argument, z z*."""
    z = as_vector(z)
    w = z if w is None else as_vector(w)
    _same_dim(z, w)
    return np.outer(z, w.conj())


def commutator(a, b) -> np.ndarray:
    """AB - BA."""
    a, b = as_matrix(a), as_matrix(b)
    _same_dim(a, b)
    return a @ b - b @ a


def hermitian_asymmetry(a) -> float:
    """max |A_jk - conj(A_kj)|, the distance of ``a`` from HERM(n)."""
    a = as_matrix(a)
    return max_norm(a - a.conj().T)


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    return hermitian_asymmetry(a) <= check_tol(tol)


def identity(n: int) -> np.ndarray:
    n = int(n)
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    return np.eye(n, dtype=np.complex128)


def pauli(k: int) -> np.ndarray:
    """Pauli matrix sigma_k for k in {1, 2, 3}.

    >>> pauli(2)
    array([[ 0.+0.j, -0.-1.j],
           [ 0.+1.j,  0.+0.j]])
    """
    if k not in _PAULI:
        raise ValueError(f"Pauli index must be 1, 2 or 3, got {k!r}")
    return np.array(_PAULI[k], dtype=np.complex128)


def pauli_coefficients(a) -> np.ndarray:
    """Real coordinates (c0, c1, c2, c3) of a 2x2 Hermitian matrix in the
    basis {I, sigma_1, sigma_2, sigma_3}.

    Uses trace orthogonality, tr(s_j s_k) = 2 delta_jk. The imaginary parts
    vanish exactly when ``a`` is Hermitian, so they are dropped.
    """
    a = as_matrix(a)
    if a.shape != (2, 2):
        raise DimensionError(f"Pauli decomposition needs a 2x2 matrix, got {a.shape}")
    basis = [identity(2)] + [pauli(k) for k in (1, 2, 3)]
    return np.array([np.trace(s @ a).real / 2.0 for s in basis])


def from_pauli_coefficients(c) -> np.ndarray:
    c = np.asarray(c, dtype=float)
    return c[0] * identity(2) + sum(c[k] * pauli(k) for k in (1, 2, 3))


def random_hermitian(n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """(M + M*)/2 with M having standard complex Gaussian entries."""
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * (m + m.conj().T) / 2.0


def random_unit_vector(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unit vector in C^n."""
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / norm(v)
