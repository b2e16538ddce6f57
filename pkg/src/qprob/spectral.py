"""
Spectral theory of Hermitian matrices.

The eigensolver is a cyclic Jacobi iteration on complex Hermitian input. Its
eigenvalues are grouped into clusters of numerically equal values, and each
cluster yields an orthogonal projector onto the eigenspace. The resulting
:class:`SpectralResolution` is the decomposition A = sum_j lambda_j E_j with
distinct ascending lambda_j and mutually orthogonal E_j summing to I.

Throughout, ``||A||`` in a tolerance means the Frobenius norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import _jacobi
from .errors import (
    ConvergenceError,
    DimensionError,
    NotHermitianError,
    NotOrthonormalError,
    NotProjectorError,
)
from .linalg import (
    DEFAULT_TOL,
    as_matrix,
    as_vector,
    check_tol,
    frobenius,
    frozen,
    hermitian_asymmetry,
    identity,
    max_norm,
)

MAX_SWEEPS = 100


def _require_hermitian(a, tol):
    a = as_matrix(a)
    asym = hermitian_asymmetry(a)
    if asym > tol:
        raise NotHermitianError(asym, tol)
    # the kernel assumes exact symmetry
    return (a + a.conj().T) / 2.0


def fix_phase(v: np.ndarray) -> np.ndarray:
    """Rescale each column so its largest-modulus entry is real and positive."""
    v = np.array(v, dtype=np.complex128, copy=True)
    if v.ndim == 1:
        return fix_phase(v[:, None])[:, 0]
    rows = np.argmax(np.abs(v), axis=0)
    pivots = v[rows, np.arange(v.shape[1])]
    mags = np.abs(pivots)
    phases = np.where(mags > 0, pivots / np.where(mags > 0, mags, 1.0), 1.0)
    v /= phases
    v[rows, np.arange(v.shape[1])] = mags
    return v


def eigh(a, tol: float = DEFAULT_TOL):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    a : array_like, shape (n, n)
        Hermitian matrix (within ``tol``, entry-wise).
    tol : float
        Hermiticity tolerance; sweeps stop once the off-diagonal Frobenius
        norm is at most ``tol * ||a||``.

    Returns
    -------
    values : ndarray of float, shape (n,)
        Eigenvalues in ascending order.
    vectors : ndarray of complex, shape (n, n)
        Orthonormal eigenvectors as columns, ``vectors[:, j]`` belonging to
        ``values[j]``. Each column's largest-modulus entry is real positive.

    Raises
    ------
    NotHermitianError
        If ``a`` is not Hermitian within ``tol``.
    ConvergenceError
        If ``MAX_SWEEPS`` sweeps do not reach the stopping criterion.
    """
    tol = check_tol(tol)
    h = _require_hermitian(a, tol)
    values, vectors, sweeps, off = _jacobi.run(h, tol * frobenius(h), MAX_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(off, MAX_SWEEPS)
    order = np.argsort(values, kind="stable")
    return values[order], fix_phase(vectors[:, order])


@dataclass(frozen=True)
class EigenPair:
    """A distinct eigenvalue with an orthonormal basis of its eigenspace."""

    value: float
    vectors: np.ndarray  # columns

    @property
    def multiplicity(self) -> int:
        return self.vectors.shape[1]


def default_cluster_tol(a, tol: float = DEFAULT_TOL) -> float:
    """Gap above which neighbouring sorted eigenvalues count as distinct."""
    return max(1e-8, 1e3 * check_tol(tol)) * max(1.0, frobenius(a))


def _clusters(values, gap):
    groups = [[0]]
    for j in range(1, len(values)):
        if values[j] - values[j - 1] > gap:
            groups.append([j])
        else:
            groups[-1].append(j)
    return groups


def eigenspaces(a, tol: float = DEFAULT_TOL, cluster_tol: float | None = None) -> list[EigenPair]:
    """Distinct eigenvalues of ``a`` with orthonormal eigenspace bases."""
    values, vectors = eigh(a, tol)
    gap = default_cluster_tol(a, tol) if cluster_tol is None else check_tol(cluster_tol)
    return [
        EigenPair(float(np.mean(values[g])), frozen(vectors[:, g]))
        for g in _clusters(values, gap)
    ]


@dataclass(frozen=True)
class OrthogonalProjector:
    """A matrix E with E = E* = E^2, tagged with the dimension of its range."""

    matrix: np.ndarray
    rank: int

    @classmethod
    def from_matrix(cls, e, tol: float = DEFAULT_TOL, rank_tol: float | None = None):
        """Validate ``e`` as a projector; rank is taken as round(trace)."""
        e = as_matrix(e)
        if not is_projector(e, tol):
            raise NotProjectorError(
                f"matrix fails E = E* = E^2 within {tol:.1e} "
                f"(|E - E*| = {hermitian_asymmetry(e):.3e}, |E^2 - E| = {max_norm(e @ e - e):.3e})"
            )
        return cls(frozen(e), _trace_rank(e, tol if rank_tol is None else rank_tol))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)


def _trace_rank(e, rank_tol):
    tr = float(np.trace(e).real)
    r = int(round(tr))
    if abs(tr - r) > max(rank_tol, 1e-8):
        raise NotProjectorError(f"trace {tr!r} of projector is not an integer")
    return r


def as_projector(e, tol: float = DEFAULT_TOL) -> OrthogonalProjector:
    if isinstance(e, OrthogonalProjector):
        return e
    return OrthogonalProjector.from_matrix(e, tol)


def is_projector(a, tol: float = DEFAULT_TOL) -> bool:
    a = as_matrix(a)
    tol = check_tol(tol)
    return hermitian_asymmetry(a) <= tol and max_norm(a @ a - a) <= tol


def projector_from_basis(vectors: Sequence, tol: float = DEFAULT_TOL) -> OrthogonalProjector:
    """Orthogonal projector sum_i v_i v_i* onto the span of an orthonormal family.

    >>> projector_from_basis([[1, 0]]).matrix.real
    array([[1., 0.],
           [0., 0.]])
    """
    tol = check_tol(tol)
    vs = [as_vector(v) for v in vectors]
    if not vs:
        raise ValueError("need at least one basis vector")
    n = vs[0].shape[0]
    if any(v.shape[0] != n for v in vs):
        raise DimensionError("basis vectors have different dimensions")
    b = np.stack(vs, axis=1)
    gram = b.conj().T @ b
    dev = np.abs(gram - np.eye(len(vs)))
    if dev.max() > tol:
        i, j = np.unravel_index(np.argmax(dev), dev.shape)
        i, j = sorted((int(i), int(j)))
        raise NotOrthonormalError(i, j, complex(gram[i, j]))
    return OrthogonalProjector(frozen(b @ b.conj().T), len(vs))


def range_basis(e, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis (columns) of Ran(E) for a projector E."""
    e = as_projector(e, tol)
    values, vectors = eigh(e.matrix, tol)
    return vectors[:, values > 0.5]


def complement(e) -> OrthogonalProjector:
    """Projector I - E onto the orthogonal complement of Ran(E)."""
    e = as_projector(e)
    return OrthogonalProjector(frozen(identity(e.dim) - e.matrix), e.dim - e.rank)


class SpectralTerm(NamedTuple):
    value: float
    projector: OrthogonalProjector


@dataclass(frozen=True)
class SpectralResolution:
    """A = sum_j value_j * projector_j with strictly increasing values."""

    dim: int
    terms: tuple[SpectralTerm, ...]

    @classmethod
    def from_terms(cls, terms, tol: float = DEFAULT_TOL) -> "SpectralResolution":
        """Build from (value, projector) pairs, sorting by value and validating."""
        terms = [SpectralTerm(float(v), as_projector(e, tol)) for v, e in terms]
        if not terms:
            raise ValueError("a spectral resolution needs at least one term")
        terms.sort(key=lambda t: t.value)
        r = cls(terms[0].projector.dim, tuple(terms))
        r.validate(tol)
        return r

    @property
    def values(self) -> np.ndarray:
        return np.array([t.value for t in self.terms])

    @property
    def projectors(self) -> list[np.ndarray]:
        return [t.projector.matrix for t in self.terms]

    @property
    def multiplicities(self) -> list[int]:
        return [t.projector.rank for t in self.terms]

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def validate(self, tol: float = DEFAULT_TOL) -> None:
        """Raise ValueError unless every structural invariant holds within ``tol``."""
        n = self.dim
        vals = self.values
        if np.any(np.diff(vals) <= 0):
            raise ValueError(f"values are not strictly increasing: {vals.tolist()}")
        if any(t.projector.dim != n for t in self.terms):
            raise DimensionError("projectors of different dimensions")
        if sum(self.multiplicities) != n:
            raise ValueError(f"ranks {self.multiplicities} do not add up to n = {n}")
        ps = self.projectors
        for i in range(len(ps)):
            for j in range(i + 1, len(ps)):
                if max_norm(ps[i] @ ps[j]) > tol:
                    raise ValueError(f"projectors {i} and {j} are not mutually orthogonal")
        if max_norm(sum(ps) - identity(n)) > tol:
            raise ValueError("projectors do not sum to the identity")


def spectral_resolution(a, tol: float = DEFAULT_TOL, cluster_tol: float | None = None) -> SpectralResolution:
    """The spectral resolution of a Hermitian matrix.

    Sorted eigenvalues whose gap is at most ``cluster_tol`` (default
    :func:`default_cluster_tol`) are merged into one distinct value, reported
    as the cluster mean. Each projector is the sum of v v* over the cluster's
    eigenvectors, so it does not depend on the eigenvectors' phases.

    >>> r = spectral_resolution([[1, 0], [0, -1]])
    >>> r.values
    array([-1.,  1.])
    """
    a = as_matrix(a)
    tol = check_tol(tol)
    values, vectors = eigh(a, tol)
    gap = default_cluster_tol(a, tol) if cluster_tol is None else check_tol(cluster_tol)
    terms = []
    for g in _clusters(values, gap):
        b = vectors[:, g]
        e = b @ b.conj().T
        rank = _trace_rank(e, gap)
        if rank != len(g):
            raise ArithmeticError(f"eigenspace projector trace {np.trace(e).real} != {len(g)}")
        terms.append(SpectralTerm(float(np.mean(values[g])), OrthogonalProjector(frozen(e), rank)))
    return SpectralResolution(a.shape[0], tuple(terms))


def reconstruct(r: SpectralResolution) -> np.ndarray:
    """sum_j lambda_j E_j, a Hermitian matrix."""
    out = np.zeros((r.dim, r.dim), dtype=np.complex128)
    for value, e in r.terms:
        out += value * e.matrix
    # cancels rounding asymmetry so the result is exactly self-adjoint
    return (out + out.conj().T) / 2.0


def char_poly_at(a, lam: complex) -> complex:
    """det(lam I - A) by cofactor expansion, for n <= 3.

    Only meant as an independent check on computed eigenvalues; it is never
    used to find them.
    """
    a = as_matrix(a)
    n = a.shape[0]
    m = lam * identity(n) - a
    if n == 1:
        return complex(m[0, 0])
    if n == 2:
        return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    if n == 3:
        return complex(
            m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
            - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
            + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
        )
    raise DimensionError("characteristic polynomial oracle supports n <= 3 only")
