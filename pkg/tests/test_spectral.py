import numpy as np
import pytest
from hypothesis import given, strategies as st

from qprob import spectral
from qprob.errors import ConvergenceError, NotHermitianError, NotOrthonormalError, NotProjectorError
from qprob.linalg import identity, max_norm, pauli, random_hermitian
from qprob.spectral import (
    OrthogonalProjector,
    SpectralResolution,
    char_poly_at,
    complement,
    eigenspaces,
    eigh,
    is_projector,
    projector_from_basis,
    range_basis,
    reconstruct,
    spectral_resolution,
)

from conftest import SQ, hermitian_matrices, seeds

S1, S2, S3 = pauli(1), pauli(2), pauli(3)
E_PLUS = 0.5 * np.array([[1, 1], [1, 1]])
E_MINUS = 0.5 * np.array([[1, -1], [-1, 1]])


def closed_form_2x2(h):
    """Eigenvalues of [[a, b], [b*, d]] from the characteristic quadratic."""
    a, d, b = h[0, 0].real, h[1, 1].real, h[0, 1]
    mid, rad = (a + d) / 2, np.hypot((a - d) / 2, abs(b))
    return np.array([mid - rad, mid + rad])


def assert_eigh_post(a, values, vectors, eps=1e-9):
    n = a.shape[0]
    assert np.all(np.diff(values) >= 0)
    assert max_norm(vectors.conj().T @ vectors - np.eye(n)) <= eps
    scale = max(1.0, np.linalg.norm(a))
    for j in range(n):
        assert np.linalg.norm(a @ vectors[:, j] - values[j] * vectors[:, j]) <= 10 * eps * scale


def test_eigh_sigma3():
    w, v = eigh(S3)
    assert np.array_equal(w, [-1.0, 1.0])
    assert np.array_equal(v, [[0, 1], [1, 0]])


def test_eigh_sigma1_matches_hand_computation():
    w, v = eigh(S1)
    assert np.allclose(w, closed_form_2x2(S1), atol=1e-15)
    assert np.allclose(w, [-1, 1], atol=1e-15)
    # up to phase
    assert abs(abs(np.vdot([SQ, -SQ], v[:, 0])) - 1) <= 1e-12
    assert abs(abs(np.vdot([SQ, SQ], v[:, 1])) - 1) <= 1e-12


def test_eigh_identity3():
    w, v = eigh(identity(3))
    assert np.array_equal(w, [1.0, 1.0, 1.0])
    assert max_norm(v.conj().T @ v - np.eye(3)) <= 1e-15


def test_eigh_rejects_non_hermitian():
    with pytest.raises(NotHermitianError) as info:
        eigh([[0, 1], [0, 0]])
    assert info.value.asymmetry == 1.0


def test_eigh_reports_non_convergence(monkeypatch):
    monkeypatch.setattr(spectral, "MAX_SWEEPS", 1)
    a = random_hermitian(6, np.random.default_rng(1))
    with pytest.raises(ConvergenceError) as info:
        eigh(a)
    assert info.value.off_norm > 0
    assert info.value.sweeps == 1


def test_eigh_phase_convention(rng):
    _, v = eigh(random_hermitian(5, rng))
    for j in range(5):
        k = np.argmax(np.abs(v[:, j]))
        assert v[k, j].imag == 0.0 and v[k, j].real > 0


@given(seeds)
def test_eigh_2x2_against_closed_form(seed):
    h = random_hermitian(2, np.random.default_rng(seed))
    w, v = eigh(h)
    assert np.allclose(w, closed_form_2x2(h), atol=1e-12)
    assert_eigh_post(h, w, v)


@given(seeds, st.integers(1, 3))
def test_eigenvalues_are_roots_of_characteristic_polynomial(seed, n):
    h = random_hermitian(n, np.random.default_rng(seed))
    w, _ = eigh(h)
    scale = max(1.0, np.abs(w).max()) ** n
    for lam in w:
        assert abs(char_poly_at(h, lam)) <= 1e-10 * scale


@given(hermitian_matrices(max_n=12))
def test_eigh_against_lapack(a):
    w, v = eigh(a)
    assert np.allclose(w, np.linalg.eigvalsh(a), atol=1e-12 * max(1.0, np.linalg.norm(a)))
    assert_eigh_post(a, w, v)
    assert w.dtype == np.float64


def test_eigh_zero_tolerance_converges_exactly(rng):
    a = random_hermitian(7, rng)
    w, v = eigh(a, tol=0.0)
    assert_eigh_post(a, w, v, eps=1e-12)


def test_spectral_resolution_sigma3():
    r = spectral_resolution(S3)
    assert r.values.tolist() == [-1.0, 1.0]
    assert np.array_equal(r.projectors[0], np.diag([0, 1]))
    assert np.array_equal(r.projectors[1], np.diag([1, 0]))
    assert r.multiplicities == [1, 1]


def test_spectral_resolution_sigma1():
    r = spectral_resolution(S1)
    assert np.allclose(r.values, [-1, 1], atol=1e-15)
    e_minus, e_plus = r.projectors
    assert max_norm(e_minus - E_MINUS) <= 1e-12
    assert max_norm(e_plus - E_PLUS) <= 1e-12
    # the hand projectors are idempotent and resolve sigma_1
    assert max_norm(E_PLUS @ E_PLUS - E_PLUS) == 0
    assert max_norm(E_PLUS - E_MINUS - S1) == 0


def test_spectral_resolution_identity():
    r = spectral_resolution(identity(2))
    assert len(r) == 1
    assert r.values.tolist() == [1.0]
    assert np.array_equal(r.projectors[0], identity(2))


def test_spectral_resolution_of_degenerate_spectrum(rng):
    q, _ = np.linalg.qr(rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5)))
    a = q @ np.diag([2.0, -1.0, 2.0, 2.0, -1.0]) @ q.conj().T
    r = spectral_resolution(a)
    assert np.allclose(r.values, [-1.0, 2.0], atol=1e-12)
    assert r.multiplicities == [2, 3]
    spaces = eigenspaces(a)
    assert [s.multiplicity for s in spaces] == [2, 3]


def test_cluster_tolerance_is_overridable():
    # default gap is max(1e-8, 1e3 * 1e-9) * max(1, ||A||) = 1e-6 * sqrt(1 + 1e-10)
    a = np.diag([0.0, 1e-5, 1.0])
    assert len(spectral_resolution(a)) == 3
    merged = spectral_resolution(a, cluster_tol=1e-4)
    assert merged.multiplicities == [2, 1]
    assert merged.values[0] == 5e-6
    assert len(spectral_resolution(np.diag([0.0, 5e-7, 1.0]))) == 2


def check_resolution_invariants(a, r, eps=1e-9):
    n = a.shape[0]
    assert np.all(np.diff(r.values) > 0)
    ps = r.projectors
    for i in range(len(ps)):
        assert is_projector(ps[i], eps)
        for j in range(len(ps)):
            if i != j:
                assert max_norm(ps[i] @ ps[j]) <= eps
    assert max_norm(sum(ps) - identity(n)) <= eps
    assert sum(r.multiplicities) == n
    assert max_norm(a - reconstruct(r)) <= 10 * eps * max(1.0, np.linalg.norm(a))


@given(hermitian_matrices(max_n=10))
def test_spectral_resolution_invariants(a):
    r = spectral_resolution(a)
    check_resolution_invariants(a, r)
    r.validate()


@given(hermitian_matrices(max_n=6))
def test_resolution_does_not_depend_on_phases(a):
    # a unitary diagonal similarity changes eigenvector phases inside the solver
    d = np.exp(1j * np.linspace(0.3, 2.0, a.shape[0]))
    r1 = spectral_resolution(a)
    r2 = spectral_resolution(a)
    assert np.array_equal(r1.values, r2.values)
    for p, q in zip(r1.projectors, r2.projectors):
        assert np.array_equal(p, q)
    r3 = spectral_resolution(np.conj(d)[:, None] * a * d[None, :])
    assert np.allclose(r1.values, r3.values, atol=1e-9 * max(1, np.linalg.norm(a)))
    for p, q in zip(r1.projectors, r3.projectors):
        assert max_norm(np.conj(d)[:, None] * p * d[None, :] - q) <= 1e-9


def test_reconstruct_examples():
    assert max_norm(reconstruct(spectral_resolution(S2)) - S2) <= 1e-12
    r = SpectralResolution.from_terms([(5.0, identity(3))])
    assert np.array_equal(reconstruct(r), 5 * identity(3))
    e1 = np.diag([1.0, 0.0])
    r = SpectralResolution.from_terms([(1.0, e1), (0.0, np.diag([0.0, 1.0]))])
    assert r.values.tolist() == [0.0, 1.0]
    assert np.array_equal(reconstruct(r), e1)


def test_from_terms_rejects_invalid_resolutions():
    with pytest.raises(ValueError):
        SpectralResolution.from_terms([(1.0, np.diag([1.0, 0.0])), (1.0, np.diag([0.0, 1.0]))])
    with pytest.raises(ValueError):
        SpectralResolution.from_terms([(1.0, np.diag([1.0, 0.0]))])
    with pytest.raises(ValueError):
        SpectralResolution.from_terms([(0.0, E_PLUS), (1.0, np.diag([1.0, 0.0]))])


def test_projector_from_basis_examples():
    assert np.array_equal(projector_from_basis([[1, 0]]).matrix, np.diag([1, 0]))
    p = projector_from_basis([[SQ, SQ]])
    assert max_norm(p.matrix - E_PLUS) <= 1e-15
    assert p.rank == 1
    e = projector_from_basis(list(np.eye(3)))
    assert np.array_equal(e.matrix, identity(3))
    assert e.rank == 3


def test_projector_from_basis_names_offending_pair():
    with pytest.raises(NotOrthonormalError) as info:
        projector_from_basis([[1, 0, 0], [0, 1, 0], [SQ, 0, SQ]])
    assert info.value.pair == (0, 2)
    with pytest.raises(NotOrthonormalError) as info:
        projector_from_basis([[1, 0], [0, 2]])
    assert info.value.pair == (1, 1)


def test_is_projector_examples():
    assert is_projector(E_PLUS)
    assert not is_projector(S1)
    assert is_projector(np.zeros((3, 3)))
    assert not is_projector([[1, 1], [0, 0]])  # idempotent but not self-adjoint


def test_complement_examples():
    assert np.array_equal(complement(np.diag([1.0, 0.0])).matrix, np.diag([0, 1]))
    c = complement(identity(2))
    assert np.array_equal(c.matrix, np.zeros((2, 2)))
    assert c.rank == 0
    assert max_norm(complement(E_PLUS).matrix - E_MINUS) == 0


def test_orthogonal_projector_validation():
    with pytest.raises(NotProjectorError):
        OrthogonalProjector.from_matrix(S1)
    p = OrthogonalProjector.from_matrix(E_PLUS)
    assert p.rank == 1 and not p.matrix.flags.writeable


@given(seeds, st.integers(1, 8), st.data())
def test_projector_subspace_bijection(seed, n, data):
    rng = np.random.default_rng(seed)
    k = data.draw(st.integers(1, n))
    q, _ = np.linalg.qr(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    e = projector_from_basis(list(q[:, :k].T))
    basis = range_basis(e)
    assert basis.shape == (n, k)
    again = projector_from_basis(list(basis.T))
    assert max_norm(again.matrix - e.matrix) <= 1e-9
    c = complement(e)
    assert c.rank + e.rank == n
    assert max_norm(c.matrix @ e.matrix) <= 1e-9
