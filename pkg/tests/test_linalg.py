import numpy as np
import pytest
from hypothesis import given, strategies as st

from qprob.errors import DimensionError
from qprob.linalg import (
    adjoint,
    as_matrix,
    as_vector,
    commutator,
    from_pauli_coefficients,
    hermitian_asymmetry,
    identity,
    inner,
    is_hermitian,
    mat_add,
    mat_apply,
    mat_mul,
    max_norm,
    norm,
    pauli,
    pauli_coefficients,
    random_hermitian,
    scalar_mul,
)

from conftest import SQ, seeds, unit_vectors

S1, S2, S3 = pauli(1), pauli(2), pauli(3)
I2 = identity(2)


def test_inner_examples():
    assert inner([1, 0], [0, 1]) == 0
    assert inner([1j, 0], [1j, 0]) == 1
    # hand expansion: conj(1)*1 + conj(i)*1 = 1 - i
    assert inner([1, 1j], [1, 1]) == 1 - 1j


def test_inner_is_conjugate_linear_in_first_argument(rng):
    z, w = rng.standard_normal(4) + 1j * rng.standard_normal(4), rng.standard_normal(4)
    a = 0.3 - 2.0j
    assert np.isclose(inner(a * z, w), np.conj(a) * inner(z, w))
    assert np.isclose(inner(z, a * w), a * inner(z, w))


def test_inner_dimension_mismatch():
    with pytest.raises(DimensionError):
        inner([1, 0], [1, 0, 0])


def test_norm_examples():
    assert norm([3, 4j]) == 5.0
    assert norm([0, 0, 0]) == 0.0
    assert abs(norm([SQ, SQ]) - 1.0) <= 1e-15


@given(seeds)
def test_norm_squared_is_inner(seed):
    z = np.random.default_rng(seed).standard_normal(5) * (1 + 1j)
    assert abs(norm(z) ** 2 - inner(z, z).real) <= 1e-9
    assert inner(z, z).imag == 0.0


def test_constructors_reject_non_finite_and_bad_shapes():
    with pytest.raises(ValueError):
        as_vector([1.0, np.nan])
    with pytest.raises(ValueError):
        as_matrix([[1.0, np.inf], [0, 0]])
    with pytest.raises(DimensionError):
        as_matrix([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(DimensionError):
        as_vector([])


def test_adjoint_examples():
    assert np.array_equal(adjoint(S2), S2)
    assert np.array_equal(adjoint([[0, 1], [0, 0]]), [[0, 0], [1, 0]])
    assert np.array_equal(adjoint([[1j]]), [[-1j]])


@given(seeds, st.integers(1, 6))
def test_adjoint_defining_property_and_involution(seed, n):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    b = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    w = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    assert abs(inner(adjoint(a) @ z, w) - inner(z, a @ w)) <= 1e-9 * (1 + abs(inner(z, a @ w)))
    assert np.array_equal(adjoint(adjoint(a)), a)
    assert max_norm(adjoint(a @ b) - adjoint(b) @ adjoint(a)) <= 1e-9


# sigma_a sigma_b for all ordered pairs of distinct indices
PAULI_TABLE = [
    (1, 2, 1j, 3), (2, 1, -1j, 3),
    (2, 3, 1j, 1), (3, 2, -1j, 1),
    (3, 1, 1j, 2), (1, 3, -1j, 2),
]


@pytest.mark.parametrize("a,b,coef,c", PAULI_TABLE)
def test_pauli_products(a, b, coef, c):
    assert max_norm(mat_mul(pauli(a), pauli(b)) - coef * pauli(c)) <= 1e-12


@pytest.mark.parametrize("k", [1, 2, 3])
def test_pauli_squares(k):
    assert np.array_equal(mat_mul(pauli(k), pauli(k)), I2)


def test_pauli_and_identity_entries():
    assert np.array_equal(pauli(3), [[1, 0], [0, -1]])
    assert np.array_equal(pauli(2), [[0, -1j], [1j, 0]])
    assert np.array_equal(pauli(1), [[0, 1], [1, 0]])
    assert np.array_equal(identity(2), [[1, 0], [0, 1]])
    for bad in (0, 4, -1):
        with pytest.raises(ValueError):
            pauli(bad)
    with pytest.raises(ValueError):
        identity(0)


def test_matrix_algebra_examples(rng):
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    assert np.array_equal(mat_mul(identity(3), a), a)
    assert np.array_equal(mat_apply(S3, [1, 0]), [1, 0])
    assert np.array_equal(mat_add(S1, S3), S1 + S3)
    assert np.array_equal(scalar_mul(2j, S1), 2j * S1)
    with pytest.raises(DimensionError):
        mat_mul(S1, identity(3))
    with pytest.raises(DimensionError):
        mat_apply(S1, [1, 0, 0])


def test_matrix_product_is_not_commutative_but_associative(rng):
    a, b, c = (rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)) for _ in range(3))
    assert max_norm(mat_mul(a, b) - mat_mul(b, a)) > 1e-3
    assert max_norm(mat_mul(mat_mul(a, b), c) - mat_mul(a, mat_mul(b, c))) <= 1e-12


def test_commutator_examples(rng):
    # from s1 s2 = i s3 and s2 s1 = -i s3
    assert max_norm(commutator(S1, S2) - 2j * S3) <= 1e-15
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    assert np.array_equal(commutator(a, a), np.zeros((4, 4)))
    assert np.array_equal(commutator(I2, S1), np.zeros((2, 2)))


def test_is_hermitian_examples():
    assert is_hermitian(S1)
    assert not is_hermitian([[0, 1], [0, 0]])
    assert is_hermitian(np.diag([3.0, -2.5, 0.0]))
    assert hermitian_asymmetry([[0, 1], [0, 0]]) == 1.0
    assert is_hermitian([[0, 1], [1e-10, 0]], tol=1e-9) is False
    assert is_hermitian([[0, 1 + 1e-10], [1, 0]], tol=1e-9) is True


@given(seeds)
def test_pauli_basis_spans_herm2(seed):
    h = random_hermitian(2, np.random.default_rng(seed))
    c = pauli_coefficients(h)
    assert c.dtype == np.float64
    assert max_norm(from_pauli_coefficients(c) - h) <= 1e-9


@given(unit_vectors(4), unit_vectors(4), st.floats(0.1, 10))
def test_cauchy_schwarz(z, w, scale):
    assert abs(inner(scale * z, w)) <= norm(scale * z) * norm(w) + 1e-9
