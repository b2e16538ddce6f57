"""
Quantum probability on C^n.

Events are orthogonal projectors, pure states are unit vectors up to a global
phase, and a state functional is represented by its trace form D, with
rho(M) = tr(D M). For a pure state z, D = z z*, and tr(D M) = <z, M z>.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import classical
from .errors import (
    DimensionError,
    ImpossibleOutcomeError,
    InvalidStateError,
    NotHermitianError,
)
from .linalg import (
    DEFAULT_TOL,
    adjoint,
    as_matrix,
    as_vector,
    check_tol,
    commutator,
    frozen,
    hermitian_asymmetry,
    inner,
    max_norm,
    norm,
    outer,
)
from .spectral import (
    OrthogonalProjector,
    as_projector,
    default_cluster_tol,
    eigh,
    spectral_resolution,
)

QuantumEvent = OrthogonalProjector


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit vector in C^n standing for its phase class.

    ``==`` compares phase classes: z == w iff |<z, w>| >= 1 - tol.
    """

    vector: np.ndarray
    tol: float = field(default=DEFAULT_TOL, repr=False)

    def __post_init__(self):
        v = as_vector(self.vector)
        dev = abs(norm(v) - 1.0)
        if dev > self.tol:
            raise InvalidStateError(f"state vector has norm {norm(v)!r}, expected 1")
        object.__setattr__(self, "vector", frozen(v))

    @classmethod
    def normalized(cls, z, tol: float = DEFAULT_TOL) -> "PureState":
        """State spanned by a nonzero vector ``z``."""
        z = as_vector(z)
        nz = norm(z)
        if nz <= tol:
            raise InvalidStateError("the zero vector does not define a state")
        return cls(z / nz, tol)

    @property
    def dim(self) -> int:
        return self.vector.shape[0]

    def equivalent(self, other, tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        w = other.vector if isinstance(other, PureState) else as_vector(other)
        if w.shape != self.vector.shape:
            return False
        return abs(inner(self.vector, w)) >= 1.0 - tol

    def __eq__(self, other):
        if not isinstance(other, PureState):
            return NotImplemented
        return self.equivalent(other)

    __hash__ = None

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.vector, dtype=dtype)


def as_state(z, tol: float = DEFAULT_TOL) -> PureState:
    return z if isinstance(z, PureState) else PureState(z, tol)


def _check_dims(e: OrthogonalProjector, z: PureState):
    if e.dim != z.dim:
        raise DimensionError(f"event acts on C^{e.dim}, state lives in C^{z.dim}")


def born_probability(e, z, tol: float = DEFAULT_TOL, clamp: bool = True) -> float:
    """Prob(E; z) = <z, E z> = ||E z||^2.

    Both expressions are evaluated; they must agree within ``tol`` and lie in
    [-tol, 1 + tol]. With ``clamp`` the result is then clipped into [0, 1].
    """
    tol = check_tol(tol)
    e, z = as_projector(e, tol), as_state(z, tol)
    _check_dims(e, z)
    ez = e.matrix @ z.vector
    quad = inner(z.vector, ez).real
    sq = norm(ez) ** 2
    if abs(quad - sq) > tol:
        raise ArithmeticError(f"<z, Ez> = {quad!r} disagrees with ||Ez||^2 = {sq!r}")
    if not -tol <= quad <= 1.0 + tol:
        raise ArithmeticError(f"probability {quad!r} outside [0, 1] beyond tolerance")
    return min(max(quad, 0.0), 1.0) if clamp else quad


def collapse(e, z, tol: float = DEFAULT_TOL) -> PureState:
    """Post-measurement state E z / ||E z||."""
    tol = check_tol(tol)
    e, z = as_projector(e, tol), as_state(z, tol)
    _check_dims(e, z)
    ez = e.matrix @ z.vector
    nz = norm(ez)
    if nz <= tol:
        raise ImpossibleOutcomeError(
            f"impossible outcome: ||E z|| = {nz:.3e}, the event has probability zero"
        )
    return PureState(ez / nz, tol)


@dataclass(frozen=True)
class Outcome:
    value: float
    probability: float
    post_state: PureState | None


@dataclass(frozen=True)
class MeasurementDistribution:
    """Born distribution of a Hermitian observable in a pure state.

    Outcomes are listed by ascending eigenvalue.
    """

    outcomes: tuple[Outcome, ...]

    @property
    def values(self) -> np.ndarray:
        return np.array([o.value for o in self.outcomes])

    @property
    def probabilities(self) -> np.ndarray:
        return np.array([o.probability for o in self.outcomes])

    def __len__(self):
        return len(self.outcomes)

    def __iter__(self):
        return iter(self.outcomes)


def measure(a, z, tol: float = DEFAULT_TOL, cluster_tol: float | None = None) -> MeasurementDistribution:
    """Measure the observable ``a`` in state ``z``.

    Each distinct eigenvalue lambda_j of ``a`` is returned with probability
    <z, E_j z> and, when that probability exceeds ``tol``, the collapsed
    state E_j z / ||E_j z||.
    """
    tol = check_tol(tol)
    z = as_state(z, tol)
    a = as_matrix(a)
    if a.shape[0] != z.dim:
        raise DimensionError(f"observable acts on C^{a.shape[0]}, state lives in C^{z.dim}")
    r = spectral_resolution(a, tol, cluster_tol)
    outcomes = []
    for value, e in r.terms:
        p = born_probability(e, z, tol)
        post = collapse(e, z, tol) if p > tol else None
        outcomes.append(Outcome(value, p, post))
    total = sum(o.probability for o in outcomes)
    if abs(total - 1.0) > tol:
        raise ArithmeticError(f"outcome probabilities sum to {total!r}")
    return MeasurementDistribution(tuple(outcomes))


def expected_value(a, z, tol: float = DEFAULT_TOL) -> float:
    """<A>_z = <z, A z> for Hermitian ``a``."""
    tol = check_tol(tol)
    z = as_state(z, tol)
    a = as_matrix(a)
    if a.shape[0] != z.dim:
        raise DimensionError(f"observable acts on C^{a.shape[0]}, state lives in C^{z.dim}")
    asym = hermitian_asymmetry(a)
    if asym > tol:
        raise NotHermitianError(asym, tol)
    val = inner(z.vector, a @ z.vector)
    if abs(val.imag) > tol * max(1.0, max_norm(a)):
        raise ArithmeticError(f"expectation has imaginary part {val.imag!r}")
    return val.real


@dataclass(frozen=True)
class StateFunctional:
    """Linear functional rho(M) = tr(D M) on MAT(n; C)."""

    form: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "form", frozen(as_matrix(self.form)))

    @classmethod
    def from_form(cls, d, tol: float = DEFAULT_TOL) -> "StateFunctional":
        """Wrap ``d`` after checking it is Hermitian, PSD and of unit trace."""
        check = verify_state(d, tol)
        if not check:
            raise InvalidStateError(check.message)
        return cls(d)

    @property
    def dim(self) -> int:
        return self.form.shape[0]

    def __call__(self, m) -> complex:
        return evaluate(self, m)


def evaluate(rho: StateFunctional, m) -> complex:
    m = as_matrix(m)
    if m.shape != rho.form.shape:
        raise DimensionError(f"functional on {rho.form.shape} matrices applied to {m.shape}")
    # tr(D M) without forming the product
    return complex(np.sum(rho.form * m.T))


def pure_state_functional(z) -> StateFunctional:
    """rho(M) = <z, M z>, with trace form z z*."""
    z = as_state(z)
    return StateFunctional(outer(z.vector))


@dataclass(frozen=True)
class StateCheck:
    """Result of :func:`verify_state`; truthy iff all checks passed."""

    ok: bool
    failed: str | None
    message: str
    min_eigenvalue: float | None = None
    trace: complex | None = None

    def __bool__(self):
        return self.ok


def verify_state(d, tol: float = DEFAULT_TOL, samples: int = 32, seed: int = 0) -> StateCheck:
    """Check that ``d`` is the trace form of a state.

    Tests, in order: ``hermitian`` (D = D*), ``positivity`` (smallest
    eigenvalue >= -tol), ``normalization`` (tr D = 1), then spot-checks
    rho(M* M) >= -tol on ``samples`` random complex Gaussian M
    (``positivity-sample``). Sample matrices are scaled to unit Frobenius
    norm so ``tol`` stays meaningful.
    """
    tol = check_tol(tol)
    d = as_matrix(d)
    asym = hermitian_asymmetry(d)
    if asym > tol:
        return StateCheck(False, "hermitian", f"D is not Hermitian (max asymmetry {asym:.3e})")
    values, _ = eigh(d, tol)
    lo = float(values[0])
    tr = complex(np.trace(d))
    if lo < -tol:
        return StateCheck(False, "positivity", f"D has negative eigenvalue {lo!r}", lo, tr)
    if abs(tr - 1.0) > tol:
        return StateCheck(False, "normalization", f"tr D = {tr.real!r}, expected 1", lo, tr)
    rho = StateFunctional(d)
    rng = np.random.default_rng(seed)
    n = d.shape[0]
    for _ in range(samples):
        m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        m /= np.linalg.norm(m)
        v = evaluate(rho, adjoint(m) @ m)
        if v.real < -tol or abs(v.imag) > tol:
            return StateCheck(False, "positivity-sample", f"rho(M*M) = {v!r} for a sampled M", lo, tr)
    return StateCheck(True, None, "D is a valid state", lo, tr)


def star_axioms_check(a, b, lam: complex, tol: float = DEFAULT_TOL) -> bool:
    """The four *-algebra identities for the adjoint, on the given operands."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"operands of shapes {a.shape} and {b.shape}")
    lam = complex(lam)
    scale = max(1.0, max_norm(a), max_norm(b), abs(lam))
    bound = tol * scale * scale
    checks = (
        adjoint(a + b) - (adjoint(a) + adjoint(b)),
        adjoint(lam * a) - lam.conjugate() * adjoint(a),
        adjoint(a @ b) - adjoint(b) @ adjoint(a),
        adjoint(adjoint(a)) - a,
    )
    return all(max_norm(c) <= bound for c in checks)


def embed_classical(space: classical.FiniteProbabilitySpace, x) -> tuple[np.ndarray, StateFunctional]:
    """Diagonal matrix diag(X) and the state with trace form diag(P).

    The outcome enumeration of ``space`` fixes the basis, and
    rho(diag(X)) equals the classical expectation of X.
    """
    x = x if isinstance(x, classical.RandomVariable) else classical.RandomVariable(x)
    if len(x) != space.n:
        raise DimensionError(f"variable has {len(x)} values, space has {space.n} outcomes")
    return np.diag(x.values).astype(np.complex128), StateFunctional(np.diag(space.weights).astype(np.complex128))


@dataclass(frozen=True)
class WitnessReport:
    commutator_norm: float
    prob_e: float
    prob_f: float
    prob_join: float
    non_boolean: bool


def join(e, f, tol: float = DEFAULT_TOL) -> OrthogonalProjector:
    """Projector onto Ran(E) + Ran(F).

    For projectors, Ran(E) + Ran(F) = Ran(E + F) because E + F is positive
    semidefinite, so the eigenvectors of E + F with nonzero eigenvalue span it.
    """
    e, f = as_projector(e, tol), as_projector(f, tol)
    s = e.matrix + f.matrix
    values, vectors = eigh(s, tol)
    b = vectors[:, values > default_cluster_tol(s, tol)]
    return OrthogonalProjector(frozen(b @ b.conj().T), b.shape[1])


def non_classicality_witness(z, e, f, tol: float = DEFAULT_TOL) -> WitnessReport:
    """Compare two events in a state and flag them if they do not commute.

    Commuting projectors behave like indicator functions of subsets. A pair
    with ||[E, F]||_max > tol cannot both be such indicators, so the event
    lattice containing them is not Boolean.
    """
    tol = check_tol(tol)
    z = as_state(z, tol)
    e, f = as_projector(e, tol), as_projector(f, tol)
    _check_dims(e, z)
    _check_dims(f, z)
    if z.dim < 2:
        raise DimensionError("non-commuting events need n >= 2")
    c = max_norm(commutator(e.matrix, f.matrix))
    return WitnessReport(
        commutator_norm=c,
        prob_e=born_probability(e, z, tol),
        prob_f=born_probability(f, z, tol),
        prob_join=born_probability(join(e, f, tol), z, tol),
        non_boolean=c > tol,
    )
