"""Finite-dimensional quantum probability and its classical special case."""

from .classical import (
    CanonicalForm,
    FiniteProbabilitySpace,
    RandomVariable,
    canonical_form,
    characteristic,
    prob,
    spec,
    verify_axioms,
)
from .errors import (
    ConvergenceError,
    DimensionError,
    ImpossibleOutcomeError,
    InvalidSpaceError,
    InvalidStateError,
    NotHermitianError,
    NotOrthonormalError,
    NotProjectorError,
)
from .linalg import (
    DEFAULT_TOL,
    adjoint,
    commutator,
    identity,
    inner,
    is_hermitian,
    mat_add,
    mat_apply,
    mat_mul,
    norm,
    pauli,
    scalar_mul,
)
from .quantum import (
    MeasurementDistribution,
    PureState,
    QuantumEvent,
    StateFunctional,
    born_probability,
    collapse,
    embed_classical,
    evaluate,
    expected_value,
    measure,
    non_classicality_witness,
    pure_state_functional,
    star_axioms_check,
    verify_state,
)
from .qubit import BlochVector, bloch, classical_bits, from_bloch, spin_observable
from .rng import SplitMix64
from .sampling import SampleReport, sample, sample_distribution
from .spectral import (
    EigenPair,
    OrthogonalProjector,
    SpectralResolution,
    complement,
    eigh,
    is_projector,
    projector_from_basis,
    reconstruct,
    spectral_resolution,
)

__version__ = "0.1.0"
