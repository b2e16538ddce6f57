"""
Finite classical probability.

A :class:`FiniteProbabilitySpace` is an ordered, labelled finite set with
point weights. Events are sets of outcome *indices*. A
:class:`RandomVariable` is the vector of its values at each outcome. Level
sets and spectra use exact float equality because they are set-theoretic;
round the values first if fuzzy grouping is wanted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, InvalidSpaceError

MASS_TOL = 1e-12


def _frozen_floats(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64, copy=True)
    if arr.ndim != 1:
        raise DimensionError(f"expected a 1-d sequence of reals, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of :func:`verify_axioms`. Truthy iff every axiom holds."""

    ok: bool
    failed: str | None = None
    message: str = "all axioms hold"

    def __bool__(self):
        return self.ok


def verify_axioms(space_or_weights, tol: float = MASS_TOL, trials: int = 64, seed: int = 0) -> AxiomReport:
    """Check the axioms of a finite probability function.

    Checks, in order, ``bounds`` (each point mass in [0, 1]), ``empty``
    (P of the empty event is 0), ``normalization`` (P(Omega) = 1) and
    ``additivity`` (P of a disjoint union equals the sum, over ``trials``
    random partitions of Omega). The first failure is reported.

    Accepts either a space or a bare weight sequence, so weights that could
    never become a space can still be diagnosed.
    """
    if isinstance(space_or_weights, FiniteProbabilitySpace):
        w = space_or_weights.weights
    else:
        w = np.asarray(space_or_weights, dtype=np.float64)
    if w.ndim != 1 or w.size == 0:
        return AxiomReport(False, "nonempty", "Omega must be a nonempty finite set")
    if not np.all(np.isfinite(w)):
        return AxiomReport(False, "bounds", "weights must be finite")
    bad = np.flatnonzero((w < 0.0) | (w > 1.0))
    if bad.size:
        i = int(bad[0])
        return AxiomReport(False, "bounds", f"P(omega_{i}) = {w[i]!r} is outside [0, 1]")
    if _mass(w, ()) != 0.0:
        return AxiomReport(False, "empty", "P(empty set) != 0")
    total = _mass(w, range(w.size))
    if abs(total - 1.0) > tol:
        return AxiomReport(False, "normalization", f"P(Omega) = {total!r}, expected 1")
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        k = int(rng.integers(1, w.size + 1))
        blocks = rng.integers(0, k, size=w.size)
        parts = [np.flatnonzero(blocks == b) for b in range(k)]
        union = np.concatenate(parts)
        lhs = _mass(w, union)
        rhs = sum(_mass(w, p) for p in parts)
        if abs(lhs - rhs) > tol:
            return AxiomReport(
                False, "additivity", f"P(union) = {lhs!r} but sum of parts = {rhs!r}"
            )
    return AxiomReport(True)


def _mass(w, idx) -> float:
    # correctly rounded, so e.g. six masses of 1/6 add to exactly 1.0
    idx = np.asarray(list(idx), dtype=int)
    return math.fsum(w[idx].tolist()) if idx.size else 0.0


@dataclass(frozen=True)
class FiniteProbabilitySpace:
    """Finite nonempty Omega with point weights P(omega).

    The label order fixes the enumeration omega_1, ..., omega_n, which in turn
    fixes the basis used when embedding into matrices.
    """

    labels: tuple[str, ...]
    weights: np.ndarray = field(repr=False)

    def __init__(self, labels: Sequence[str], weights: Sequence[float]):
        labels = tuple(str(x) for x in labels)
        w = _frozen_floats(weights)
        if len(labels) != w.size:
            raise DimensionError(f"{len(labels)} labels but {w.size} weights")
        if len(set(labels)) != len(labels):
            raise ValueError("outcome labels must be distinct")
        report = verify_axioms(w)
        if not report:
            raise InvalidSpaceError(report)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "weights", w)

    @classmethod
    def uniform(cls, n_or_labels) -> "FiniteProbabilitySpace":
        labels = [str(i) for i in range(n_or_labels)] if isinstance(n_or_labels, int) else list(n_or_labels)
        return cls(labels, np.full(len(labels), 1.0 / len(labels)))

    @classmethod
    def dirac(cls, labels: Sequence[str], at) -> "FiniteProbabilitySpace":
        labels = list(labels)
        i = labels.index(at) if not isinstance(at, int) else at
        w = np.zeros(len(labels))
        w[i] = 1.0
        return cls(labels, w)

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self):
        return self.n

    def event(self, *labels: str) -> frozenset[int]:
        """Event given by outcome labels."""
        return frozenset(self.labels.index(x) for x in labels)

    @property
    def omega(self) -> frozenset[int]:
        return frozenset(range(self.n))


def _as_event(space: FiniteProbabilitySpace, e: Iterable[int]) -> frozenset[int]:
    e = frozenset(int(i) for i in e)
    out = [i for i in e if not 0 <= i < space.n]
    if out:
        raise IndexError(f"event indices {sorted(out)} outside [0, {space.n})")
    return e


def prob(space: FiniteProbabilitySpace, event: Iterable[int]) -> float:
    """P(E) = sum of point masses over the members of E."""
    e = _as_event(space, event)
    return _mass(space.weights, sorted(e))


@dataclass(frozen=True)
class RandomVariable:
    """Real function on Omega, stored as its values in enumeration order."""

    values: np.ndarray

    def __init__(self, values: Sequence[float]):
        v = _frozen_floats(values)
        if v.size == 0:
            raise ValueError("a random variable needs at least one value")
        if not np.all(np.isfinite(v)):
            raise ValueError("random variable values must be finite")
        object.__setattr__(self, "values", v)

    def __len__(self):
        return self.values.size

    def __eq__(self, other):
        if not isinstance(other, RandomVariable):
            return NotImplemented
        return self.values.shape == other.values.shape and bool(np.all(self.values == other.values))

    __hash__ = None

    def _check(self, other):
        if len(other) != len(self):
            raise DimensionError(f"random variables of lengths {len(self)} and {len(other)}")

    def __add__(self, other):
        if isinstance(other, RandomVariable):
            self._check(other)
            return RandomVariable(self.values + other.values)
        return RandomVariable(self.values + float(other))

    __radd__ = __add__

    def __mul__(self, other):
        # pointwise product; commutative
        if isinstance(other, RandomVariable):
            self._check(other)
            return RandomVariable(self.values * other.values)
        return RandomVariable(self.values * float(other))

    __rmul__ = __mul__

    def conj(self) -> "RandomVariable":
        return self


def expected_value(space: FiniteProbabilitySpace, x: RandomVariable | Sequence[float]) -> float:
    """<X> = sum_omega P(omega) X(omega)."""
    x = x if isinstance(x, RandomVariable) else RandomVariable(x)
    if len(x) != space.n:
        raise DimensionError(f"variable has {len(x)} values, space has {space.n} outcomes")
    return math.fsum((space.weights * x.values).tolist())


def characteristic(space: FiniteProbabilitySpace, event: Iterable[int]) -> RandomVariable:
    """Indicator function chi_E of an event."""
    e = _as_event(space, event)
    chi = np.zeros(space.n)
    chi[sorted(e)] = 1.0
    return RandomVariable(chi)


def level_set(x: RandomVariable, value: float) -> frozenset[int]:
    """X^{-1}(value), by exact comparison."""
    return frozenset(int(i) for i in np.flatnonzero(x.values == value))


def event_of(chi: RandomVariable) -> frozenset[int]:
    """The unique event whose indicator is ``chi``, i.e. chi^{-1}(1).

    Raises if ``chi`` is not idempotent (chi^2 != chi).
    """
    if not np.all(chi.values * chi.values == chi.values):
        raise ValueError("not a characteristic function: chi^2 != chi")
    return level_set(chi, 1.0)


@dataclass(frozen=True)
class CanonicalForm:
    """X = sum_j value_j chi_{event_j} over the distinct values of X."""

    n: int
    terms: tuple[tuple[float, frozenset[int]], ...]

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(v for v, _ in self.terms)

    @property
    def events(self) -> tuple[frozenset[int], ...]:
        return tuple(e for _, e in self.terms)

    def reconstruct(self) -> RandomVariable:
        out = np.empty(self.n)
        for value, e in self.terms:
            out[sorted(e)] = value
        return RandomVariable(out)

    def is_partition(self) -> bool:
        seen: set[int] = set()
        for e in self.events:
            if not e or seen & e:
                return False
            seen |= e
        return seen == set(range(self.n))


def canonical_form(x: RandomVariable | Sequence[float]) -> CanonicalForm:
    """Level-set decomposition of a simple function.

    >>> canonical_form([2.0, 2.0, 5.0]).terms
    ((2.0, frozenset({0, 1})), (5.0, frozenset({2})))
    """
    x = x if isinstance(x, RandomVariable) else RandomVariable(x)
    return CanonicalForm(
        len(x), tuple((float(v), level_set(x, v)) for v in np.unique(x.values))
    )


def spec(x: RandomVariable | Sequence[float]) -> tuple[float, ...]:
    """Spectrum of a random variable, which is its range, sorted."""
    x = x if isinstance(x, RandomVariable) else RandomVariable(x)
    return tuple(float(v) for v in np.unique(x.values))
