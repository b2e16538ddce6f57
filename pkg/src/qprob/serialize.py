"""
JSON wire formats.

Matrices are ``{"n": n, "rows": [[[re, im], ...], ...]}`` and vectors are
``{"n": n, "entries": [[re, im], ...]}``. The composite objects
(resolutions, distributions, Bloch vectors, spaces, random variables) are
built on top of these. Parsers raise :class:`FormatError` on any malformed
document, including wrong lengths and non-finite numbers.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .classical import FiniteProbabilitySpace, RandomVariable
from .quantum import MeasurementDistribution, PureState, StateFunctional
from .qubit import BlochVector
from .spectral import OrthogonalProjector, SpectralResolution, SpectralTerm


class FormatError(ValueError):
    """A JSON document does not follow the expected schema."""


def _num(x) -> float:
    # normalizes -0.0 so equal values serialize identically
    return float(x) + 0.0


def _parse_num(x, what) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise FormatError(f"{what}: expected a number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise FormatError(f"{what}: non-finite number")
    return x


def _parse_complex(pair, what) -> complex:
    if not isinstance(pair, list) or len(pair) != 2:
        raise FormatError(f"{what}: expected [re, im], got {pair!r}")
    return complex(_parse_num(pair[0], what), _parse_num(pair[1], what))


def _parse_n(doc, what) -> int:
    if not isinstance(doc, dict) or "n" not in doc:
        raise FormatError(f"{what}: expected an object with key 'n'")
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise FormatError(f"{what}: 'n' must be a positive integer, got {n!r}")
    return n


def vector_to_dict(z) -> dict:
    z = np.asarray(z, dtype=np.complex128)
    return {"n": int(z.shape[0]), "entries": [[_num(c.real), _num(c.imag)] for c in z]}


def vector_from_dict(doc) -> np.ndarray:
    n = _parse_n(doc, "vector")
    entries = doc.get("entries")
    if not isinstance(entries, list) or len(entries) != n:
        raise FormatError(f"vector: 'entries' must be a list of length n = {n}")
    return np.array([_parse_complex(c, f"vector entry {j}") for j, c in enumerate(entries)])


def matrix_to_dict(a) -> dict:
    a = np.asarray(a, dtype=np.complex128)
    return {
        "n": int(a.shape[0]),
        "rows": [[[_num(c.real), _num(c.imag)] for c in row] for row in a],
    }


def matrix_from_dict(doc) -> np.ndarray:
    n = _parse_n(doc, "matrix")
    rows = doc.get("rows")
    if not isinstance(rows, list) or len(rows) != n:
        raise FormatError(f"matrix: 'rows' must be a list of length n = {n}")
    out = np.empty((n, n), dtype=np.complex128)
    for j, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise FormatError(f"matrix: row {j} must have length n = {n}")
        for k, c in enumerate(row):
            out[j, k] = _parse_complex(c, f"matrix entry ({j}, {k})")
    return out


def resolution_to_dict(r: SpectralResolution) -> dict:
    return {
        "n": r.dim,
        "terms": [{"value": _num(t.value), "projector": matrix_to_dict(t.projector.matrix)} for t in r.terms],
    }


def resolution_from_dict(doc, tol: float = 1e-9) -> SpectralResolution:
    n = _parse_n(doc, "resolution")
    terms = doc.get("terms")
    if not isinstance(terms, list) or not terms:
        raise FormatError("resolution: 'terms' must be a nonempty list")
    parsed = []
    for t in terms:
        if not isinstance(t, dict):
            raise FormatError("resolution: each term must be an object")
        e = matrix_from_dict(t.get("projector"))
        if e.shape[0] != n:
            raise FormatError("resolution: projector dimension differs from n")
        parsed.append(SpectralTerm(_parse_num(t.get("value"), "term value"), e))
    try:
        return SpectralResolution.from_terms(parsed, tol)
    except ValueError as exc:
        raise FormatError(f"resolution: {exc}") from exc


def distribution_to_dict(d: MeasurementDistribution) -> dict:
    return {
        "outcomes": [
            {
                "value": _num(o.value),
                "prob": _num(o.probability),
                "post": None if o.post_state is None else vector_to_dict(o.post_state.vector),
            }
            for o in d.outcomes
        ]
    }


def state_to_dict(z: PureState) -> dict:
    return vector_to_dict(z.vector)


def functional_to_dict(rho: StateFunctional) -> dict:
    return matrix_to_dict(rho.form)


def bloch_to_dict(b: BlochVector) -> dict:
    return {"x": _num(b.x), "y": _num(b.y), "z": _num(b.z)}


def bloch_from_dict(doc) -> BlochVector:
    if not isinstance(doc, dict):
        raise FormatError("bloch: expected an object")
    return BlochVector(*(_parse_num(doc.get(k), f"bloch {k}") for k in ("x", "y", "z")))


def space_to_dict(space: FiniteProbabilitySpace) -> dict:
    return {"labels": list(space.labels), "weights": [_num(w) for w in space.weights]}


def space_parts_from_dict(doc) -> tuple[list[str], list[float]]:
    """Labels and weights of a space document, without checking the axioms."""
    if not isinstance(doc, dict):
        raise FormatError("space: expected an object")
    labels, weights = doc.get("labels"), doc.get("weights")
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise FormatError("space: 'labels' must be a list of strings")
    if not isinstance(weights, list) or len(weights) != len(labels):
        raise FormatError("space: 'weights' must be a list as long as 'labels'")
    if not labels:
        raise FormatError("space: Omega must be nonempty")
    if len(set(labels)) != len(labels):
        raise FormatError("space: labels must be distinct")
    return labels, [_parse_num(w, "space weight") for w in weights]


def space_from_dict(doc) -> FiniteProbabilitySpace:
    return FiniteProbabilitySpace(*space_parts_from_dict(doc))


def variable_to_dict(x: RandomVariable) -> dict:
    return {"values": [_num(v) for v in x.values]}


def variable_from_dict(doc) -> RandomVariable:
    if not isinstance(doc, dict) or not isinstance(doc.get("values"), list) or not doc["values"]:
        raise FormatError("variable: expected {'values': [...]} with at least one value")
    return RandomVariable([_parse_num(v, "variable value") for v in doc["values"]])


def _reject_constant(name):
    raise FormatError(f"non-finite literal {name} is not allowed")


def loads(text: str):
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc


def load(path) -> object:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    return loads(text)


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
