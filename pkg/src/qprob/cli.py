"""
Batch command-line interface.

Subcommands: ``spectral``, ``measure``, ``sample``, ``bloch`` and
``classical-embed``. All input and output uses the JSON formats of
:mod:`qprob.serialize`. Exit codes: 0 success, 2 input or contract error
(unreadable file, bad schema, dimension mismatch), 3 mathematical-validity
error (non-Hermitian observable, non-normalizable state, probability axioms
violated).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import classical, quantum, serialize, spectral
from .errors import DimensionError, NotHermitianError
from .linalg import DEFAULT_TOL, hermitian_asymmetry, norm
from .qubit import bloch
from .sampling import sample_distribution

log = logging.getLogger("qprob")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MATH = 3

RENORMALIZE_LIMIT = 1e-6


class CliError(Exception):
    def __init__(self, code, message):
        self.code = code
        super().__init__(message)


def _load(path, parse):
    try:
        return parse(serialize.load(path))
    except serialize.FormatError as exc:
        raise CliError(EXIT_INPUT, f"{path}: {exc}") from exc


def _observable(path, tol):
    a = _load(path, serialize.matrix_from_dict)
    asym = hermitian_asymmetry(a)
    if asym > tol:
        raise CliError(EXIT_MATH, f"{path}: {NotHermitianError(asym, tol)}")
    return a


def _state(path, n, tol):
    z = _load(path, serialize.vector_from_dict)
    if n is not None and z.shape[0] != n:
        raise CliError(EXIT_INPUT, f"dimension mismatch: observable is {n}x{n}, state has {z.shape[0]} entries")
    nz = norm(z)
    if nz <= tol:
        raise CliError(EXIT_MATH, f"{path}: zero vector cannot be normalized to a state")
    dev = abs(nz - 1.0)
    if dev > RENORMALIZE_LIMIT:
        raise CliError(EXIT_MATH, f"{path}: state norm {nz!r} is too far from 1 to renormalize")
    if dev > tol:
        log.warning("%s: state norm %r differs from 1 by %.2e; renormalizing", path, nz, dev)
    return quantum.PureState.normalized(z, tol)


def cmd_spectral(args):
    a = _observable(args.matrix, args.tol)
    return serialize.resolution_to_dict(spectral.spectral_resolution(a, args.tol))


def _measured(args):
    a = _observable(args.observable, args.tol)
    z = _state(args.state, a.shape[0], args.tol)
    return quantum.measure(a, z, args.tol)


def cmd_measure(args):
    return serialize.distribution_to_dict(_measured(args))


def cmd_sample(args):
    if args.n < 1:
        raise CliError(EXIT_INPUT, f"--n must be >= 1, got {args.n}")
    if not 0 <= args.seed < 2**64:
        raise CliError(EXIT_INPUT, f"--seed must be an unsigned 64-bit integer, got {args.seed}")
    report = sample_distribution(
        _measured(args),
        args.n,
        args.seed,
        observable_id=Path(args.observable).stem,
        state_id=Path(args.state).stem,
        tol=args.tol,
    )
    return report.to_dict()


def cmd_bloch(args):
    z = _state(args.state, None, args.tol)
    if z.dim != 2:
        raise CliError(EXIT_INPUT, f"{args.state}: Bloch coordinates need a 2-dimensional state, got {z.dim}")
    return serialize.bloch_to_dict(bloch(z, args.tol))


def cmd_classical_embed(args):
    labels, weights = _load(args.space, serialize.space_parts_from_dict)
    x = _load(args.variable, serialize.variable_from_dict)
    if len(x) != len(labels):
        raise CliError(EXIT_INPUT, f"variable has {len(x)} values but the space has {len(labels)} outcomes")
    report = classical.verify_axioms(weights)
    if not report:
        raise CliError(EXIT_MATH, f"{args.space}: axiom '{report.failed}' violated: {report.message}")
    space = classical.FiniteProbabilitySpace(labels, weights)
    classical_ev = classical.expected_value(space, x)
    m, rho = quantum.embed_classical(space, x)
    quantum_ev = quantum.evaluate(rho, m).real
    canon = classical.canonical_form(x)
    res = spectral.spectral_resolution(m, args.tol)
    return {
        "classical_expectation": classical_ev,
        "quantum_expectation": quantum_ev,
        "abs_difference": abs(classical_ev - quantum_ev),
        "canonical_values": list(canon.values),
        "spectral_values": [float(v) for v in res.values],
        "canonical_form": [
            {"value": v, "event": [labels[i] for i in sorted(e)]} for v, e in canon.terms
        ],
    }


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="absolute tolerance (default %(default)g)")
    common.add_argument("--output", default="stdout", help="output path, or 'stdout' (default)")

    parser = argparse.ArgumentParser(prog="qprob", description="Finite-dimensional quantum probability tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectral", parents=[common], help="spectral resolution of a Hermitian matrix")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("measure", parents=[common], help="Born distribution of an observable in a state")
    p.add_argument("observable")
    p.add_argument("state")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("sample", parents=[common], help="Monte-Carlo sample of measurement outcomes")
    p.add_argument("observable")
    p.add_argument("state")
    p.add_argument("--n", type=int, default=100_000, help="number of draws (default %(default)d)")
    p.add_argument("--seed", type=int, default=42, help="SplitMix64 seed (default %(default)d)")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("bloch", parents=[common], help="Bloch coordinates of a qubit state")
    p.add_argument("state")
    p.set_defaults(func=cmd_bloch)

    p = sub.add_parser("classical-embed", parents=[common], help="classical vs embedded quantum expectation")
    p.add_argument("space")
    p.add_argument("variable")
    p.set_defaults(func=cmd_classical_embed)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(format="qprob: %(levelname)s: %(message)s", level=logging.WARNING)
    args = build_parser().parse_args(argv)
    if not args.tol >= 0:
        print("qprob: error: --tol must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    try:
        doc = args.func(args)
    except CliError as exc:
        print(f"qprob: error: {exc}", file=sys.stderr)
        return exc.code
    except DimensionError as exc:
        print(f"qprob: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ArithmeticError, ValueError) as exc:
        print(f"qprob: error: {exc}", file=sys.stderr)
        return EXIT_MATH
    text = serialize.dumps(doc)
    if args.output in ("stdout", "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
