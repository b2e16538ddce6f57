"""Exception types raised across the package."""


class DimensionError(ValueError):
    """Operands have incompatible shapes or dimensions."""


class NotHermitianError(ValueError):
    """A matrix that must be self-adjoint is not, within tolerance."""

    def __init__(self, asymmetry, tol):
        self.asymmetry = float(asymmetry)
        self.tol = float(tol)
        super().__init__(
            f"matrix is not Hermitian: max |A - A*| entry = {self.asymmetry:.3e} "
            f"exceeds tolerance {self.tol:.3e}"
        )


class ConvergenceError(ArithmeticError):
    """The Jacobi eigensolver hit its sweep cap."""

    def __init__(self, off_norm, sweeps):
        self.off_norm = float(off_norm)
        self.sweeps = int(sweeps)
        super().__init__(
            f"Jacobi iteration did not converge after {self.sweeps} sweeps "
            f"(off-diagonal Frobenius norm {self.off_norm:.3e})"
        )


class NotOrthonormalError(ValueError):
    """A family of vectors that should be orthonormal is not."""

    def __init__(self, i, j, value):
        self.pair = (i, j)
        self.value = value
        if i == j:
            msg = f"vector {i} has squared norm {abs(value):.6g}, expected 1"
        else:
            msg = f"vectors {i} and {j} are not orthogonal: |<v_i, v_j>| = {abs(value):.3e}"
        super().__init__(msg)


class NotProjectorError(ValueError):
    """A matrix used as an event fails E = E* = E^2."""


class ImpossibleOutcomeError(ValueError):
    """Collapse onto an event that has zero probability in the given state."""


class InvalidStateError(ValueError):
    """A vector or trace-form matrix does not describe a valid state."""


class InvalidSpaceError(ValueError):
    """Weights of a finite probability space violate the axioms."""

    def __init__(self, report):
        self.report = report
        super().__init__(report.message)
