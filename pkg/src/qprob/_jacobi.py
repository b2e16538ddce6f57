"""Cyclic complex Jacobi sweeps, compiled with numba."""

import math

import numpy as np
from numba import njit


@njit(cache=True)
def _off_norm(a):
    n = a.shape[0]
    s = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            x = a[p, q]
            s += x.real * x.real + x.imag * x.imag
    return math.sqrt(2.0 * s)


@njit(cache=True)
def jacobi_sweeps(a, v, threshold, max_sweeps):
    """Diagonalize Hermitian ``a`` in place, accumulating rotations into ``v``.

    Each rotation first removes the phase of a_pq with a diagonal unitary,
    then applies the real symmetric Jacobi rotation that zeroes it.
    Once the off-diagonal norm is at most ``threshold`` one more sweep is
    run; convergence is quadratic, so it drives the remainder to roundoff.
    Returns (sweeps used, final off-diagonal norm); sweeps is -1 when the
    cap was reached without meeting ``threshold``.
    """
    n = a.shape[0]
    off = _off_norm(a)
    met = False
    for sweep in range(max_sweeps):
        if off == 0.0 or met:
            return sweep, off
        met = off <= threshold
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                # entry below the resolution of both diagonals
                if sweep > 3 and abs(app) + 100.0 * mag == abs(app) and abs(aqq) + 100.0 * mag == abs(aqq):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                w = apq / mag
                cw = w.conjugate()
                theta = (aqq - app) / (2.0 * mag)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * cw * akq
                    a[k, q] = s * akp + c * cw * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * w * aqk
                    a[q, k] = s * apk + c * w * aqk
                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * cw * vkq
                    v[k, q] = s * vkp + c * cw * vkq
        off = _off_norm(a)
    if met or off <= threshold:
        return max_sweeps, off
    return -1, off


def run(a: np.ndarray, threshold: float, max_sweeps: int):
    """Return (eigenvalues, eigenvector columns, sweeps, off-norm); unsorted."""
    work = np.array(a, dtype=np.complex128, copy=True)
    v = np.eye(work.shape[0], dtype=np.complex128)
    sweeps, off = jacobi_sweeps(work, v, float(threshold), int(max_sweeps))
    return np.diag(work).real.copy(), v, sweeps, off
