"""Dense symmetric eigensolver, eigenvalues only.

Householder similarity transforms reduce the matrix to tridiagonal form;
implicit-shift QL iteration then extracts the eigenvalues. This is the
classic EISPACK tred1/imtql1 pair, vectorized with numpy where the work is
O(p^2) per step and kept as a scalar loop where it is O(p).
"""
from __future__ import annotations

import math

import numpy as np

from .errors import EigenConvergenceError

_EPS = float(np.finfo(np.float64).eps)


def householder_tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduce a symmetric matrix to tridiagonal (diagonal, subdiagonal).

    The input is copied; each step applies the rank-2 symmetric update of
    the Householder reflector to the trailing block.
    """
    A = np.array(a, dtype=np.float64, copy=True)
    n = A.shape[0]
    d = np.empty(n)
    e = np.zeros(max(n - 1, 0))
    for k in range(n - 2):
        x = A[k + 1:, k].copy()
        nrm = float(np.sqrt(x @ x))
        if nrm == 0.0:
            e[k] = 0.0
            continue
        alpha = -math.copysign(nrm, x[0] if x[0] != 0.0 else 1.0)
        v = x
        v[0] -= alpha
        vsq = float(v @ v)
        if vsq == 0.0:
            e[k] = alpha
            continue
        block = A[k + 1:, k + 1:]
        w = block @ v * (2.0 / vsq)
        w -= v * (float(v @ w) / vsq)
        block -= np.outer(v, w) + np.outer(w, v)
        e[k] = alpha
    if n >= 2:
        e[n - 2] = A[n - 1, n - 2]
    d[:] = np.diag(A)
    return d, e


def tridiagonal_eigenvalues(
    diag: np.ndarray, offdiag: np.ndarray, max_iter: int = 50
) -> np.ndarray:
    """Eigenvalues of a symmetric tridiagonal matrix, ascending.

    Implicit-shift QL with the Wilkinson shift; raises
    EigenConvergenceError with the offending index if any eigenvalue needs
    more than ``max_iter`` iterations.
    """
    n = len(diag)
    if n == 0:
        return np.empty(0)
    if len(offdiag) != n - 1:
        raise ValueError("offdiag must have length len(diag) - 1")
    d = [float(x) for x in diag]
    e = [float(x) for x in offdiag] + [0.0]

    for l in range(n):
        iterations = 0
        while True:
            for m in range(l, n - 1):
                if abs(e[m]) <= _EPS * (abs(d[m]) + abs(d[m + 1])):
                    break
            else:
                m = n - 1
            if m == l:
                break
            if iterations >= max_iter:
                raise EigenConvergenceError(l, max_iter)
            iterations += 1

            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if not underflow:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    return np.sort(np.asarray(d))
