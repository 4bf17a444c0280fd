"""Brute-force eigenvalues by cyclic-by-row Jacobi rotations.

Kept deliberately independent of the diagonalization module: it sees only a
dense symmetric matrix and never the creation sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numba
import numpy as np

from .diagonalize import EigenCounts
from .exceptions import AmbiguousProbe, DidNotConverge, OrderTooLarge

MAX_ORDER = 64
MAX_SWEEPS = 100
OFF_TOL = 1e-12
COMPARE_EPS = 1e-8


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple
    residual: float

    def __len__(self):
        return len(self.eigenvalues)

    def to_dict(self) -> dict:
        return {"eigenvalues": list(self.eigenvalues), "residual": self.residual}


@numba.njit(cache=True)
def _jacobi_sweeps(a, off_tol, max_sweeps):
    n = a.shape[0]
    frob = math.sqrt(np.sum(a * a))
    target = off_tol * frob
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += 2.0 * a[p, q] * a[p, q]
        off = math.sqrt(off)
        if off <= target:
            return sweep, off
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
    return -1, off


def eigenvalues(adj, off_tol: float = OFF_TOL, max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """Sorted spectrum of a symmetric matrix (n <= 64)."""
    a = np.array(adj, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > MAX_ORDER:
        raise OrderTooLarge(f"oracle is limited to n <= {MAX_ORDER}, got {n}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    sweeps, off = _jacobi_sweeps(a, off_tol, max_sweeps)
    if sweeps < 0:
        raise DidNotConverge(max_sweeps)
    return Spectrum(tuple(sorted(np.diag(a).tolist())), float(off))


def count_relative(spec: Spectrum, x: float, eps: float = COMPARE_EPS) -> EigenCounts:
    """Eigenvalues above x+eps, within eps of x, and below x-eps."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    greater = equal = less = 0
    for lam in spec.eigenvalues:
        if x - 2 * eps < lam <= x - eps or x + eps <= lam < x + 2 * eps:
            raise AmbiguousProbe(f"eigenvalue {lam!r} too close to probe {x!r}")
        if lam > x + eps:
            greater += 1
        elif lam < x - eps:
            less += 1
        else:
            equal += 1
    return EigenCounts(greater, equal, less)


def inertia_of(spec: Spectrum, eps: float = COMPARE_EPS):
    """(n_plus, n_zero, n_minus, n_minus_one) read off a spectrum."""
    ev = spec.eigenvalues
    n_zero = sum(1 for lam in ev if abs(lam) <= eps)
    n_plus = sum(1 for lam in ev if lam > eps)
    n_minus_one = sum(1 for lam in ev if abs(lam + 1.0) <= eps)
    return n_plus, n_zero, len(ev) - n_plus - n_zero, n_minus_one
