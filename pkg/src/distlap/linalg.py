"""Dense symmetric eigensolvers and bracketed polynomial root finding.

Two independent eigenvalue routes are kept deliberately: ``eigenvalues`` is
the production path (LAPACK via numpy, i.e. Householder reduction plus
implicit-shift iteration), ``eigenvalues_jacobi`` is a self-contained cyclic
Jacobi solver used to cross-validate the production path. Do not collapse one
into the other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NoConvergence, NoRootInBracket

GROUP_TOL = 1e-7  # multiplicity grouping for reported spectra


def as_sym_matrix(a) -> np.ndarray:
    """Validate and return a square, exactly symmetric float64 matrix."""
    m = np.asarray(a, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected square matrix, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise DimensionMismatch("matrix is not exactly symmetric")
    return m


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, with a grouping tolerance for reporting."""

    values: tuple[float, ...]
    tol: float = GROUP_TOL

    def __post_init__(self):
        for i in range(len(self.values) - 1):
            if self.values[i] < self.values[i + 1]:
                raise ValueError("spectrum values must be sorted descending")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @property
    def radius(self) -> float:
        return self.values[0]

    @property
    def smallest(self) -> float:
        return self.values[-1]

    def multiplicities(self) -> list[tuple[float, int]]:
        """Group equal eigenvalues at the tolerance; returns (value, count) pairs."""
        groups: list[tuple[float, int]] = []
        for v in self.values:
            if groups and abs(groups[-1][0] - v) <= self.tol:
                val, cnt = groups[-1]
                groups[-1] = (val, cnt + 1)
            else:
                groups.append((v, 1))
        return groups


def eigenvalues(m) -> Spectrum:
    """All eigenvalues of a symmetric matrix, descending."""
    a = as_sym_matrix(m)
    try:
        vals = np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return Spectrum(tuple(float(v) for v in vals[::-1]))


def eigenvalues_jacobi(m, max_sweeps: int = 100) -> Spectrum:
    """Cyclic-by-row Jacobi eigensolver; independent oracle for eigenvalues."""
    a = as_sym_matrix(m).copy()
    n = a.shape[0]
    if n == 1:
        return Spectrum((float(a[0, 0]),))
    fro = float(np.linalg.norm(a))
    stop = 1e-12 * fro
    for _ in range(max_sweeps):
        # summed directly over the off-diagonal entries: the textbook
        # ||A||_F^2 - sum(diag^2) form cancels catastrophically and can
        # never reach a 1e-12-relative threshold
        off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off <= stop:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(diff) > 1e10 * abs(apq):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                app, aqq = a[p, p], a[q, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                idx = [r for r in range(n) if r != p and r != q]
                arp = a[idx, p].copy()
                arq = a[idx, q].copy()
                newp = arp - s * (arq + tau * arp)
                newq = arq + s * (arp - tau * arq)
                a[idx, p] = newp
                a[p, idx] = newp
                a[idx, q] = newq
                a[q, idx] = newq
    else:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
    vals = sorted((float(v) for v in np.diag(a)), reverse=True)
    return Spectrum(tuple(vals))


def _horner(coeffs, x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def largest_root(coeffs, bracket, grid: int = 2048, tol: float = 1e-11) -> float:
    """Largest real root of the polynomial (coefficients leading-first) inside
    the bracket, found by scanning for the rightmost sign change and bisecting."""
    lo, hi = float(bracket[0]), float(bracket[1])
    if not hi > lo:
        raise NoRootInBracket(f"empty bracket [{lo}, {hi}]")
    xs = [lo + (hi - lo) * k / grid for k in range(grid + 1)]
    fb = _horner(coeffs, xs[-1])
    if fb == 0.0:
        return xs[-1]
    for k in range(grid - 1, -1, -1):
        fa = _horner(coeffs, xs[k])
        if fa == 0.0:
            return xs[k]
        if (fa < 0.0) != (fb < 0.0):
            a, b = xs[k], xs[k + 1]
            while b - a > tol:
                mid = 0.5 * (a + b)
                fm = _horner(coeffs, mid)
                if fm == 0.0:
                    return mid
                if (fm < 0.0) == (fa < 0.0):
                    a, fa = mid, fm
                else:
                    b = mid
            return 0.5 * (a + b)
        fb = fa
    raise NoRootInBracket(f"no sign change of the polynomial in [{lo}, {hi}]")
