"""Matrix assembly from graphs, spectral profiles, quotient matrices, interlacing.

All matrices are assembled in int64 first so that structural identities (zero
row sums of the distance Laplacian, trace = 2W) hold exactly before any float
arithmetic happens.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidPartition
from .graphs import DistanceData, Graph, distance_data
from .linalg import Spectrum, as_sym_matrix, eigenvalues
from .verdict import EQUALITY_TOL, SLACK, BoundVerdict


def _dist_int(g: Graph, dd: DistanceData | None = None) -> np.ndarray:
    dd = dd or distance_data(g)
    return np.array(dd.dist, dtype=np.int64)


def distance_matrix(g: Graph) -> np.ndarray:
    """D(G): hop distances as a dense symmetric float matrix."""
    return _dist_int(g).astype(np.float64)


def dist_laplacian(g: Graph) -> np.ndarray:
    """Tr(G) - D(G); integer assembly keeps every row sum exactly zero."""
    d = _dist_int(g)
    return (np.diag(d.sum(axis=1)) - d).astype(np.float64)


def dist_signless_laplacian(g: Graph) -> np.ndarray:
    """Tr(G) + D(G)."""
    d = _dist_int(g)
    return (np.diag(d.sum(axis=1)) + d).astype(np.float64)


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for i in range(g.n):
        for j in range(g.n):
            if i != j and g.has_edge(i, j):
                a[i, j] = 1
    return a.astype(np.float64)


def laplacian(g: Graph) -> np.ndarray:
    """Ordinary Laplacian Diag(degrees) - A; source of the algebraic connectivity."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for i in range(g.n):
        row = g.adj[i]
        a[i, i] = row.bit_count()
        for j in range(g.n):
            if (row >> j) & 1:
                a[i, j] = -1
    return a.astype(np.float64)


@dataclass(frozen=True)
class SpectralProfile:
    """The three spectra of one connected graph plus its distance data."""

    dl_spectrum: Spectrum
    dq_spectrum: Spectrum
    lap_spectrum: Spectrum
    alg_connectivity: float
    dd: DistanceData


def spectral_profile(g: Graph) -> SpectralProfile:
    dd = distance_data(g)
    dl = eigenvalues(dist_laplacian(g))
    dq = eigenvalues(dist_signless_laplacian(g))
    lap = eigenvalues(laplacian(g))
    # second-smallest ordinary Laplacian eigenvalue
    alpha = lap.values[-2] if g.n >= 2 else 0.0
    return SpectralProfile(dl, dq, lap, float(alpha), dd)


def validate_partition(n: int, blocks) -> list[list[int]]:
    """Check that blocks are disjoint, nonempty, and cover 0..n-1."""
    norm = [list(b) for b in blocks]
    seen: set[int] = set()
    for b in norm:
        if not b:
            raise InvalidPartition("empty block")
        for v in b:
            if not 0 <= v < n:
                raise InvalidPartition(f"index {v} outside 0..{n - 1}")
            if v in seen:
                raise InvalidPartition(f"index {v} appears twice")
            seen.add(v)
    if len(seen) != n:
        raise InvalidPartition("blocks do not cover the index set")
    return norm


def quotient_matrix(m, blocks) -> np.ndarray:
    """Block-average row sums: entry (i,j) averages the rows of block i over
    the columns of block j."""
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected square matrix, got shape {a.shape}")
    norm = validate_partition(a.shape[0], blocks)
    k = len(norm)
    r = np.zeros((k, k))
    for i, bi in enumerate(norm):
        for j, bj in enumerate(norm):
            r[i, j] = a[np.ix_(bi, bj)].sum() / len(bi)
    return r


def quotient_lambda1(m, blocks) -> float:
    """Largest eigenvalue of the quotient matrix, via the symmetric similarity
    S^(1/2) R S^(-1/2) with S = diag(block sizes)."""
    a = np.asarray(m, dtype=np.float64)
    norm = validate_partition(a.shape[0], blocks)
    sizes = np.array([len(b) for b in norm], dtype=np.float64)
    k = len(norm)
    block_sums = np.zeros((k, k))
    for i, bi in enumerate(norm):
        for j, bj in enumerate(norm):
            block_sums[i, j] = a[np.ix_(bi, bj)].sum()
    scale = np.sqrt(np.outer(sizes, sizes))
    sym = block_sums / scale
    sym = (sym + sym.T) / 2.0  # kill roundoff asymmetry
    return eigenvalues(sym).radius


def check_quotient_bound(m, blocks) -> BoundVerdict:
    """lambda1 of the full matrix dominates lambda1 of any quotient matrix."""
    a = as_sym_matrix(m)
    lam_m = eigenvalues(a).radius
    lam_r = quotient_lambda1(a, blocks)
    return BoundVerdict(
        theorem_id="L2.2",
        bound_value=lam_r,
        observed=lam_m,
        holds=lam_m >= lam_r - SLACK,
        strict=lam_m - lam_r > SLACK,
        equality=abs(lam_m - lam_r) <= EQUALITY_TOL,
        witness={"lambda1_matrix": lam_m, "lambda1_quotient": lam_r,
                 "blocks": [len(b) for b in validate_partition(a.shape[0], blocks)]},
    )


def check_interlacing(a_spec, b_spec, slack: float = 1e-9) -> bool:
    """Cauchy interlacing: with descending spectra of sizes n >= m,
    a[n-m+i] <= b[i] <= a[i] for i = 1..m (1-based)."""
    av = list(a_spec.values if isinstance(a_spec, Spectrum) else a_spec)
    bv = list(b_spec.values if isinstance(b_spec, Spectrum) else b_spec)
    n, m = len(av), len(bv)
    if m > n:
        raise DimensionMismatch(f"submatrix spectrum longer ({m}) than full ({n})")
    for i in range(m):
        if not (av[n - m + i] - slack <= bv[i] <= av[i] + slack):
            return False
    return True
