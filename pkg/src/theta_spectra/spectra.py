"""Dense symmetric eigensolver (cyclic Jacobi) and index utilities."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numba import njit

from .graphs import SignedCompleteGraph, adjacency_matrix

DEFAULT_TOL = 1e-12
COMPARE_MARGIN = 1e-8
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class SpectralResult:
    eigenvalues: np.ndarray      # descending
    principal_vector: np.ndarray  # unit norm, sign-normalised
    residual: float               # max |A x - lambda_1 x|

    @property
    def index(self) -> float:
        return float(self.eigenvalues[0])


@njit(cache=True)
def _jacobi(a, want_vectors, tol, max_sweeps):
    n = a.shape[0]
    v = np.eye(n) if want_vectors else np.zeros((1, 1))
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n):
            for q in range(p + 1, n):
                if abs(a[p, q]) > off:
                    off = abs(a[p, q])
        if off <= tol:
            return v, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-3 * tol:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for r in range(n):
                    arp = a[r, p]
                    arq = a[r, q]
                    a[r, p] = c * arp - s * arq
                    a[r, q] = s * arp + c * arq
                for r in range(n):
                    apr = a[p, r]
                    aqr = a[q, r]
                    a[p, r] = c * apr - s * aqr
                    a[q, r] = s * apr + c * aqr
                if want_vectors:
                    for r in range(n):
                        vrp = v[r, p]
                        vrq = v[r, q]
                        v[r, p] = c * vrp - s * vrq
                        v[r, q] = s * vrp + c * vrq
    return v, -1


def _as_symmetric(m) -> np.ndarray:
    a = np.array(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    return a


def _normalise_sign(x: np.ndarray) -> np.ndarray:
    i = int(np.argmax(np.abs(x)))
    return -x if x[i] < 0 else x


def eig_symmetric(m, tol: float = DEFAULT_TOL, residual_tol: float | None = None) -> SpectralResult:
    """Full spectrum of a real symmetric matrix.

    Row-cyclic Jacobi sweeps run until the largest off-diagonal entry is at
    most ``tol``; more than ``MAX_SWEEPS`` sweeps raises :class:`ConvergenceError`.
    """
    a = _as_symmetric(m)
    n = a.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    work = a.copy()
    v, sweeps = _jacobi(work, True, tol, MAX_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")
    vals = np.diag(work).copy()
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    x = v[:, order[0]]
    x = _normalise_sign(x / np.linalg.norm(x))
    residual = float(np.max(np.abs(a @ x - vals[0] * x)))
    limit = 1e-10 * n if residual_tol is None else residual_tol
    if residual > limit:
        raise ConvergenceError(f"residual {residual:.3e} exceeds {limit:.3e}")
    return SpectralResult(vals, x, residual)


def largest_eigenvalue(m, tol: float = DEFAULT_TOL) -> float:
    """Top eigenvalue only; skips eigenvector accumulation."""
    work = _as_symmetric(m)
    _, sweeps = _jacobi(work, False, tol, MAX_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")
    return float(np.max(np.diag(work)))


def index(g: SignedCompleteGraph, tol: float = DEFAULT_TOL) -> tuple[float, np.ndarray]:
    """Index of ``g`` and its principal eigenvector."""
    res = eig_symmetric(adjacency_matrix(g), tol)
    return res.index, res.principal_vector


def interlace_check(m, subset: Sequence[int], tol: float = 1e-9):
    """Cauchy interlacing between ``m`` and its principal submatrix on ``subset``.

    Returns ``(True, None)`` or ``(False, (i, lambda_i, mu_i, lambda_{n-k+i}))``
    for the first violated position ``i`` (1-based).
    """
    a = _as_symmetric(m)
    n = a.shape[0]
    idx = sorted(set(subset))
    if not idx or idx[0] < 0 or idx[-1] >= n:
        raise ValueError(f"bad subset {subset!r} for order {n}")
    lam = eig_symmetric(a).eigenvalues
    mu = eig_symmetric(a[np.ix_(idx, idx)]).eigenvalues
    k = len(idx)
    for i in range(k):
        hi, lo = lam[i], lam[n - k + i]
        if not (hi + tol >= mu[i] >= lo - tol):
            return False, (i + 1, float(hi), float(mu[i]), float(lo))
    return True, None


def index_lower_bound(n: int, k: int) -> int:
    """``n - k + 1``, valid when the ``k`` negative edges touch at most ``k - 1``
    vertices, so that ``n - k + 2`` vertices span an all-positive clique."""
    if k < 1:
        raise ValueError("lower bound needs k >= 1")
    return n - k + 1


def index_upper_bound(n: int) -> int:
    return n - 1


def within_index_bounds(g: SignedCompleteGraph, lam: float, tol: float = COMPARE_MARGIN) -> bool:
    """Check ``n - k + 1 <= lam <= n - 1`` within ``tol``.

    The lower bound needs a positive clique on ``n - k + 2`` vertices, which is
    guaranteed once the negative edges touch at most ``k - 1`` vertices (the
    bicyclic case); otherwise only the upper bound is checked.
    """
    if lam > index_upper_bound(g.n) + tol:
        return False
    support = {x for e in g.negative_edges.edges for x in e}
    if g.k >= 2 and len(support) <= g.k - 1 and lam < index_lower_bound(g.n, g.k) - tol:
        return False
    return True
