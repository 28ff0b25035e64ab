"""Adjacency spectra and the spectral expansion bounds for regular graphs.

Provides two interchangeable symmetric eigensolvers: LAPACK's dense solver
(default, via numpy) and a cyclic Jacobi rotation solver kept as an
independent reference route; tests cross-check them against each other
and against analytic spectra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, bipartition, is_k_regular

DEFAULT_TOLERANCE = 1e-8
_JACOBI_MAX_SWEEPS = 60


class EigensolverError(RuntimeError):
    """Eigensolver failed to converge; carries the residual norm."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class NotRegularError(ValueError):
    """Operation requires a k-regular graph."""


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def jacobi_eigenvalues(
    matrix: np.ndarray, tolerance: float, max_sweeps: int = _JACOBI_MAX_SWEEPS
) -> np.ndarray:
    """Cyclic Jacobi rotations until the off-diagonal Frobenius norm < tolerance.

    Unconditionally convergent on symmetric input; eigenvalue error is
    bounded by the final off-diagonal norm.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("jacobi_eigenvalues needs a square matrix")
    if not np.allclose(a, a.T):
        raise ValueError("jacobi_eigenvalues needs a symmetric matrix")
    n = a.shape[0]
    if n == 1:
        return a[0, :1].copy()
    for _ in range(max_sweeps):
        off = _offdiag_norm(a)
        if off < tolerance:
            break
        # Rotations below this size cannot help reach the target this sweep.
        skip = tolerance / (2.0 * n)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rot_p = c * a[p, :] - s * a[q, :]
                rot_q = s * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = rot_p, rot_q
                rot_p = c * a[:, p] - s * a[:, q]
                rot_q = s * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = rot_p, rot_q
    else:
        residual = _offdiag_norm(a)
        raise EigensolverError(
            f"Jacobi sweeps exhausted ({max_sweeps}), "
            f"off-diagonal norm {residual:.3e} >= tolerance {tolerance:.3e}",
            residual=residual,
        )
    return np.sort(np.diag(a))[::-1].copy()


def adjacency_eigenvalues(
    g: Graph, tolerance: float = DEFAULT_TOLERANCE, method: str = "auto"
) -> np.ndarray:
    """All n adjacency eigenvalues, sorted descending.

    method: "lapack" (numpy dense symmetric solve), "jacobi" (cyclic
    rotations), or "auto" (lapack).  Both meet the tolerance contract on
    the sizes this toolkit targets (n up to ~2000 dense).
    """
    if g.n < 1:
        raise ValueError("eigenvalues need n >= 1")
    if method not in ("auto", "lapack", "jacobi"):
        raise ValueError(f"unknown method {method!r}")
    a = g.adjacency_matrix()
    if method == "jacobi":
        return jacobi_eigenvalues(a, tolerance)
    try:
        eigs = np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise EigensolverError(f"dense eigensolve failed: {exc}", residual=math.nan)
    return eigs[::-1].copy()


def nontrivial_lambda(
    eigenvalues, k: int, tolerance: float = DEFAULT_TOLERANCE
) -> float | None:
    """max |lambda_i| over eigenvalues with |lambda_i| < k, None if all trivial.

    The trivial band is relative: |lambda| >= k*(1 - tolerance) counts as
    +-k, so numerical eigenvalues near the trivial ones do not leak in.
    """
    band = k * (1.0 - tolerance)
    best: float | None = None
    for lam in eigenvalues:
        mag = abs(float(lam))
        if mag < band and (best is None or mag > best):
            best = mag
    return best


def alon_boppana_reference(k: int) -> float:
    """Asymptotic floor 2*sqrt(k-1) for the largest nontrivial eigenvalue.

    Diagnostic only: the finite-size correction term is not modelled.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return 2.0 * math.sqrt(k - 1.0)


def is_ramanujan(g: Graph, tolerance: float = DEFAULT_TOLERANCE) -> bool | None:
    """Whether lambda(G) <= 2*sqrt(k-1) (+ tolerance).

    None when g is disconnected or has no nontrivial eigenvalue: the
    defining spectral ordering presumes a connected regular graph.
    """
    k = is_k_regular(g)
    if k is None:
        raise NotRegularError("Ramanujan check requires a k-regular graph")
    eigs = adjacency_eigenvalues(g, tolerance)
    if _multiplicity_of_k(eigs, k, tolerance) != 1:
        return None
    lam = nontrivial_lambda(eigs, k, tolerance)
    if lam is None:
        return None
    return lam <= alon_boppana_reference(k) + tolerance


def chung_diameter_bound(n: int, k: int, lam: float, bipartite: bool) -> float:
    """Spectral diameter bound alpha + log(2n/alpha) / log((k + sqrt(k^2-l^2))/l).

    alpha is 2 for bipartite graphs and 1 otherwise.  At lam == 0 the
    denominator diverges and the bound collapses to exactly alpha.
    """
    if lam < 0.0:
        raise ValueError(f"lambda must be non-negative, got {lam}")
    if lam >= k:
        raise ValueError(f"lambda must be < k, got lambda={lam}, k={k}")
    alpha = 2.0 if bipartite else 1.0
    if lam == 0.0:
        return alpha
    denom = math.log((k + math.sqrt(k * k - lam * lam)) / lam)
    return alpha + math.log(2.0 * n / alpha) / denom


def expander_constant_lower_bound(k: int, lambda_2: float) -> float:
    """(k - lambda_2) / 2, the spectral-gap expander constant."""
    if lambda_2 > k:
        raise ValueError(f"lambda_2={lambda_2} exceeds k={k}")
    return (k - lambda_2) / 2.0


def dodziuk_bounds(k: int, lam: float) -> tuple[float, float]:
    """Edge-expansion sandwich ((k - l)/2, sqrt(2k(k - l))) for k-regular graphs."""
    if not (0.0 <= lam <= k):
        raise ValueError(f"lambda must be in [0, k], got lambda={lam}, k={k}")
    return (k - lam) / 2.0, math.sqrt(2.0 * k * (k - lam))


def _multiplicity_of_k(eigenvalues, k: int, tolerance: float) -> int:
    """Eigenvalue-k multiplicity == number of connected components (k-regular)."""
    band = tolerance * max(1.0, float(k))
    return int(sum(1 for lam in eigenvalues if lam >= k - band))


@dataclass(frozen=True)
class SpectralReport:
    """Full spectral certificate for one k-regular graph."""

    eigenvalues: tuple[float, ...]
    k: int
    lambda_nontrivial: float | None
    lambda_2: float | None
    is_bipartite: bool
    is_connected: bool
    ramanujan: bool | None
    chung_bound: float | None
    alon_boppana_ref: float | None
    expander_constant_lb: float | None
    dodziuk_lower: float | None
    dodziuk_upper: float | None
    tolerance: float

    def to_dict(self) -> dict:
        return {
            "eigenvalues": list(self.eigenvalues),
            "k": self.k,
            "lambda_nontrivial": self.lambda_nontrivial,
            "lambda_2": self.lambda_2,
            "is_bipartite": self.is_bipartite,
            "is_connected": self.is_connected,
            "ramanujan": self.ramanujan,
            "chung_bound": self.chung_bound,
            "alon_boppana_ref": self.alon_boppana_ref,
            "expander_constant_lb": self.expander_constant_lb,
            "dodziuk_lower": self.dodziuk_lower,
            "dodziuk_upper": self.dodziuk_upper,
            "tolerance": self.tolerance,
        }


def analyze(
    g: Graph, tolerance: float = DEFAULT_TOLERANCE, method: str = "auto"
) -> SpectralReport:
    """Compute the SpectralReport for a k-regular graph.

    The Ramanujan verdict and the diameter bound are None for
    disconnected graphs (detected via the multiplicity of eigenvalue k)
    and when every eigenvalue is trivial.  A nontrivial lambda below the
    tolerance is treated as exactly 0 in the diameter bound, where the
    formula's limit is exactly alpha.
    """
    k = is_k_regular(g)
    if k is None:
        raise NotRegularError(
            f"analyze requires a k-regular graph (degrees {sorted(set(g.degrees()))})"
        )
    eigs = adjacency_eigenvalues(g, tolerance, method)
    connected = _multiplicity_of_k(eigs, k, tolerance) == 1
    bip = bipartition(g) is not None
    lam = nontrivial_lambda(eigs, k, tolerance)
    lambda_2 = float(eigs[1]) if g.n >= 2 else None

    ramanujan: bool | None = None
    chung: float | None = None
    if connected and lam is not None:
        ramanujan = lam <= alon_boppana_reference(k) + tolerance
        lam_for_bound = 0.0 if lam <= tolerance else lam
        chung = chung_diameter_bound(g.n, k, lam_for_bound, bip)

    dod_lower = dod_upper = None
    if lam is not None:
        dod_lower, dod_upper = dodziuk_bounds(k, min(lam, float(k)))

    return SpectralReport(
        eigenvalues=tuple(float(x) for x in eigs),
        k=k,
        lambda_nontrivial=lam,
        lambda_2=lambda_2,
        is_bipartite=bip,
        is_connected=connected,
        ramanujan=ramanujan,
        chung_bound=chung,
        alon_boppana_ref=alon_boppana_reference(k) if k >= 1 else None,
        expander_constant_lb=(
            expander_constant_lower_bound(k, lambda_2) if lambda_2 is not None else None
        ),
        dodziuk_lower=dod_lower,
        dodziuk_upper=dod_upper,
        tolerance=tolerance,
    )
