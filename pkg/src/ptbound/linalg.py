"""Dense linear algebra with explicit residual contracts.

Thin wrappers over LAPACK (via numpy) that enforce the accuracy contracts
the eigensolver modules rely on: symmetry checks on input, residual and
orthonormality checks on output. Tolerances are relative to the
max-row-sum norm so they stay scale-free across grids.
"""

from __future__ import annotations

import numpy as np

from .errors import NonSymmetricError, SingularMatrixError, SolverError

SYMMETRY_RTOL = 1e-12
RESIDUAL_RTOL = 1e-10


def matrix_norm(a: np.ndarray) -> float:
    """Max-row-sum (infinity) norm."""
    return float(np.abs(a).sum(axis=1).max()) if a.size else 0.0


def eig_symmetric(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a symmetric matrix."""
    a = np.asarray(a, dtype=float)
    norm = matrix_norm(a)
    if np.abs(a - a.T).max() > SYMMETRY_RTOL * max(norm, 1.0):
        raise NonSymmetricError("matrix is not symmetric within tolerance")
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"symmetric eigensolve failed: {exc}") from exc
    resid = np.abs(a @ v - v * w).max()
    if resid > RESIDUAL_RTOL * max(norm, 1.0):
        raise SolverError(f"eigenpair residual {resid:.3e} exceeds contract")
    return w, v


def eig_general(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """All eigenvalues (complex) and right eigenvectors of a real square matrix."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("eig_general requires a square matrix")
    try:
        w, v = np.linalg.eig(a)
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"general eigensolve failed: {exc}") from exc
    return w, v


def solve_linear(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve ax = b with partial pivoting; rejects near-singular systems."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    norm = matrix_norm(a)
    try:
        x = np.linalg.solve(a, b)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError(f"singular system: {exc}") from exc
    resid = np.abs(a @ x - b).max()
    bound = RESIDUAL_RTOL * max(norm, 1.0) * max(np.abs(x).max(), 1.0)
    if not np.isfinite(resid) or resid > bound:
        raise SingularMatrixError(
            f"solution residual {resid:.3e} exceeds {bound:.3e}")
    return x
