"""Higher-order finite-difference eigensolver.

The semi-infinite problem is compactified by s = (2/pi) arctan(zeta*x)
onto (0, 1) and discretized on a uniform grid with wide stencils of
maximal consistency order; the finite well needs only a rescaling to
(0, 1). The compactification scale zeta is retuned per eigenvalue
index, so the hyperbolic operator is rebuilt for every requested level.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import linalg
from .dvr import SpectrumResult
from .errors import ConfigError, SolverError
from .potentials import HyperbolicParams, TrigParams, eval_hyperbolic, eval_trig

DEFAULT_M = 500
DEFAULT_K = 4
REALNESS_RTOL = 1e-8
CONDITIONING_NODE_LIMIT = 20


@dataclass(frozen=True)
class HofdConfig:
    """Uniform grid s_i = i/(M+1) with stencil half-width k."""

    M: int = DEFAULT_M
    k: int = DEFAULT_K

    def __post_init__(self):
        if self.k < 1:
            raise ConfigError(f"k must be >= 1, got {self.k}")
        if self.M < 2 * self.k + 2:
            raise ConfigError(f"need M >= 2k + 2, got M={self.M}, k={self.k}")

    @property
    def h(self) -> float:
        return 1.0 / (self.M + 1)

    @property
    def s(self) -> np.ndarray:
        """Interior nodes s_1 .. s_M."""
        return np.arange(1, self.M + 1) / (self.M + 1)


def zeta(j: int) -> float:
    """Compactification scale for eigenvalue index j >= 1."""
    if j < 1:
        raise ValueError("eigenvalue index must be >= 1")
    return 0.6 * j ** (-0.7)


def fd_weights(l: int, nodes: list[int], eval_offset: int) -> np.ndarray:
    """Finite-difference weights of maximal consistency order.

    Solves the moment conditions
        sum_j w_j (node_j - eval_offset)^p = p! * delta_{p,l},
    p = 0..len(nodes)-1, so the stencil is exact on all monomials the
    node count supports.
    """
    if l not in (1, 2):
        raise ValueError("derivative order must be 1 or 2")
    nodes = list(nodes)
    if len(set(nodes)) != len(nodes):
        raise ValueError("stencil nodes must be distinct")
    m = len(nodes)
    if m < l + 1:
        raise ValueError(f"need at least {l + 1} nodes for order-{l} derivative")
    if m > CONDITIONING_NODE_LIMIT:
        warnings.warn(f"{m}-node moment system may be ill-conditioned",
                      RuntimeWarning, stacklevel=2)
    d = np.array(nodes, dtype=float) - eval_offset
    vand = np.vander(d, m, increasing=True).T  # row p: d**p
    rhs = np.zeros(m)
    rhs[l] = math.factorial(l)
    return linalg.solve_linear(vand, rhs)


def delta_matrices(cfg: HofdConfig) -> tuple[np.ndarray, np.ndarray]:
    """First- and second-derivative matrices on the interior nodes.

    Interior rows carry the centered 2k+1 stencil; rows within k of a wall
    use the maximally consistent one-sided stencil over the first (last)
    2k+1 grid points. Columns for the Dirichlet endpoints s_0 and s_{M+1}
    are dropped.
    """
    M, k, h = cfg.M, cfg.k, cfg.h
    d1 = np.zeros((M, M))
    d2 = np.zeros((M, M))
    t = M - 2 * k + 1  # left edge of the right-boundary window
    for i in range(1, M + 1):
        if i < k:
            window = list(range(0, 2 * k + 1))
        elif i <= M + 1 - k:
            window = list(range(i - k, i + k + 1))
        else:
            window = list(range(t, t + 2 * k + 1))
        w1 = fd_weights(1, window, i)
        w2 = fd_weights(2, window, i)
        for node, a1, a2 in zip(window, w1, w2):
            if 1 <= node <= M:  # endpoint columns vanish by psi_0 = psi_{M+1} = 0
                d1[i - 1, node - 1] += a1
                d2[i - 1, node - 1] += a2
    return d1 / h, d2 / h**2


def hyperbolic_operator(p: HyperbolicParams, cfg: HofdConfig, j: int) -> np.ndarray:
    """Compactified wave operator for the hyperbolic family at eigenvalue index j."""
    z = zeta(j)
    s = cfg.s
    cos_half = np.cos(math.pi * s / 2.0)
    sin_half = np.sin(math.pi * s / 2.0)
    a_diag = -(2.0 * z**2 / math.pi**2) * cos_half**4
    b_diag = (2.0 * z**2 / math.pi) * cos_half**3 * sin_half
    x = np.tan(math.pi * s / 2.0) / z
    c_diag = eval_hyperbolic(p, x)
    d1, d2 = delta_matrices(cfg)
    return a_diag[:, None] * d2 + b_diag[:, None] * d1 + np.diag(c_diag)


def box_operator(p: TrigParams, cfg: HofdConfig) -> np.ndarray:
    """Rescaled wave operator for the trigonometric family on (0, 1)."""
    _, d2 = delta_matrices(cfg)
    v = eval_trig(p, p.a * cfg.s)
    return -d2 / (2.0 * p.a**2) + np.diag(v)


def _near_real_sorted(w: np.ndarray) -> np.ndarray:
    radius = np.abs(w).max() if w.size else 0.0
    real = w[np.abs(w.imag) <= REALNESS_RTOL * max(radius, 1.0)].real
    return np.sort(real)


def hofd_spectrum(p: HyperbolicParams | TrigParams, cfg: HofdConfig | None = None,
                  count: int = 3) -> SpectrumResult:
    """Lowest `count` eigenvalues via the finite-difference operator.

    For the hyperbolic family the operator is rebuilt per index j with the
    retuned zeta(j) and the j-th smallest near-real eigenvalue is taken;
    the finite well uses a single build.
    """
    cfg = cfg or HofdConfig()
    if count < 0:
        raise ValueError("count must be >= 0")
    eigenvalues: list[float] = []
    max_resid = 0.0
    if isinstance(p, HyperbolicParams):
        for j in range(1, count + 1):
            op = hyperbolic_operator(p, cfg, j)
            w, v = linalg.eig_general(op)
            real = _near_real_sorted(w)
            if len(real) < j:
                raise SolverError(
                    f"only {len(real)} near-real eigenvalues for index {j}")
            lam = float(real[j - 1])
            max_resid = max(max_resid, _residual(op, w, v, lam))
            eigenvalues.append(lam)
    else:
        op = box_operator(p, cfg)
        w, v = linalg.eig_general(op)
        real = _near_real_sorted(w)
        if len(real) < count:
            raise SolverError(
                f"only {len(real)} near-real eigenvalues, need {count}")
        for lam in real[:count]:
            max_resid = max(max_resid, _residual(op, w, v, float(lam)))
        eigenvalues = [float(x) for x in real[:count]]
    return SpectrumResult(method="HOFD", eigenvalues=tuple(eigenvalues),
                          config={"M": cfg.M, "k": cfg.k},
                          max_residual=max_resid)


def _residual(op: np.ndarray, w: np.ndarray, v: np.ndarray, lam: float) -> float:
    idx = int(np.argmin(np.abs(w - lam)))
    vec = v[:, idx]
    r = np.abs(op @ vec - w[idx] * vec).max()
    return float(r / max(linalg.matrix_norm(op), 1.0))
