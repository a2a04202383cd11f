"""Exact finite-lattice information on an N x N torus.

The torus wraps the lattice periodically, so the observation covariance
is block circulant and its eigenvalues sit on the 2-D DFT grid
w_k = 2 pi k / N.  Per-node information then reduces to plain averages of
the spectral integrands over that grid and converges to the asymptotic
rate integrals as N grows; this provides an independent check of the
quadrature without any matrix factorization.

For tiny N a second, first-principles route is provided: synthesize the
dense N^2 x N^2 covariance from the spectral eigenvalues and evaluate
the Gaussian KL divergence and mutual information from log-determinants
and traces.  Dense and eigenvalue routes must agree to ~1e-10, tying the
spectral shortcut to the defining Gaussian formulas.
"""

import math
from dataclasses import dataclass

import numpy as np

from sfcar import kernels
from sfcar.errors import DomainError
from sfcar.rates import InfoRates
from sfcar.special import complete_elliptic_k

_DENSE_N_MAX = 12


@dataclass(frozen=True)
class TorusSpec:
    """Validation lattice size: N x N nodes, N >= 2."""

    n_per_axis: int

    def __post_init__(self) -> None:
        if self.n_per_axis < 2:
            raise DomainError(f"torus needs N >= 2, got {self.n_per_axis!r}")


def torus_rates(zeta: float, snr: float, spec: TorusSpec) -> InfoRates:
    """Per-node KL and MI rates of the hidden field on an N x N torus.

    Discrete averages of the spectral integrands over the DFT frequency
    grid; noise variance is fixed at 1 inside the oracle and snr scales
    the signal spectrum directly.
    """
    _check(zeta, snr)
    if snr == 0.0:
        return InfoRates(0.0, 0.0)
    n = spec.n_per_axis
    omega = 2.0 * math.pi * np.arange(n) / n
    cos_omega = np.cos(omega)
    w = np.full(n, 1.0 / n)
    kli, mi = kernels.rate_sums(cos_omega, w, cos_omega, w, zeta, snr, _norm(zeta))
    return InfoRates(max(kli, 0.0), max(mi, 0.0))


def dense_gaussian_rates(zeta: float, snr: float, spec: TorusSpec) -> InfoRates:
    """First-principles Gaussian rates from the dense torus covariance.

    Builds Sigma_X by inverse 2-D DFT of the spectral eigenvalues, then
    per-node D(p0 || p1) = (1/2N^2) [tr((Sigma_X+I)^-1) - N^2
    + log det(Sigma_X+I)] and per-node MI = (1/2N^2) log det(Sigma_X+I),
    via a Cholesky factorization.  Restricted to N <= 12.
    """
    _check(zeta, snr)
    n = spec.n_per_axis
    if n > _DENSE_N_MAX:
        raise DomainError(f"dense route limited to N <= {_DENSE_N_MAX}, got {n}")
    if snr == 0.0:
        return InfoRates(0.0, 0.0)
    omega = 2.0 * math.pi * np.arange(n) / n
    denom = 1.0 - 2.0 * zeta * (np.cos(omega)[:, None] + np.cos(omega)[None, :])
    eigs = snr / (_norm(zeta) * denom)
    gen = np.real(np.fft.ifft2(eigs))  # circulant generator r[di, dj]
    idx = np.arange(n)
    diff = (idx[:, None] - idx[None, :]) % n
    cov = gen[diff[:, None, :, None], diff[None, :, None, :]].reshape(n * n, n * n)
    cov_y = cov + np.eye(n * n)
    chol = np.linalg.cholesky(cov_y)
    logdet = 2.0 * float(np.sum(np.log(np.diag(chol))))
    chol_inv = np.linalg.solve(chol, np.eye(n * n))
    trace_inv = float(np.sum(chol_inv * chol_inv))
    nn = n * n
    kli = 0.5 * (trace_inv - nn + logdet) / nn
    mi = 0.5 * logdet / nn
    return InfoRates(max(kli, 0.0), mi)


def _check(zeta: float, snr: float) -> None:
    if not 0.0 <= zeta < 0.25:
        raise DomainError(f"zeta must lie in [0, 1/4), got {zeta!r}")
    if not snr >= 0.0:
        raise DomainError(f"snr must be >= 0, got {snr!r}")


def _norm(zeta: float) -> float:
    return (2.0 / math.pi) * complete_elliptic_k(4.0 * zeta)
