"""Symmetric first-order conditionally autoregressive (SFCAR) field model.

The hidden field is a stationary zero-mean Gauss-Markov random field on
the 2-D integer lattice whose conditional law at each site depends on the
four axial neighbors through a single edge dependence factor
zeta = lambda/kappa in [0, 1/4], with conditional precision kappa > 0.
Its power spectral density over the principal frequency square is

    f(w1, w2) = 1 / (4 pi^2 kappa (1 - 2 zeta cos w1 - 2 zeta cos w2)),

the per-site signal power is P = 2 K(4 zeta) / (pi kappa), and the
measurement SNR against i.i.d. Gaussian sensor noise of variance sigma^2
is P / sigma^2.  zeta = 0 is the i.i.d. field, zeta = 1/4 the perfectly
correlated one where P diverges.
"""

import math
from dataclasses import dataclass

from sfcar.errors import DivergenceError, DomainError
from sfcar.special import complete_elliptic_k

ZETA_MAX = 0.25


@dataclass(frozen=True)
class SfcarParams:
    """Field parameters: conditional precision and edge dependence factor."""

    kappa: float
    zeta: float

    def __post_init__(self) -> None:
        if not self.kappa > 0.0:
            raise DomainError(f"kappa must be > 0, got {self.kappa!r}")
        if not 0.0 <= self.zeta <= ZETA_MAX:
            raise DomainError(f"zeta must lie in [0, 1/4], got {self.zeta!r}")


@dataclass(frozen=True)
class NoiseModel:
    """I.i.d. Gaussian measurement noise with variance sigma2."""

    sigma2: float

    def __post_init__(self) -> None:
        if not self.sigma2 > 0.0:
            raise DomainError(f"sigma2 must be > 0, got {self.sigma2!r}")


def spectral_density(params: SfcarParams, omega1: float, omega2: float) -> float:
    """Power spectral density f(omega1, omega2) of the SFCAR field.

    Frequencies are plain radians; no wrapping is performed.  Raises
    DivergenceError at the single singular point zeta = 1/4 with
    omega = (0, 0).
    """
    denom = 1.0 - 2.0 * params.zeta * (math.cos(omega1) + math.cos(omega2))
    if denom <= 0.0:
        raise DivergenceError(
            "spectral density diverges at zeta = 1/4, omega = (0, 0)"
        )
    return 1.0 / (4.0 * math.pi**2 * params.kappa * denom)


def signal_power(params: SfcarParams) -> float:
    """Per-site variance P = 2 K(4 zeta) / (pi kappa).

    Equals the integral of the spectral density over the frequency
    square.  Raises DivergenceError at zeta = 1/4: callers that need the
    perfectly correlated limit handle it explicitly rather than receiving
    an infinity.
    """
    if params.zeta >= ZETA_MAX:
        raise DivergenceError("signal power diverges at zeta = 1/4")
    return 2.0 * complete_elliptic_k(4.0 * params.zeta) / (math.pi * params.kappa)


def measurement_snr(params: SfcarParams, noise: NoiseModel) -> float:
    """Measurement SNR = signal_power / sigma2."""
    return signal_power(params) / noise.sigma2
