"""Physical-to-lattice correlation chain.

A diffusive physical field with diffusion rate alpha sampled at spacing d
has edge correlation rho = alpha*d * K_1(alpha*d) between axially
adjacent samples.  The SFCAR lattice model reproduces a given edge
correlation when its edge dependence factor zeta satisfies

    rho = ((2/pi) K(4 zeta) - 1) / (4 zeta (2/pi) K(4 zeta)),

which maps zeta = 0 to rho = 0 and zeta = 1/4 to rho = 1 and is strictly
increasing in between.  The map has no closed-form inverse; it is
inverted by bisection.

Precision note: near the upper endpoint zeta grows toward 1/4 only
double-exponentially slowly in rho (1 - rho ~ (pi/2)/K(4 zeta), with K
logarithmic in 1/4 - zeta), so the largest edge correlation attainable
at a double below 1/4 is rho ~ 0.919.  Inputs above that resolve to the
endpoint; round trips through the inverse are exact to 1e-10 in rho only
for rho <~ 0.8, while round trips in zeta are accurate over all of
[0, 1/4].
"""

import math
from dataclasses import dataclass

from sfcar.errors import DomainError
from sfcar.special import bessel_k1, complete_elliptic_k

_SERIES_CUTOFF = 1e-4  # below this, rho(zeta) = zeta to O(zeta^3)
_NEGATIVE_CLAMP = -1e-13


@dataclass(frozen=True)
class PhysicalEnvironment:
    """Continuous-world field parameters: diffusion rate alpha (1/length)."""

    alpha: float

    def __post_init__(self) -> None:
        if not self.alpha > 0.0:
            raise DomainError(f"alpha must be > 0, got {self.alpha!r}")


def edge_correlation(env: PhysicalEnvironment, spacing: float) -> float:
    """Edge correlation rho = alpha*d * K_1(alpha*d) for sample spacing d.

    Strictly decreasing in spacing; tends to 1 as d -> 0 and to 0 as
    d -> infinity.  Clamped into [0, 1] against floating-point overshoot.
    """
    if spacing <= 0.0:
        raise DomainError(f"spacing must be > 0, got {spacing!r}")
    x = env.alpha * spacing
    rho = x * bessel_k1(x)
    if rho > 1.0:
        rho = 1.0
    elif rho < 0.0:
        rho = 0.0
    return rho


def rho_of_zeta(zeta: float) -> float:
    """Edge correlation of an SFCAR field with edge dependence factor zeta.

    Endpoints are exact by continuous extension: rho(0) = 0 and
    rho(1/4) = 1.  For zeta below 1e-4 the series value zeta is returned;
    the closed form is a 0/0-adjacent ratio there and loses precision.
    """
    if not 0.0 <= zeta <= 0.25:
        raise DomainError(f"zeta must lie in [0, 1/4], got {zeta!r}")
    if zeta == 0.0:
        return 0.0
    if zeta == 0.25:
        return 1.0
    if zeta < _SERIES_CUTOFF:
        return zeta
    c = (2.0 / math.pi) * complete_elliptic_k(4.0 * zeta)
    return (c - 1.0) / (4.0 * zeta * c)


def zeta_of_rho(rho: float) -> float:
    """Edge dependence factor reproducing edge correlation rho.

    Numerical inverse of rho_of_zeta by bisection on [0, 1/4]; the map is
    strictly increasing, so bisection is unconditionally robust even
    against the logarithmically diverging elliptic integral at the top.
    """
    if _NEGATIVE_CLAMP <= rho < 0.0:
        rho = 0.0
    if not 0.0 <= rho <= 1.0:
        raise DomainError(f"rho must lie in [0, 1], got {rho!r}")
    if rho == 0.0:
        return 0.0
    if rho == 1.0:
        return 0.25
    if rho < _SERIES_CUTOFF:
        return rho  # exact inverse of the series branch
    lo, hi = 0.0, 0.25
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if rho_of_zeta(mid) < rho:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def zeta_of_spacing(env: PhysicalEnvironment, spacing: float) -> float:
    """Edge dependence factor for a deployment spacing: the composition
    zeta_of_rho(edge_correlation(...)).  Strictly decreasing in spacing."""
    return zeta_of_rho(edge_correlation(env, spacing))
