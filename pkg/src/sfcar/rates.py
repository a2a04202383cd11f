"""Asymptotic per-node information rates of the hidden SFCAR field.

For edge dependence factor zeta < 1/4 and measurement SNR the per-node
Kullback-Leibler and mutual-information rates are the frequency averages

    kli = (1/4pi^2) integral [ 0.5 log(1+s) + 0.5/(1+s) - 0.5 ] dw1 dw2
    mi  = (1/4pi^2) integral   0.5 log(1+s)               dw1 dw2

over [-pi, pi]^2, with the SNR-normalized spectral ratio

    s(w1, w2) = SNR / ( (2/pi) K(4 zeta) (1 - 2 zeta cos w1 - 2 zeta cos w2) ).

The normalization makes the frequency average of s equal to SNR exactly,
separating the SNR and correlation dependencies.  Rates are in nats per
node.  At zeta = 1/4 both rates are defined to be 0 (the limiting value
as correlation becomes perfect); at SNR = 0 they are exactly 0.

Quadrature: tensor-product Gauss-Legendre over [0, pi]^2 (even symmetry,
result x4) on dyadically graded panels concentrated toward the origin,
where the integrand peaks as zeta -> 1/4.  The grading automatically
deepens until the innermost panel resolves the spectral peak width
sqrt((1 - 4 zeta)/zeta), and whole-grid refinement halves every panel
until two successive levels agree to the target tolerance.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from sfcar import kernels
from sfcar.errors import DomainError, QuadratureError
from sfcar.special import complete_elliptic_k

_MAX_REFINEMENTS = 5
_MAX_GRADING_DEPTH = 64


@dataclass(frozen=True)
class QuadratureConfig:
    """Gauss-Legendre panel scheme for the rate integrals.

    panels_per_axis is the base dyadic panel count on [0, pi]; the
    grading deepens beyond it automatically near zeta = 1/4.
    """

    panels_per_axis: int = 8
    points_per_panel: int = 16
    target_tol: float = 1e-9

    def __post_init__(self) -> None:
        if self.panels_per_axis < 1:
            raise DomainError("panels_per_axis must be >= 1")
        if self.points_per_panel < 2:
            raise DomainError("points_per_panel must be >= 2")
        if not self.target_tol > 0.0:
            raise DomainError("target_tol must be > 0")


DEFAULT_QUADRATURE = QuadratureConfig()


@dataclass(frozen=True)
class InfoRates:
    """Per-node information rates in nats: 0 <= kli <= mi."""

    kli: float
    mi: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.kli <= self.mi):
            raise DomainError(f"rates must satisfy 0 <= kli <= mi, got {self!r}")


def snr_spectral_ratio(zeta: float, snr: float, omega1, omega2):
    """SNR-normalized spectral ratio s(omega1, omega2).

    Accepts scalar or array frequencies.  The average of s over the
    frequency square equals snr for every zeta in [0, 1/4).
    """
    _check_zeta_snr(zeta, snr)
    if zeta == 0.25:
        raise DomainError("spectral ratio is undefined at zeta = 1/4")
    cnorm = _spectral_norm(zeta)
    denom = cnorm * (1.0 - 2.0 * zeta * (np.cos(omega1) + np.cos(omega2)))
    return snr / denom


def info_rates(zeta: float, snr: float, config: QuadratureConfig | None = None) -> InfoRates:
    """Both per-node rates in one quadrature pass."""
    _check_zeta_snr(zeta, snr)
    if snr == 0.0 or zeta == 0.25:
        return InfoRates(0.0, 0.0)
    config = config or DEFAULT_QUADRATURE
    cnorm = _spectral_norm(zeta)
    edges = _graded_edges(zeta, config.panels_per_axis)
    prev = None
    for _ in range(_MAX_REFINEMENTS + 1):
        nodes, weights = _panel_rule(tuple(edges), config.points_per_panel)
        cos_nodes = np.cos(nodes)
        raw_kli, raw_mi = kernels.rate_sums(
            cos_nodes, weights, cos_nodes, weights, zeta, snr, cnorm
        )
        cur = (raw_kli / math.pi**2, raw_mi / math.pi**2)
        if prev is not None and _converged(cur, prev, config.target_tol):
            return InfoRates(max(cur[0], 0.0), max(cur[1], 0.0))
        prev = cur
        edges = _split_edges(edges)
    raise QuadratureError(
        f"rate quadrature did not reach tol={config.target_tol} "
        f"after {_MAX_REFINEMENTS} refinements (zeta={zeta}, snr={snr})"
    )


def kli_rate(zeta: float, snr: float, config: QuadratureConfig | None = None) -> float:
    """Per-node Kullback-Leibler rate in nats."""
    return info_rates(zeta, snr, config).kli


def mi_rate(zeta: float, snr: float, config: QuadratureConfig | None = None) -> float:
    """Per-node mutual-information rate in nats."""
    return info_rates(zeta, snr, config).mi


def _check_zeta_snr(zeta: float, snr: float) -> None:
    if not 0.0 <= zeta <= 0.25:
        raise DomainError(f"zeta must lie in [0, 1/4], got {zeta!r}")
    if not snr >= 0.0:
        raise DomainError(f"snr must be >= 0, got {snr!r}")


def _spectral_norm(zeta: float) -> float:
    # (2/pi) K(4 zeta); equals 1 at zeta = 0.
    return (2.0 / math.pi) * complete_elliptic_k(4.0 * zeta)


def _graded_edges(zeta: float, base_panels: int) -> list[float]:
    # Dyadic edges pi * 2^-j on [0, pi].  Depth covers at least the base
    # panel count and deepens so the innermost panel is narrower than half
    # the spectral peak width at the origin.
    if zeta > 0.0:
        delta = max(1.0 - 4.0 * zeta, 1e-18)
        peak_width = math.sqrt(delta / zeta)
    else:
        peak_width = math.pi
    depth = base_panels - 1
    while math.pi * 2.0 ** (-depth) > 0.5 * peak_width and depth < _MAX_GRADING_DEPTH:
        depth += 1
    return [0.0] + [math.pi * 2.0 ** (-j) for j in range(depth, -1, -1)]


def _split_edges(edges: list[float]) -> list[float]:
    out = [edges[0]]
    for a, b in zip(edges[:-1], edges[1:]):
        out.append(0.5 * (a + b))
        out.append(b)
    return out


@lru_cache(maxsize=64)
def _gauss_rule(npts: int):
    x, w = np.polynomial.legendre.leggauss(npts)
    return x, w


@lru_cache(maxsize=256)
def _panel_rule(edges: tuple[float, ...], npts: int):
    x, w = _gauss_rule(npts)
    nodes = []
    weights = []
    for a, b in zip(edges[:-1], edges[1:]):
        half = 0.5 * (b - a)
        nodes.append(half * (x + 1.0) + a)
        weights.append(half * w)
    return np.concatenate(nodes), np.concatenate(weights)


def _converged(cur, prev, tol: float) -> bool:
    return all(
        abs(c - p) <= tol * max(abs(c), 1e-300) for c, p in zip(cur, prev)
    )
