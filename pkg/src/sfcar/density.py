"""Density sweep and argmax: which lattice size extracts the most
information from a fixed area and energy budget.

For each candidate n the evaluation chain runs in the model's natural
order: geometry (d_n, mu_n), per-edge and total communication energy,
sensing split E_s, SNR = beta E_s, spacing -> edge correlation -> edge
dependence factor, per-node rates, and finally network totals
(2n+1)^2 * rate.  The objective is non-concave in general (the KL total
can develop secondary structure from the correlation benefit at low
SNR), so the search is an exhaustive sweep over integer n.
"""

from dataclasses import dataclass
from enum import Enum

from sfcar.correlation import PhysicalEnvironment, edge_correlation, zeta_of_rho
from sfcar.errors import (
    DomainError,
    InfeasibleDensityError,
    NoFeasibleDensityError,
)
from sfcar.network import (
    Deployment,
    EnergyModel,
    node_snr,
    sensing_energy_per_node,
    total_information,
)
from sfcar.rates import DEFAULT_QUADRATURE, QuadratureConfig, info_rates

N_MAX_CAP = 500


class Objective(str, Enum):
    """Which network total the optimizer maximizes."""

    KLI = "kli"
    MI = "mi"


@dataclass(frozen=True)
class ScenarioConfig:
    """Everything a sweep needs.

    n_max = None means "up to the feasibility boundary", i.e. the first
    infeasible lattice size, capped at N_MAX_CAP.
    """

    half_width: float
    energy: EnergyModel
    environment: PhysicalEnvironment
    n_min: int = 1
    n_max: int | None = None
    objective: Objective = Objective.KLI
    quadrature: QuadratureConfig = DEFAULT_QUADRATURE

    def __post_init__(self) -> None:
        if self.n_min < 1:
            raise DomainError(f"n_min must be >= 1, got {self.n_min!r}")
        if self.n_max is not None and self.n_max < self.n_min:
            raise DomainError(
                f"need n_min <= n_max, got {self.n_min!r} > {self.n_max!r}"
            )


@dataclass(frozen=True)
class SweepRow:
    """One density candidate with every derived quantity.

    Infeasible rows keep their geometric fields (they depend only on n)
    and carry None for the energy-dependent ones; values are never
    fabricated.
    """

    n: int
    mu_n: float
    d_n: float
    rho: float
    zeta: float
    e_s: float | None
    snr: float | None
    kli_rate: float | None
    mi_rate: float | None
    total_kli: float | None
    total_mi: float | None
    feasible: bool

    def objective_total(self, objective: Objective) -> float | None:
        return self.total_kli if objective is Objective.KLI else self.total_mi


def evaluate_density(config: ScenarioConfig, n: int) -> SweepRow:
    """Evaluate one lattice size; infeasibility is encoded, not raised."""
    deployment = Deployment(config.half_width, n)
    spacing = deployment.spacing
    rho = edge_correlation(config.environment, spacing)
    zeta = zeta_of_rho(rho)
    try:
        e_s = sensing_energy_per_node(config.energy, deployment)
    except InfeasibleDensityError:
        return SweepRow(
            n=n,
            mu_n=deployment.density,
            d_n=spacing,
            rho=rho,
            zeta=zeta,
            e_s=None,
            snr=None,
            kli_rate=None,
            mi_rate=None,
            total_kli=None,
            total_mi=None,
            feasible=False,
        )
    snr = node_snr(config.energy, e_s)
    rates = info_rates(zeta, snr, config.quadrature)
    total_kli, total_mi = total_information(deployment, rates)
    return SweepRow(
        n=n,
        mu_n=deployment.density,
        d_n=spacing,
        rho=rho,
        zeta=zeta,
        e_s=e_s,
        snr=snr,
        kli_rate=rates.kli,
        mi_rate=rates.mi,
        total_kli=total_kli,
        total_mi=total_mi,
        feasible=True,
    )


def feasibility_boundary(config: ScenarioConfig) -> int:
    """Smallest n >= n_min whose communication energy exhausts the budget,
    capped at N_MAX_CAP.  For nu >= 2 total communication energy is
    increasing in n, so everything beyond the boundary is infeasible too."""
    for n in range(config.n_min, N_MAX_CAP + 1):
        try:
            sensing_energy_per_node(config.energy, Deployment(config.half_width, n))
        except InfeasibleDensityError:
            return n
    return N_MAX_CAP


def resolve_n_max(config: ScenarioConfig) -> int:
    return config.n_max if config.n_max is not None else feasibility_boundary(config)


def sweep(config: ScenarioConfig) -> list[SweepRow]:
    """One SweepRow per n in [n_min, n_max], ascending."""
    n_max = resolve_n_max(config)
    return [evaluate_density(config, n) for n in range(config.n_min, n_max + 1)]


def optimize(config: ScenarioConfig) -> SweepRow:
    """The feasible row maximizing the configured objective total.

    Ties break toward smaller n.  Raises NoFeasibleDensityError when no
    candidate is feasible.
    """
    best: SweepRow | None = None
    for row in sweep(config):
        if not row.feasible:
            continue
        if best is None or row.objective_total(config.objective) > best.objective_total(
            config.objective
        ):
            best = row
    if best is None:
        raise NoFeasibleDensityError(
            "no feasible density in the configured range"
        )
    return best
