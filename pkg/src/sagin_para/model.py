"""System model for split training over a four-tier user/ground/air/space network.

Each user holds a parameter set to train and may process slices of it locally
or push them up a user -> terrestrial -> aerial -> satellite chain.  This module
owns the scenario containers, the channel and rate model, per-hop delay and
energy terms, per-level cost and parameter-training-efficiency (PTE)
accounting, and allocation feasibility checks.  Everything here is plain
vectorised numpy; the iterative optimisers keep their own hot kernels.

Conventions used throughout the package:

* tiers are indexed ``u, t, a, s`` (user, terrestrial, aerial, satellite) and
  level ``k``'s cost covers the transmission hop *into* tier ``k`` plus the
  processing at tier ``k``;
* share matrices are kept dense over every (user, server) pair, not just the
  associated pair, because the association step needs hypothetical costs for
  candidate servers;
* energies are raw Joules everywhere; the configured ``energy_scale`` is
  applied only inside cost/PTE evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Literal

import numpy as np

__all__ = [
    "LinkKind",
    "Topology",
    "UserProfile",
    "ServerProfile",
    "Weights",
    "Scenario",
    "Allocation",
    "MultiplierState",
    "HopDelays",
    "HopEnergies",
    "LinkRates",
    "PairCosts",
    "PteReport",
    "ValidationReport",
    "channel_gain",
    "transmission_rate",
    "link_rates",
    "ship_bits",
    "pair_costs",
    "level_delays",
    "level_energies",
    "attained_delays",
    "pte_terms",
    "p3_objective",
    "validate_allocation",
]

LinkKind = Literal["user_terrestrial", "terrestrial_aerial", "aerial_satellite"]

#: Noise power spectral density for -174 dBm/Hz, in W/Hz.
DEFAULT_NOISE_PSD = 10.0 ** (-20.4)

#: Rates and compute speeds below this floor are clamped before division so
#: that degenerate external allocations yield huge-but-finite costs.
DENOM_FLOOR = 1e-9

_FREE_SPACE_REF_M = 2.6e3  # reference distance of the air/space path-loss fit


# ---------------------------------------------------------------------------
# containers


@dataclass
class Topology:
    """Geometry and propagation state of one network snapshot.

    Distances are kilometres.  Gains are linear power gains per link pair.
    """

    dist_ut_km: np.ndarray  # (N, Mt)
    dist_ta_km: np.ndarray  # (Mt, Ma)
    dist_as_km: np.ndarray  # (Ma, Ms)
    gain_ut: np.ndarray  # (N, Mt)
    gain_ta: np.ndarray  # (Mt, Ma)
    gain_as: np.ndarray  # (Ma, Ms)
    noise_psd: float = DEFAULT_NOISE_PSD

    @property
    def n_users(self) -> int:
        return self.dist_ut_km.shape[0]

    @property
    def n_terrestrial(self) -> int:
        return self.dist_ut_km.shape[1]

    @property
    def n_aerial(self) -> int:
        return self.dist_ta_km.shape[1]

    @property
    def n_satellite(self) -> int:
        return self.dist_as_km.shape[1]


@dataclass
class UserProfile:
    """Per-user task and hardware parameters (all arrays of length N)."""

    params: np.ndarray  # trainable parameter count d_n
    tokens: np.ndarray  # input token count
    label_bits: np.ndarray  # intermediate-result + label payload, bits
    power: np.ndarray  # transmit power, W
    cpu: np.ndarray  # compute speed, FLOPS
    kappa: np.ndarray  # effective capacitance coefficient
    epochs: np.ndarray  # local training epochs
    pref_local: np.ndarray  # preference weight for local processing


@dataclass
class ServerProfile:
    """Per-server parameters for one tier; ``pref`` is (N, M)."""

    tier: Literal["terrestrial", "aerial", "satellite"]
    cpu: np.ndarray
    bandwidth: np.ndarray  # Hz
    power: np.ndarray | None  # W; satellites do not transmit upward
    kappa: np.ndarray
    epochs: np.ndarray
    pref: np.ndarray

    @property
    def count(self) -> int:
        return int(self.cpu.shape[0])


@dataclass
class Weights:
    """Cost weighting and workload conversion constants."""

    omega_t: float = 0.5  # delay weight
    omega_e: float = 0.5  # energy weight
    omega_b: float = 32.0  # bits shipped per offloaded parameter
    omega_f: float = 8.0  # FLOPs per parameter per token
    energy_scale: float = 1e-3  # applied to Joules inside costs only


@dataclass
class Scenario:
    """A complete, immutable problem instance."""

    topology: Topology
    users: UserProfile
    terrestrial: ServerProfile
    aerial: ServerProfile
    satellite: ServerProfile
    weights: Weights = field(default_factory=Weights)

    @property
    def n_users(self) -> int:
        return self.topology.n_users

    def server_tier(self, tier: str) -> ServerProfile:
        return {"terrestrial": self.terrestrial, "aerial": self.aerial,
                "satellite": self.satellite}[tier]

    def workload_per_param(self) -> np.ndarray:
        """FLOPs needed per parameter per epoch, t_n = omega_f * tokens."""
        return self.weights.omega_f * self.users.tokens


@dataclass
class Allocation:
    """Decision variables for one scenario.

    ``x_*`` are one-hot association rows (floats in {0,1}).  ``phi`` holds the
    per-user split fractions over levels (u, t, a, s) and sums to one per row.
    Share matrices carry a value for *every* pair; only entries at associated
    servers count against capacity.  ``delay_bounds`` are the per-level delay
    caps T (u, t, a, s); the optimisers keep them tight at the attained delays.
    """

    x_t: np.ndarray  # (N, Mt)
    x_a: np.ndarray  # (N, Ma)
    x_s: np.ndarray  # (N, Ms)
    phi: np.ndarray  # (N, 4)
    bw_t: np.ndarray  # (N, Mt)
    bw_a: np.ndarray  # (N, Ma)
    bw_s: np.ndarray  # (N, Ms)
    rho_u: np.ndarray  # (N,)
    rho_t: np.ndarray  # (N, Mt)
    rho_a: np.ndarray  # (N, Ma)
    gamma_u: np.ndarray  # (N,)
    gamma_t: np.ndarray  # (N, Mt)
    gamma_a: np.ndarray  # (N, Ma)
    gamma_s: np.ndarray  # (N, Ms)
    delay_bounds: np.ndarray | None = None  # (N, 4)

    def assoc(self, tier: str) -> np.ndarray:
        """Index of the associated server per user for ``tier`` in {t, a, s}."""
        x = {"t": self.x_t, "a": self.x_a, "s": self.x_s}[tier]
        return np.argmax(x, axis=1)

    def copy(self) -> "Allocation":
        kw = {}
        for name in ("x_t", "x_a", "x_s", "phi", "bw_t", "bw_a", "bw_s",
                     "rho_u", "rho_t", "rho_a", "gamma_u", "gamma_t",
                     "gamma_a", "gamma_s"):
            kw[name] = getattr(self, name).copy()
        kw["delay_bounds"] = (None if self.delay_bounds is None
                              else self.delay_bounds.copy())
        return Allocation(**kw)


@dataclass
class MultiplierState:
    """Per-pair auxiliary multipliers of the parametric reformulation.

    ``psi`` carries the level's value-to-cost ratio, ``alpha`` the reciprocal
    cost.  Server tiers are (N, M) over every candidate pair; the user level is
    a length-N vector.
    """

    psi_u: np.ndarray
    alpha_u: np.ndarray
    psi_t: np.ndarray
    alpha_t: np.ndarray
    psi_a: np.ndarray
    alpha_a: np.ndarray
    psi_s: np.ndarray
    alpha_s: np.ndarray


@dataclass
class HopDelays:
    """Per-user delays of the seven chain hops, seconds (arrays of length N)."""

    t_up: np.ndarray  # local processing
    t_ut: np.ndarray  # user -> terrestrial transmission
    t_tp: np.ndarray  # terrestrial processing
    t_tt: np.ndarray  # terrestrial -> aerial transmission
    t_ap: np.ndarray  # aerial processing
    t_at: np.ndarray  # aerial -> satellite transmission
    t_sp: np.ndarray  # satellite processing


@dataclass
class HopEnergies:
    """Per-user energies of the seven chain hops, Joules (length N)."""

    e_up: np.ndarray
    e_ut: np.ndarray
    e_tp: np.ndarray
    e_tt: np.ndarray
    e_ap: np.ndarray
    e_at: np.ndarray
    e_sp: np.ndarray

    def total(self) -> np.ndarray:
        return (self.e_up + self.e_ut + self.e_tp + self.e_tt + self.e_ap
                + self.e_at + self.e_sp)


@dataclass
class LinkRates:
    """Achievable rates in bit/s for every candidate pair.

    Upstream hops (into aerial and satellite tiers) depend on the transmitter
    chosen at the previous tier, so these tables are pinned at the allocation's
    current associations.
    """

    r_ut: np.ndarray  # (N, Mt)
    r_ta: np.ndarray  # (N, Ma)
    r_as: np.ndarray  # (N, Ms)


@dataclass
class PairCosts:
    """Cost-if-associated per level: user level (N,), server levels (N, M)."""

    cost_u: np.ndarray
    cost_t: np.ndarray
    cost_a: np.ndarray
    cost_s: np.ndarray


@dataclass
class PteReport:
    """PTE decomposition at the associated servers.

    ``numerator`` is c * phi * d, ``cost`` the weighted delay+energy cost and
    ``ratio`` their quotient (zero where the level trains nothing); all are
    (N, 4) over levels u/t/a/s.  ``total`` is the scalar objective value.
    """

    numerator: np.ndarray
    cost: np.ndarray
    ratio: np.ndarray
    total: float


@dataclass
class ValidationReport:
    """Outcome of feasibility screening; never raises.

    ``residuals`` maps check name to the worst violation magnitude (0 when the
    check passes exactly).  ``ok`` is True when every residual is within
    tolerance.
    """

    ok: bool
    tol: float
    residuals: dict[str, float]

    def worst(self) -> tuple[str, float]:
        name = max(self.residuals, key=lambda k: self.residuals[k])
        return name, self.residuals[name]


# ---------------------------------------------------------------------------
# channel and rate model


def channel_gain(distance_km, kind: LinkKind):
    """Linear power gain of a link at the given distance.

    The ground access link uses the urban-macro fit ``128.1 + 37.6 log10(d_km)``
    dB; both elevated links (ground-to-air and air-to-space) use
    ``116.7 + 15 log10(d_m / 2.6e3)`` dB with the distance in metres.
    """
    d = np.asarray(distance_km, dtype=float)
    if kind == "user_terrestrial":
        pl_db = 128.1 + 37.6 * np.log10(d)
    elif kind in ("terrestrial_aerial", "aerial_satellite"):
        pl_db = 116.7 + 15.0 * np.log10(d * 1e3 / _FREE_SPACE_REF_M)
    else:
        raise ValueError(f"unknown link kind: {kind!r}")
    gain = 10.0 ** (-pl_db / 10.0)
    return float(gain) if np.isscalar(distance_km) else gain


def transmission_rate(bw_share, bandwidth_hz, power_share, power_w, gain,
                      noise_psd: float = DEFAULT_NOISE_PSD):
    """Shannon rate of a link in bit/s.

    The receiver grants ``bw_share`` of its ``bandwidth_hz``; the transmitter
    spends ``power_share`` of ``power_w``.  Noise power scales with the granted
    bandwidth.  A zero bandwidth share yields rate zero (the zero-bandwidth
    limit of the formula).
    """
    w = np.asarray(bw_share, dtype=float) * np.asarray(bandwidth_hz, dtype=float)
    sig = np.asarray(power_share, dtype=float) * np.asarray(power_w, dtype=float) \
        * np.asarray(gain, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        snr = np.where(w > 0.0, sig / (noise_psd * np.where(w > 0.0, w, 1.0)), 0.0)
        rate = np.where(w > 0.0, w * np.log2(1.0 + snr), 0.0)
    return float(rate) if rate.ndim == 0 else rate


def link_rates(sc: Scenario, alloc: Allocation) -> LinkRates:
    """Rate tables for every candidate pair, upstream hops pinned at ``alloc``.

    ``r_ta[n, m]`` is the rate from user n's *current* terrestrial server to
    aerial candidate m, using that server's power share for n and candidate m's
    bandwidth share for n; similarly for ``r_as``.
    """
    topo = sc.topology
    n = sc.n_users
    rows = np.arange(n)

    r_ut = transmission_rate(
        alloc.bw_t, sc.terrestrial.bandwidth[None, :],
        alloc.rho_u[:, None], sc.users.power[:, None],
        topo.gain_ut, topo.noise_psd)

    mt = alloc.assoc("t")
    r_ta = transmission_rate(
        alloc.bw_a, sc.aerial.bandwidth[None, :],
        alloc.rho_t[rows, mt][:, None], sc.terrestrial.power[mt][:, None],
        topo.gain_ta[mt, :], topo.noise_psd)

    ma = alloc.assoc("a")
    r_as = transmission_rate(
        alloc.bw_s, sc.satellite.bandwidth[None, :],
        alloc.rho_a[rows, ma][:, None], sc.aerial.power[ma][:, None],
        topo.gain_as[ma, :], topo.noise_psd)

    return LinkRates(r_ut=r_ut, r_ta=r_ta, r_as=r_as)


def ship_bits(sc: Scenario, phi: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Payload bits entering each server tier: remaining parameters plus labels."""
    d = sc.users.params
    lab = sc.users.label_bits
    wb = sc.weights.omega_b
    bits_t = wb * (1.0 - phi[:, 0]) * d + lab
    bits_a = wb * (1.0 - phi[:, 0] - phi[:, 1]) * d + lab
    bits_s = wb * (1.0 - phi[:, 0] - phi[:, 1] - phi[:, 2]) * d + lab
    return bits_t, bits_a, bits_s


def _clamped(x: np.ndarray) -> np.ndarray:
    return np.maximum(x, DENOM_FLOOR)


def pair_costs(sc: Scenario, alloc: Allocation,
               rates: LinkRates | None = None) -> PairCosts:
    """Weighted delay+energy cost of each level for every candidate pair.

    Server-level entries are evaluated as if the pair were associated (the
    association indicator set to one); that is what the multiplier updates and
    the association step both need.  Energies are scaled by ``energy_scale``
    inside the cost, delays are not.
    """
    if rates is None:
        rates = link_rates(sc, alloc)
    w = sc.weights
    we = w.omega_e * w.energy_scale
    u = sc.users
    n = sc.n_users
    rows = np.arange(n)
    t_n = sc.workload_per_param()
    d = u.params
    phi = alloc.phi

    # user level: processing only
    speed_u = _clamped(alloc.gamma_u * u.cpu)
    load_u = u.epochs * t_n * phi[:, 0] * d
    cost_u = w.omega_t * load_u / speed_u + we * u.kappa * load_u * speed_u ** 2

    bits_t, bits_a, bits_s = ship_bits(sc, phi)

    def tier_cost(srv: ServerProfile, bits, rate, tx_share, tx_power, gamma, level):
        # transmission into the tier + processing at the tier
        per_bit = w.omega_t + we * tx_share * tx_power
        trans = per_bit[:, None] * bits[:, None] / _clamped(rate)
        speed = _clamped(gamma * srv.cpu[None, :])
        load = srv.epochs[None, :] * (t_n * phi[:, level] * d)[:, None]
        proc = w.omega_t * load / speed + we * srv.kappa[None, :] * load * speed ** 2
        return trans + proc

    cost_t = tier_cost(sc.terrestrial, bits_t, rates.r_ut,
                       alloc.rho_u, u.power, alloc.gamma_t, 1)
    mt = alloc.assoc("t")
    cost_a = tier_cost(sc.aerial, bits_a, rates.r_ta,
                       alloc.rho_t[rows, mt], sc.terrestrial.power[mt],
                       alloc.gamma_a, 2)
    ma = alloc.assoc("a")
    cost_s = tier_cost(sc.satellite, bits_s, rates.r_as,
                       alloc.rho_a[rows, ma], sc.aerial.power[ma],
                       alloc.gamma_s, 3)

    return PairCosts(cost_u=cost_u, cost_t=cost_t, cost_a=cost_a, cost_s=cost_s)


# ---------------------------------------------------------------------------
# per-hop terms at the associated servers


def level_delays(sc: Scenario, alloc: Allocation,
                 rates: LinkRates | None = None) -> HopDelays:
    """Delays of the seven hops at the associated servers."""
    if rates is None:
        rates = link_rates(sc, alloc)
    u = sc.users
    n = sc.n_users
    rows = np.arange(n)
    t_n = sc.workload_per_param()
    d = u.params
    phi = alloc.phi
    mt, ma, ms = alloc.assoc("t"), alloc.assoc("a"), alloc.assoc("s")
    bits_t, bits_a, bits_s = ship_bits(sc, phi)

    t_up = u.epochs * t_n * phi[:, 0] * d / _clamped(alloc.gamma_u * u.cpu)
    t_ut = bits_t / _clamped(rates.r_ut[rows, mt])
    t_tp = sc.terrestrial.epochs[mt] * t_n * phi[:, 1] * d \
        / _clamped(alloc.gamma_t[rows, mt] * sc.terrestrial.cpu[mt])
    t_tt = bits_a / _clamped(rates.r_ta[rows, ma])
    t_ap = sc.aerial.epochs[ma] * t_n * phi[:, 2] * d \
        / _clamped(alloc.gamma_a[rows, ma] * sc.aerial.cpu[ma])
    t_at = bits_s / _clamped(rates.r_as[rows, ms])
    t_sp = sc.satellite.epochs[ms] * t_n * phi[:, 3] * d \
        / _clamped(alloc.gamma_s[rows, ms] * sc.satellite.cpu[ms])
    return HopDelays(t_up, t_ut, t_tp, t_tt, t_ap, t_at, t_sp)


def level_energies(sc: Scenario, alloc: Allocation,
                   rates: LinkRates | None = None) -> HopEnergies:
    """Energies of the seven hops at the associated servers, raw Joules."""
    if rates is None:
        rates = link_rates(sc, alloc)
    delays = level_delays(sc, alloc, rates)
    u = sc.users
    n = sc.n_users
    rows = np.arange(n)
    t_n = sc.workload_per_param()
    d = u.params
    phi = alloc.phi
    mt, ma = alloc.assoc("t"), alloc.assoc("a")

    speed_u = _clamped(alloc.gamma_u * u.cpu)
    e_up = u.epochs * u.kappa * t_n * phi[:, 0] * d * speed_u ** 2
    e_ut = alloc.rho_u * u.power * delays.t_ut

    speed_t = _clamped(alloc.gamma_t[rows, mt] * sc.terrestrial.cpu[mt])
    e_tp = sc.terrestrial.epochs[mt] * sc.terrestrial.kappa[mt] \
        * t_n * phi[:, 1] * d * speed_t ** 2
    e_tt = alloc.rho_t[rows, mt] * sc.terrestrial.power[mt] * delays.t_tt

    speed_a = _clamped(alloc.gamma_a[rows, ma] * sc.aerial.cpu[ma])
    e_ap = sc.aerial.epochs[ma] * sc.aerial.kappa[ma] \
        * t_n * phi[:, 2] * d * speed_a ** 2
    e_at = alloc.rho_a[rows, ma] * sc.aerial.power[ma] * delays.t_at

    ms = alloc.assoc("s")
    speed_s = _clamped(alloc.gamma_s[rows, ms] * sc.satellite.cpu[ms])
    e_sp = sc.satellite.epochs[ms] * sc.satellite.kappa[ms] \
        * t_n * phi[:, 3] * d * speed_s ** 2
    return HopEnergies(e_up, e_ut, e_tp, e_tt, e_ap, e_at, e_sp)


def attained_delays(sc: Scenario, alloc: Allocation,
                    rates: LinkRates | None = None) -> np.ndarray:
    """Per-level delay totals (N, 4): the tight values for the delay bounds."""
    h = level_delays(sc, alloc, rates)
    return np.stack([h.t_up, h.t_ut + h.t_tp, h.t_tt + h.t_ap,
                     h.t_at + h.t_sp], axis=1)


def pte_terms(sc: Scenario, alloc: Allocation,
              rates: LinkRates | None = None) -> PteReport:
    """PTE decomposition and total objective at the associated servers.

    A level whose split fraction is zero trains nothing: its ratio is zero by
    convention regardless of the (possibly zero) cost.
    """
    if rates is None:
        rates = link_rates(sc, alloc)
    costs = pair_costs(sc, alloc, rates)
    n = sc.n_users
    rows = np.arange(n)
    mt, ma, ms = alloc.assoc("t"), alloc.assoc("a"), alloc.assoc("s")
    d = sc.users.params
    phi = alloc.phi

    numerator = np.stack([
        sc.users.pref_local * phi[:, 0] * d,
        sc.terrestrial.pref[rows, mt] * phi[:, 1] * d,
        sc.aerial.pref[rows, ma] * phi[:, 2] * d,
        sc.satellite.pref[rows, ms] * phi[:, 3] * d,
    ], axis=1)
    cost = np.stack([
        costs.cost_u,
        costs.cost_t[rows, mt],
        costs.cost_a[rows, ma],
        costs.cost_s[rows, ms],
    ], axis=1)
    active = phi > 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(active & (cost > 0.0), numerator / np.where(cost > 0.0, cost, 1.0), 0.0)
    return PteReport(numerator=numerator, cost=cost, ratio=ratio,
                     total=float(ratio.sum()))


def p3_objective(sc: Scenario, alloc: Allocation, mult: MultiplierState,
                 rates: LinkRates | None = None,
                 costs: PairCosts | None = None) -> float:
    """Parametric objective sum(alpha * (c*phi*d - psi * x * cost)) over all pairs.

    The reward term runs over every candidate pair; the cost term carries the
    association indicator, so it contributes only at associated servers (or
    fractionally for a relaxed x).
    """
    if costs is None:
        costs = pair_costs(sc, alloc, rates)
    d = sc.users.params
    phi = alloc.phi

    val = float(np.sum(mult.alpha_u * (sc.users.pref_local * phi[:, 0] * d
                                       - mult.psi_u * costs.cost_u)))
    for pref, x, level, psi, alpha, cost in (
        (sc.terrestrial.pref, alloc.x_t, 1, mult.psi_t, mult.alpha_t, costs.cost_t),
        (sc.aerial.pref, alloc.x_a, 2, mult.psi_a, mult.alpha_a, costs.cost_a),
        (sc.satellite.pref, alloc.x_s, 3, mult.psi_s, mult.alpha_s, costs.cost_s),
    ):
        reward = pref * (phi[:, level] * d)[:, None]
        val += float(np.sum(alpha * (reward - psi * x * cost)))
    return val


# ---------------------------------------------------------------------------
# feasibility


def validate_allocation(sc: Scenario, alloc: Allocation,
                        tol: float = 1e-8) -> ValidationReport:
    """Screen an allocation against every constraint; reports, never throws."""
    res: dict[str, float] = {}

    def record(name: str, violation) -> None:
        v = float(np.max(violation)) if np.size(violation) else 0.0
        res[name] = max(v, 0.0)

    for tier, x in (("t", alloc.x_t), ("a", alloc.x_a), ("s", alloc.x_s)):
        record(f"x_{tier}_binary", np.abs(x * (x - 1.0)))
        record(f"x_{tier}_rowsum", np.abs(x.sum(axis=1) - 1.0))

    record("phi_box_low", -alloc.phi)
    record("phi_box_high", alloc.phi - 1.0)
    record("phi_rowsum", np.abs(alloc.phi.sum(axis=1) - 1.0))

    shares = {
        "bw_t": alloc.bw_t, "bw_a": alloc.bw_a, "bw_s": alloc.bw_s,
        "rho_u": alloc.rho_u, "rho_t": alloc.rho_t, "rho_a": alloc.rho_a,
        "gamma_u": alloc.gamma_u, "gamma_t": alloc.gamma_t,
        "gamma_a": alloc.gamma_a, "gamma_s": alloc.gamma_s,
    }
    for name, arr in shares.items():
        record(f"{name}_box_low", -arr)
        record(f"{name}_box_high", arr - 1.0)

    caps = [
        ("bw_t_cap", alloc.x_t, alloc.bw_t),
        ("bw_a_cap", alloc.x_a, alloc.bw_a),
        ("bw_s_cap", alloc.x_s, alloc.bw_s),
        ("gamma_t_cap", alloc.x_t, alloc.gamma_t),
        ("gamma_a_cap", alloc.x_a, alloc.gamma_a),
        ("gamma_s_cap", alloc.x_s, alloc.gamma_s),
        ("rho_t_cap", alloc.x_t, alloc.rho_t),
        ("rho_a_cap", alloc.x_a, alloc.rho_a),
    ]
    for name, x, share in caps:
        record(name, (x * share).sum(axis=0) - 1.0)

    if alloc.delay_bounds is not None:
        attained = attained_delays(sc, alloc)
        record("delay_bounds", attained - alloc.delay_bounds)

    ok = all(v <= tol for v in res.values())
    return ValidationReport(ok=ok, tol=tol, residuals=res)
