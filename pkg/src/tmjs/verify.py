"""Closed-form versus brute-force checks, runnable as one report.

``quick`` uses fixed seeds and about twenty random configurations; ``full``
uses two hundred and adds grid-refinement and Wigner-grid checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import coherence, dynamics, fock, polynomials, tmss, wigner
from .params import JanusConfig, JanusError, SqueezeParam

REFERENCE_POLYNOMIALS = {
    1: (0, 1, 1),
    2: (0, 0, 4, 16, 4),
    3: (0, 0, 0, 36, 324, 324, 36),
    4: (0, 0, 0, 0, 576, 9216, 20736, 9216, 576),
}

LEVELS = {"quick": 20, "full": 200}


@dataclass(frozen=True)
class CheckResult:
    name: str
    deviation: float
    threshold: float

    @property
    def passed(self) -> bool:
        return bool(self.deviation <= self.threshold)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<32s} deviation={self.deviation:.3e}  threshold={self.threshold:.1e}"


@dataclass(frozen=True)
class VerifyReport:
    level: str
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c.name for c in self.checks if not c.passed]

    def format(self) -> str:
        lines = [c.line() for c in self.checks]
        n_ok = sum(c.passed for c in self.checks)
        lines.append(f"{n_ok}/{len(self.checks)} checks passed ({self.level})")
        return "\n".join(lines)


def random_configs(n: int, seed: int = 0, r_max: float = 1.0, w_min: float = 0.2) -> list:
    """Seeded Janus configurations with uniform phases and weights rescaled to unit length."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        r, s = rng.uniform(0.0, r_max, 2)
        theta, phi, delta = rng.uniform(0.0, 2 * math.pi, 3)
        chi, eta = rng.uniform(w_min, 1.0, 2)
        scale = math.hypot(chi, eta)
        out.append(JanusConfig(SqueezeParam(r, theta), SqueezeParam(s, phi), chi / scale, eta / scale, delta))
    return out


def _rel(a, b) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


# --- individual checks ------------------------------------------------------

def check_polynomial_table() -> float:
    bad = 0
    for k, expected in REFERENCE_POLYNOMIALS.items():
        bad += polynomials.squeezing_polynomial(k).coefficients != expected
    return float(bad)


def check_polynomial_representations(k_max: int = 8) -> float:
    worst = 0.0
    for k in range(k_max + 1):
        poly = polynomials.squeezing_polynomial(k)
        for x in np.arange(1, 10) / 10:
            inner = poly.inner_value(x)
            worst = max(
                worst,
                _rel(polynomials.eval_2f1_terminating(k, x), inner),
                _rel(polynomials.euler_transformed_2f1(k, x), inner),
                _rel(polynomials.binomial_weight_sum(k, x), inner),
                polynomials.legendre_cross_check(k, x),
            )
    return worst


def check_annihilation(params) -> float:
    worst = 0.0
    for p in params:
        c = fock.build_tmss_vector(p).amplitudes
        worst = max(worst, float(np.max(np.abs(c[1:] - p.alpha * c[:-1]), initial=0.0)))
    return worst


def check_su11_identity(params, cutoff: int = 80) -> float:
    worst = 0.0
    for p in params:
        a = fock.su11_matexp_apply(p, cutoff).amplitudes
        b = fock.build_tmss_vector(p, cutoff).amplitudes
        worst = max(worst, float(np.linalg.norm(a - b)))
    return worst


def check_diagonal_moments(params, k_max: int = 5) -> tuple[float, float]:
    single = cross = 0.0
    for p in params:
        v = fock.build_tmss_vector(p, fock.adequate_cutoff(p.x, 2 * k_max))
        for k in range(1, k_max + 1):
            single = max(single, _rel(fock.factorial_moment_single(v, k), math.factorial(k) * p.nbar**k))
            cross = max(cross, _rel(fock.factorial_moment_cross(v, k), polynomials.eval_Fk(k, p.x)))
    return single, cross


def check_kernels(configs, k_max: int = 4) -> float:
    worst = 0.0
    for cfg in configs:
        n = fock.adequate_cutoff(max(cfg.xi.x, cfg.zeta.x), 2 * k_max)
        u = fock.build_tmss_vector(cfg.zeta, n)
        v = fock.build_tmss_vector(cfg.xi, n)
        for k in range(k_max + 1):
            for kind, fn in (("single", coherence.kernel_single), ("cross", coherence.kernel_cross)):
                closed = fn(cfg, k).value
                brute = fock.cross_state_moment(u, v, k, kind)
                worst = max(worst, abs(closed - brute) / max(abs(brute), 1.0))
    return worst


def closed_vs_oracle(cfg: JanusConfig, k_max: int = 4) -> float:
    """Largest relative gap between closed-form and brute-force coherences for one config."""
    v = fock.build_tmjs_vector(cfg, fock.adequate_cutoff(max(cfg.xi.x, cfg.zeta.x), 2 * k_max))
    mean_o = fock.factorial_moment_single(v, 1)
    worst = _rel(coherence.mean_photon_tmjs(cfg), mean_o)
    for k in range(1, k_max + 1):
        gs = fock.factorial_moment_single(v, k) / mean_o**k
        gc = fock.factorial_moment_cross(v, k) / mean_o ** (2 * k)
        worst = max(worst, _rel(coherence.g_single_tmjs(cfg, k), gs),
                    _rel(coherence.g_cross_tmjs(cfg, k), gc))
    return worst


def check_bilinear(configs, degenerate_norm: float = 1e-10) -> float:
    worst = 0.0
    for cfg in configs:
        try:
            if coherence.janus_norm(cfg) < degenerate_norm:
                continue
            worst = max(worst, closed_vs_oracle(cfg))
        except JanusError:
            continue
    return worst


def check_ramsey(n: int = 20) -> float:
    worst = 0.0
    for r in np.linspace(0.0, 1.5, n):
        for phi in np.linspace(0.0, 2 * math.pi, n):
            m = dynamics.ramsey_sequence(r, phi)
            expected = -2.0 * math.cosh(r) * math.sinh(r) * math.sin(phi)
            worst = max(worst, abs(m.beta.real), abs(m.beta.imag - expected), abs(m.defect))
    return worst


def check_schwarzian_null() -> float:
    affine = dynamics.MirrorTrajectory(lambda u: 2.0 * u + 1.0)
    mobius = dynamics.MirrorTrajectory(lambda u: (2.0 * u + 1.0) / (0.5 * u + 3.0))
    return max(abs(dynamics.schwarzian_flux(affine, 0.3)), abs(dynamics.schwarzian_flux(mobius, 0.3)))


def check_schwarzian_exponential(kappa: float = 1.0) -> float:
    traj = dynamics.MirrorTrajectory(lambda u: -math.exp(-kappa * u) / kappa)
    return abs(dynamics.schwarzian_flux(traj, 0.0) - kappa**2 / (48 * math.pi))


def check_janus_switch(r: float = 0.1) -> float:
    worst = 0.0
    for k in range(1, 5):
        cfg = JanusConfig.symmetric(r, math.pi, math.pi)
        worst = max(worst, coherence.g_cross_tmjs(cfg, k) / tmss.g_cross_tmss(k, SqueezeParam(r)))
    return worst


def check_parity(states) -> float:
    return max(abs(wigner.parity_check(s)) for s in states)


def check_wigner_normalization(r: float = 0.8) -> float:
    extent = 4.0 + 2.0 * r
    worst = 0.0
    for delta_rel, delta in ((math.pi, math.pi), (math.pi, 0.0), (math.pi / 2, math.pi)):
        grid = wigner.wigner_grid(wigner.SingleModeJanus.symmetric(r, delta_rel, delta), extent, 201)
        worst = max(worst, abs(grid.integral() - 1.0))
    return worst


def verify_suite(level: str = "quick", seed: int = 1234) -> VerifyReport:
    """Run every invariant; the report lists each with its measured deviation."""
    if level not in LEVELS:
        raise ValueError(f"level must be one of {sorted(LEVELS)}")
    n_cfg = LEVELS[level]
    rng = np.random.default_rng(seed)
    params = [SqueezeParam(r, t) for r, t in zip(rng.uniform(0, 1.2, 10), rng.uniform(0, 2 * math.pi, 10))]
    configs = random_configs(n_cfg, seed)
    single, cross = check_diagonal_moments([SqueezeParam(r) for r in (0.3, 0.8, 1.2)])
    wn = SqueezeParam(0.7, 1.1)
    janus_states = [wigner.SingleModeJanus.symmetric(0.8, d, dd) for d, dd in
                    ((math.pi, math.pi), (math.pi / 2, math.pi), (math.pi, 0.0))]

    checks = [
        CheckResult("polynomial-table", check_polynomial_table(), 0.0),
        CheckResult("polynomial-representations", check_polynomial_representations(), 1e-10),
        CheckResult("annihilation-condition", check_annihilation(params), 1e-12),
        CheckResult("su11-identity", check_su11_identity(params), 1e-8),
        CheckResult("thermal-moments", single, 1e-8),
        CheckResult("cross-moments", cross, 1e-8),
        CheckResult("off-diagonal-kernels", check_kernels(configs[: max(5, n_cfg // 4)]), 1e-10),
        CheckResult("bilinear-closed-vs-oracle", check_bilinear(configs), 1e-6),
        CheckResult("janus-switch", check_janus_switch(), 1e-2),
        CheckResult("wei-norman-residual", dynamics.wei_norman_residuals(wn, np.linspace(0, 1, 1001)), 1e-6),
        CheckResult("ramsey-law", check_ramsey(), 1e-12),
        CheckResult("schwarzian-null", check_schwarzian_null(), 1e-8),
        CheckResult("schwarzian-exponential", check_schwarzian_exponential(), 1e-6),
        CheckResult("wigner-parity", check_parity(janus_states), 1e-6),
    ]
    if level == "full":
        ratio = dynamics.wei_norman_refinement_ratio(wn)
        checks.append(CheckResult("wei-norman-refinement", abs(ratio - 4.0), 0.5))
        checks.append(CheckResult("wigner-normalization", check_wigner_normalization(), 5e-3))
    return VerifyReport(level, tuple(checks))
